#include "bek/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace bek::registry {

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    }
    return "error";
}

namespace {

IdentityReport run_point(const IdentitySpec& spec, const Inputs& in, const identities::Mutation& m) {
    IdentityReport rep;
    rep.identity = spec.name;
    rep.inputs = in;
    const auto start = std::chrono::steady_clock::now();
    try {
        Sides sides = spec.evaluate(in, m);
        rep.difference = sides.difference();
        rep.status = rep.difference.is_zero() ? Status::Pass : Status::Fail;
        rep.lhs = std::move(sides.lhs);
        rep.rhs = std::move(sides.rhs);
    } catch (const std::domain_error& e) {
        rep.status = Status::Error;
        rep.error = std::string(e.what()) + " (validity: " + spec.validity + ")";
    } catch (const std::invalid_argument& e) {
        rep.status = Status::Error;
        rep.error = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

std::vector<IdentityReport> verify(const IdentitySpec& spec, const std::vector<Inputs>& grid,
                                   const VerifyOptions& options) {
    std::vector<IdentityReport> reports(grid.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(grid.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) reports[i] = run_point(spec, grid[i], options.mutation);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < grid.size(); i = next++)
                    reports[i] = run_point(spec, grid[i], options.mutation);
            });
    }
    return reports;
}

}  // namespace bek::registry
