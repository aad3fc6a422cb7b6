// bek: command-line front end for identity verification, sequence tables and
// Dirichlet-moment Monte Carlo checks.
//
// Exit status: 0 all checks pass, 1 an identity or statistical check failed,
// 2 usage or domain error.

#include "bek/registry.hpp"
#include "bek/report.hpp"
#include "bek/stochastic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unistd.h>

namespace {

using namespace bek;
using registry::IdentityReport;
using registry::Inputs;
using registry::Status;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NRange {
    int lo = 0, hi = 0, step = 1;
};

// "A..B", "A..B:S" or "A".
NRange parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw UsageError("bad --n range '" + text + "' (expected A..B or A..B:S)");
        return v;
    };
    NRange r;
    std::string body = text;
    if (const auto colon = body.find(':'); colon != std::string::npos) {
        r.step = to_int(body.substr(colon + 1));
        body = body.substr(0, colon);
    }
    if (const auto dots = body.find(".."); dots != std::string::npos) {
        r.lo = to_int(body.substr(0, dots));
        r.hi = to_int(body.substr(dots + 2));
    } else {
        r.lo = r.hi = to_int(body);
    }
    if (r.step < 1) throw UsageError("--n step must be positive");
    if (r.hi < r.lo) throw UsageError("--n range is empty: " + text);
    return r;
}

bool use_color() {
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color && *no_color) return false;
    return isatty(STDOUT_FILENO) != 0;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

int exit_for(const std::vector<IdentityReport>& reports) {
    bool fail = false;
    for (const auto& r : reports) {
        if (r.status == Status::Error) return kExitUsage;
        fail = fail || r.status == Status::Fail;
    }
    return fail ? kExitFail : kExitPass;
}

struct OutputOptions {
    std::string format = "text";
    bool timing = false;
};

struct Batch {
    std::string identity;
    std::vector<IdentityReport> reports;
};

void emit(const std::vector<Batch>& batches, const OutputOptions& out) {
    const auto format = report::parse_format(out.format);
    if (format == report::Format::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& b : batches)
            for (const auto& r : b.reports) arr.push_back(report::to_json(r, out.timing));
        std::cout << arr.dump(2) << '\n';
    } else if (format == report::Format::Csv) {
        std::cout << report::csv_header() << '\n';
        for (const auto& b : batches)
            for (const auto& r : b.reports) std::cout << report::csv_row(r, out.timing) << '\n';
    } else {
        const report::TextStyle style{use_color(), out.timing};
        for (const auto& b : batches) report::write_text(std::cout, b.identity, b.reports, style);
    }
}

std::string valid_names() {
    std::string s;
    for (const auto& n : registry::names()) s += (s.empty() ? "" : ", ") + n;
    return s;
}

struct VerifyArgs {
    std::string identity;
    std::string n_range;
    std::optional<int> k;
    std::string params;
    OutputOptions out;
    std::optional<std::size_t> flip;
    unsigned threads = default_threads();
};

std::vector<Inputs> build_grid(const registry::IdentitySpec& spec, const VerifyArgs& args) {
    const bool takes_k = std::find(spec.arity.begin(), spec.arity.end(), "k") != spec.arity.end();
    if (args.k && !takes_k) throw UsageError(spec.name + " does not take --k");
    registry::Params params;
    if (!args.params.empty()) {
        try {
            params = registry::parse_params(args.params);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --params: ") + e.what());
        }
        for (const auto& [key, values] : params)
            if (std::find(spec.arity.begin(), spec.arity.end(), key) == spec.arity.end())
                throw UsageError(spec.name + " does not take parameter '" + key + "'");
    }
    if (args.n_range.empty()) {
        if (!params.empty()) throw UsageError("--params requires --n");
        auto grid = spec.grid();
        if (args.k) std::erase_if(grid, [&](const Inputs& in) { return in.k != args.k; });
        if (grid.empty()) throw UsageError("no default grid points for the requested k");
        return grid;
    }
    const NRange range = parse_range(args.n_range);
    std::vector<Inputs> grid;
    for (int n = range.lo; n <= range.hi; n += range.step) {
        if (!params.empty()) {
            grid.push_back(Inputs{n, args.k, params});
        } else {
            auto part = spec.expand(n, args.k);
            grid.insert(grid.end(), part.begin(), part.end());
        }
    }
    return grid;
}

int cmd_verify(const VerifyArgs& args) {
    const auto* spec = registry::find(args.identity);
    if (!spec) throw UsageError("unknown identity '" + args.identity + "'; valid names: " + valid_names());
    report::parse_format(args.out.format);
    registry::VerifyOptions opts;
    opts.mutation.flip_rhs_term = args.flip;
    opts.threads = args.threads;
    std::vector<Batch> batches{{spec->name, registry::verify(*spec, build_grid(*spec, args), opts)}};
    emit(batches, args.out);
    const int code = exit_for(batches.front().reports);
    if (code == kExitUsage)
        for (const auto& r : batches.front().reports)
            if (r.status == Status::Error) {
                std::cerr << "bek: " << spec->name << " at " << report::describe_inputs(r.inputs) << ": " << r.error
                          << '\n';
                break;
            }
    return code;
}

int cmd_verify_all(const OutputOptions& out, std::optional<std::size_t> flip, unsigned threads) {
    report::parse_format(out.format);
    registry::VerifyOptions opts;
    opts.mutation.flip_rhs_term = flip;
    opts.threads = threads;
    std::vector<Batch> batches;
    int code = kExitPass;
    for (const auto& spec : registry::all()) {
        batches.push_back({spec.name, registry::verify(spec, spec.grid(), opts)});
        code = std::max(code, exit_for(batches.back().reports));
    }
    emit(batches, out);
    return code;
}

int cmd_list(const std::string& format) {
    const auto fmt = report::parse_format(format);
    if (fmt == report::Format::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : registry::all()) {
            nlohmann::ordered_json j;
            j["name"] = s.name;
            j["form"] = s.form == registry::Form::Number ? "number" : "polynomial";
            j["params"] = s.arity;
            j["validity"] = s.validity;
            j["default_grid"] = s.default_grid;
            j["summary"] = s.summary;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
        return kExitPass;
    }
    if (fmt == report::Format::Csv) {
        std::cout << "name,form,params,validity,default_grid,summary\n";
        for (const auto& s : registry::all()) {
            std::string params;
            for (const auto& p : s.arity) params += (params.empty() ? "" : " ") + p;
            std::cout << s.name << ',' << (s.form == registry::Form::Number ? "number" : "polynomial") << ','
                      << params << ',' << report::csv_escape(s.validity) << ','
                      << report::csv_escape(s.default_grid) << ',' << report::csv_escape(s.summary) << '\n';
        }
        return kExitPass;
    }
    for (const auto& s : registry::all()) {
        std::cout << s.name << "  [" << (s.form == registry::Form::Number ? "number" : "polynomial") << "]  "
                  << s.summary << '\n';
        std::cout << "    validity: " << s.validity << '\n';
        if (!s.arity.empty()) {
            std::string params;
            for (const auto& p : s.arity) params += (params.empty() ? "" : ", ") + p;
            std::cout << "    params:   " << params << '\n';
        }
        std::cout << "    grid:     " << s.default_grid << '\n';
    }
    return kExitPass;
}

struct McArgs {
    std::string a, l;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    double sigma = 4.0;
    std::string format = "text";
    unsigned threads = default_threads();
};

int cmd_mc(const McArgs& args) {
    const auto fmt = report::parse_format(args.format);
    stochastic::MomentQuery q;
    try {
        const auto shapes = registry::parse_params("a=" + args.a);
        q.a = shapes.at("a");
        std::stringstream ss(args.l);
        for (std::string tok; std::getline(ss, tok, ',');) {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad exponent '" + tok + "'");
            q.l.push_back(v);
        }
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --a/--l: ") + e.what());
    }
    if (q.a.size() < 2) throw UsageError("mc needs at least two shape parameters");
    q.samples = args.samples;
    q.seed = args.seed;
    const auto est = stochastic::dirichlet_moment_mc(q, args.threads);
    const bool ok = est.within(args.sigma);
    const double z = est.stderr_ > 0 ? est.deviation() / est.stderr_ : 0.0;
    if (fmt == report::Format::Json) {
        nlohmann::ordered_json j;
        j["a"] = nlohmann::ordered_json::array();
        for (const auto& v : q.a) j["a"].push_back(v.str());
        j["l"] = q.l;
        j["samples"] = est.n_samples;
        j["seed"] = q.seed;
        j["mean"] = est.mean;
        j["stderr"] = est.stderr_;
        j["exact"] = est.exact.str();
        j["z"] = z;
        j["sigma"] = args.sigma;
        j["status"] = ok ? "pass" : "fail";
        std::cout << j.dump(2) << '\n';
    } else if (fmt == report::Format::Csv) {
        std::cout << "samples,seed,mean,stderr,exact,z,sigma,status\n"
                  << std::setprecision(17) << est.n_samples << ',' << q.seed << ',' << est.mean << ','
                  << est.stderr_ << ',' << est.exact << ',' << z << ',' << args.sigma << ','
                  << (ok ? "pass" : "fail") << '\n';
    } else {
        std::cout << std::setprecision(10) << (ok ? "PASS" : "FAIL") << " mc: mean " << est.mean << " +- "
                  << est.stderr_ << ", exact " << est.exact << " (" << est.exact.to_double() << "), z = " << z
                  << ", tolerance " << args.sigma << " sigma, N = " << est.n_samples << '\n';
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Bernoulli and Euler convolution identities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List registered identities with validity and default grids");
    std::string list_format = "text";
    list->add_option("--format", list_format, "text, json or csv");

    auto* tables = app.add_subcommand("tables", "Print B_n, E_n, G_n, B_n(x), E_n(x)");
    int max_n = 6;
    std::string tables_format = "text";
    tables->add_option("--max-n", max_n, "Largest index (default 6)");
    tables->add_option("--format", tables_format, "text, json or csv");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Verify one identity over a grid");
    verify->add_option("--identity", va.identity, "Registry name (see `bek list`)")->required();
    verify->add_option("--n", va.n_range, "Range A..B or A..B:S (default: the entry's grid)");
    verify->add_option("--k", va.k, "Order k for k-fold entries");
    verify->add_option("--params", va.params, "e.g. a=1/2,b=3/2 or a_vec=1,2,1/2 or p=1/2 or epsilon=1/3");
    verify->add_option("--format", va.out.format, "text, json or csv");
    verify->add_flag("--timing", va.out.timing, "Include elapsed_ms");
    verify->add_option("--flip-rhs-term", va.flip, "Negate the K-th right-hand summand (harness self-test)");
    verify->add_option("--threads", va.threads, "Worker threads");

    OutputOptions all_out;
    std::optional<std::size_t> all_flip;
    unsigned all_threads = default_threads();
    auto* verify_all = app.add_subcommand("verify-all", "Verify every entry on its default grid");
    verify_all->add_option("--format", all_out.format, "text, json or csv");
    verify_all->add_flag("--timing", all_out.timing, "Include elapsed_ms");
    verify_all->add_option("--flip-rhs-term", all_flip, "Negate the K-th right-hand summand (harness self-test)");
    verify_all->add_option("--threads", all_threads, "Worker threads");

    McArgs ma;
    auto* mc = app.add_subcommand("mc", "Monte Carlo check of a Dirichlet mixed moment");
    mc->add_option("--a", ma.a, "Shape parameters, e.g. 1,2,1/2")->required();
    mc->add_option("--l", ma.l, "Exponents, e.g. 2,1,3")->required();
    mc->add_option("--samples", ma.samples, "Number of samples (default 1000000)");
    mc->add_option("--seed", ma.seed, "Master seed (default 42)");
    mc->add_option("--sigma", ma.sigma, "Tolerance in standard errors (default 4)");
    mc->add_option("--format", ma.format, "text, json or csv");
    mc->add_option("--threads", ma.threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*list) return cmd_list(list_format);
        if (*tables) {
            report::write_table(std::cout, max_n, report::parse_format(tables_format));
            return kExitPass;
        }
        if (*verify) return cmd_verify(va);
        if (*verify_all) return cmd_verify_all(all_out, all_flip, all_threads);
        if (*mc) return cmd_mc(ma);
    } catch (const UsageError& e) {
        std::cerr << "bek: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bek: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "bek: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
