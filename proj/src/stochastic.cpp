#include "bek/stochastic.hpp"

#include "bek/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace bek::stochastic {

namespace {

void check_query(const std::vector<Rational>& a, const std::vector<int>& l) {
    if (a.empty()) throw std::invalid_argument("shape vector is empty");
    if (a.size() != l.size()) throw std::invalid_argument("shape and exponent vectors differ in length");
    for (const auto& v : a)
        if (v.sign() <= 0) throw std::domain_error("shape parameters must be positive");
    for (int v : l)
        if (v < 0) throw std::domain_error("exponents must be non-negative");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Neumaier-compensated running sum plus Welford's second central moment.
struct Accumulator {
    double sum = 0.0, comp = 0.0;
    double mean = 0.0, m2 = 0.0;
    std::uint64_t count = 0;

    void add(double v) {
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
        ++count;
        const double delta = v - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (v - mean);
    }

    void merge(const Accumulator& o) {
        if (o.count == 0) return;
        const double t = sum + o.sum;
        comp += (std::abs(sum) >= std::abs(o.sum) ? (sum - t) + o.sum : (o.sum - t) + sum) + o.comp;
        sum = t;
        const double n = static_cast<double>(count), m = static_cast<double>(o.count);
        const double delta = o.mean - mean;
        mean += delta * m / (n + m);
        m2 += o.m2 + delta * delta * n * m / (n + m);
        count += o.count;
    }
};

Accumulator run_shard(const std::vector<double>& shapes, const std::vector<int>& l, std::uint64_t draws,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::gamma_distribution<double>> dists;
    for (double s : shapes) dists.emplace_back(s, 1.0);
    std::vector<double> g(shapes.size());
    Accumulator acc;
    for (std::uint64_t i = 0; i < draws; ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) total += g[j] = dists[j](rng);
        double prod = 1.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (l[j] > 0) prod *= std::pow(g[j] / total, l[j]);
        acc.add(prod);
    }
    return acc;
}

}  // namespace

bool MomentEstimate::within(double sigma) const { return std::abs(deviation()) <= sigma * stderr_; }

Rational dirichlet_moment_exact(const std::vector<Rational>& a, const std::vector<int>& l) {
    check_query(a, l);
    Rational total, num(1);
    int order = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i];
        order += l[i];
        num *= pochhammer(a[i], l[i]);
    }
    return num / pochhammer(total, order);
}

double sample_gamma(double shape, std::mt19937_64& rng) {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw std::domain_error("gamma shape must be positive");
    return std::gamma_distribution<double>(shape, 1.0)(rng);
}

MomentEstimate dirichlet_moment_mc(const MomentQuery& q, unsigned threads) {
    check_query(q.a, q.l);
    if (q.samples < 2) throw std::invalid_argument("at least 2 samples are required");
    std::vector<double> shapes;
    for (const auto& v : q.a) shapes.push_back(v.to_double());

    std::vector<Accumulator> shards(kShards);
    auto draws_for = [&](unsigned s) { return q.samples / kShards + (s < q.samples % kShards ? 1 : 0); };
    auto work = [&](unsigned s) { shards[s] = run_shard(shapes, q.l, draws_for(s), splitmix64(q.seed + s)); };

    const unsigned workers = std::clamp(threads, 1u, kShards);
    if (workers == 1) {
        for (unsigned s = 0; s < kShards; ++s) work(s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (unsigned s = w; s < kShards; s += workers) work(s);
            });
    }

    Accumulator total;
    for (const auto& s : shards) total.merge(s);
    MomentEstimate est;
    est.n_samples = total.count;
    const double n = static_cast<double>(total.count);
    est.mean = (total.sum + total.comp) / n;
    est.stderr_ = std::sqrt(total.m2 / (n - 1.0)) / std::sqrt(n);
    est.exact = dirichlet_moment_exact(q.a, q.l);
    return est;
}

Rational normalization_check(const std::vector<Rational>& a, int n) {
    if (n < 0) throw std::domain_error("n must be non-negative");
    check_query(a, std::vector<int>(a.size(), 0));
    Rational sum;
    for (const Composition& c : compositions(n, static_cast<int>(a.size())))
        sum += multinomial(n, c.parts) * dirichlet_moment_exact(a, c.parts);
    return sum;
}

}  // namespace bek::stochastic
