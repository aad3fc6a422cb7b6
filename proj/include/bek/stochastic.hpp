#pragma once

#include "bek/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

// Dirichlet mixed moments: exact Pochhammer ratio and a Monte Carlo estimate
// built from normalized gamma variables.
namespace bek::stochastic {

struct MomentQuery {
    std::vector<Rational> a;  // shape parameters, all > 0
    std::vector<int> l;       // exponents, all >= 0
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
};

struct MomentEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;  // sample standard deviation / sqrt(N)
    std::uint64_t n_samples = 0;
    Rational exact;

    double deviation() const { return mean - exact.to_double(); }
    // |mean - exact| <= sigma * stderr
    bool within(double sigma) const;
};

// prod (a_i)_{l_i} / (sum a)_{sum l}
Rational dirichlet_moment_exact(const std::vector<Rational>& a, const std::vector<int>& l);

// One draw with density x^{shape-1} e^{-x} / Gamma(shape). Uses the standard
// library's gamma distribution (Marsaglia-Tsang in libstdc++, with the
// U^{1/shape} boost below shape 1).
double sample_gamma(double shape, std::mt19937_64& rng);

// Work is split into a fixed number of logical shards with sub-seeds derived
// from the master seed, so the estimate does not depend on `threads`.
inline constexpr unsigned kShards = 16;
MomentEstimate dirichlet_moment_mc(const MomentQuery& q, unsigned threads = 1);

// sum over compositions l of n: multinomial(n; l) * dirichlet_moment_exact(a, l).
// Equals 1 because the weights sum to 1.
Rational normalization_check(const std::vector<Rational>& a, int n);

}  // namespace bek::stochastic
