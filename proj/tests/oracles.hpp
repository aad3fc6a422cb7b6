#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library's sequence generation.

#include "bek/poly.hpp"
#include "bek/rational.hpp"

#include <random>
#include <vector>

namespace oracle {

using bek::Poly;
using bek::Rational;

inline Rational fact(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r = r * Rational(i);
    return r;
}

// Reciprocal of a power series with nonzero constant term, first `terms` coefficients.
inline std::vector<Rational> series_inverse(const std::vector<Rational>& c, int terms) {
    std::vector<Rational> d(static_cast<std::size_t>(terms));
    d[0] = Rational(1) / c[0];
    for (int n = 1; n < terms; ++n) {
        Rational acc;
        for (int j = 1; j <= n && j < static_cast<int>(c.size()); ++j)
            acc = acc + c[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(n - j)];
        d[static_cast<std::size_t>(n)] = -acc / c[0];
    }
    return d;
}

// Akiyama-Tanigawa triangle; returns B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> out;
    std::vector<Rational> a(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] =
                Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        out.push_back(a[0]);
    }
    if (n >= 1) out[1] = Rational(-1, 2);
    return out;
}

// sech z = sum E_n z^n / n!
inline std::vector<Rational> euler_numbers(int n) {
    std::vector<Rational> cosh_series(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; j += 2) cosh_series[static_cast<std::size_t>(j)] = Rational(1) / fact(j);
    auto d = series_inverse(cosh_series, n + 1);
    for (int j = 0; j <= n; ++j) d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)] * fact(j);
    return d;
}

// 2z / (e^z + 1) = sum G_n z^n / n!
inline std::vector<Rational> genocchi_numbers(int n) {
    std::vector<Rational> half(static_cast<std::size_t>(n + 1));
    half[0] = Rational(1);
    for (int j = 1; j <= n; ++j) half[static_cast<std::size_t>(j)] = Rational(1, 2) / fact(j);
    const auto t = series_inverse(half, n + 1);
    std::vector<Rational> g(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) g[static_cast<std::size_t>(j)] = fact(j) * t[static_cast<std::size_t>(j - 1)];
    return g;
}

// Integral over [0, 1].
inline Rational unit_integral(const Poly& p) {
    Rational s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s = s + p.coeffs()[i] / Rational(static_cast<long>(i + 1));
    return s;
}

// Random rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 7, bool positive = false) {
    std::uniform_int_distribution<long> num(positive ? 1 : -max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
    return Poly(c);
}

// Random weights u_1..u_k summing to one.
inline std::vector<Rational> random_unit_tuple(std::mt19937_64& rng, int k) {
    std::vector<Rational> u;
    Rational sum;
    for (int i = 0; i + 1 < k; ++i) {
        u.push_back(random_rational(rng));
        sum = sum + u.back();
    }
    u.push_back(Rational(1) - sum);
    return u;
}

}  // namespace oracle
