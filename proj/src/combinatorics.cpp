#include "bek/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bek {

Rational binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return {};
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational multinomial(int n, std::span<const int> parts) {
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                                    std::to_string(n));
    Rational r = factorial(n);
    for (int p : parts)
        if (p > 1) r /= factorial(p);
    return r;
}

Rational pochhammer(const Rational& z, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational r(1);
    Rational term = z;
    for (int i = 0; i < k; ++i) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

Rational gamma_ratio(const Rational& z, int m) {
    if (m >= 0) return pochhammer(z, m);
    const Rational denom = pochhammer(z + Rational(m), -m);
    if (denom.is_zero()) throw std::domain_error("gamma_ratio: pole");
    return Rational(1) / denom;
}

Rational harmonic(int n) {
    Rational h;
    for (int j = 1; j <= n; ++j) h += Rational(1, j);
    return h;
}

Rational harmonic_shifted(const Rational& a, int n) {
    if (a.sign() <= 0) throw std::domain_error("harmonic_shifted: a must be positive");
    Rational h;
    for (int j = 0; j < n; ++j) h += Rational(1) / (a + Rational(j));
    return h;
}

Rational harmonic_second(int n) {
    Rational h;
    for (int j = 1; j <= n; ++j) h += Rational(1, static_cast<long>(j) * j);
    return h;
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Compositions::Compositions(int n, int k) : n_(n), k_(k) {
    if (n < 0) throw std::invalid_argument("compositions: negative n");
    if (k < 1) throw std::invalid_argument("compositions: k must be positive");
}

Rational Compositions::count() const { return binomial(n_ + k_ - 1, k_ - 1); }

Compositions::iterator::iterator(int n, int k) : done_(false) {
    current_.parts.assign(static_cast<std::size_t>(k), 0);
    current_.parts.back() = n;
}

Compositions::iterator& Compositions::iterator::operator++() {
    auto& p = current_.parts;
    const int k = static_cast<int>(p.size());
    // Bump the rightmost position that still has mass after it, then push the
    // remaining mass to the last slot.
    int tail = p[static_cast<std::size_t>(k - 1)];
    for (int j = k - 2; j >= 0; --j) {
        if (tail > 0) {
            p[static_cast<std::size_t>(j)] += 1;
            for (int m = j + 1; m < k - 1; ++m) p[static_cast<std::size_t>(m)] = 0;
            p[static_cast<std::size_t>(k - 1)] = tail - 1;
            return *this;
        }
        tail += p[static_cast<std::size_t>(j)];
    }
    done_ = true;
    return *this;
}

}  // namespace bek
