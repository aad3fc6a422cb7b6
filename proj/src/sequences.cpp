#include "bek/sequences.hpp"

#include "bek/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bek {

namespace {

void check_index(int n) {
    if (n < 0) throw std::invalid_argument("sequence index must be non-negative");
}

}  // namespace

SequenceCache& sequences() {
    static SequenceCache cache;
    return cache;
}

void SequenceCache::fill_bernoulli(int n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
    while (static_cast<int>(bernoulli_.size()) <= n) {
        const int m = static_cast<int>(bernoulli_.size());
        if (m == 0) {
            bernoulli_.emplace_back(1);
        } else if (m % 2 == 1 && m > 1) {
            bernoulli_.emplace_back(0);
        } else {
            Rational acc;
            for (int j = 0; j < m; ++j)
                if (!bernoulli_[static_cast<std::size_t>(j)].is_zero())
                    acc += binomial(m + 1, j) * bernoulli_[static_cast<std::size_t>(j)];
            bernoulli_.push_back(-acc / Rational(m + 1));
        }
        const Rational& b = bernoulli_.back();
        // G_m = 2(1 - 2^m) B_m
        genocchi_.push_back(Rational(2) * (Rational(1) - pow(Rational(2), m)) * b);
        // B_m(x) = sum_j C(m,j) B_j x^{m-j}
        std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j)
            c[static_cast<std::size_t>(m - j)] = binomial(m, j) * bernoulli_[static_cast<std::size_t>(j)];
        bernoulli_polys_.emplace_back(std::move(c));
    }
}

void SequenceCache::fill_euler(int n) {
    // Needs G_{n+1} for E_n(0).
    fill_bernoulli(n + 1);
    while (static_cast<int>(euler_polys_.size()) <= n) {
        const int m = static_cast<int>(euler_polys_.size());
        euler_at_zero_.push_back(genocchi_[static_cast<std::size_t>(m + 1)] / Rational(m + 1));
        // E_m(x) = (x + E)^m = sum_j C(m,j) E_j(0) x^{m-j}
        std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j)
            c[static_cast<std::size_t>(m - j)] = binomial(m, j) * euler_at_zero_[static_cast<std::size_t>(j)];
        euler_polys_.emplace_back(std::move(c));
        // E_m = 2^m E_m(1/2)
        euler_.push_back(pow(Rational(2), m) * euler_polys_.back().eval(Rational(1, 2)));
    }
}

const Rational& SequenceCache::bernoulli_number(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(bernoulli_.size()) > n) return bernoulli_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_bernoulli(n);
    return bernoulli_[static_cast<std::size_t>(n)];
}

const Rational& SequenceCache::genocchi_number(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(genocchi_.size()) > n) return genocchi_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_bernoulli(n);
    return genocchi_[static_cast<std::size_t>(n)];
}

const Poly& SequenceCache::bernoulli_poly(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(bernoulli_polys_.size()) > n) return bernoulli_polys_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_bernoulli(n);
    return bernoulli_polys_[static_cast<std::size_t>(n)];
}

const Rational& SequenceCache::euler_poly_at_zero(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(euler_at_zero_.size()) > n) return euler_at_zero_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_euler(n);
    return euler_at_zero_[static_cast<std::size_t>(n)];
}

const Poly& SequenceCache::euler_poly(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(euler_polys_.size()) > n) return euler_polys_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_euler(n);
    return euler_polys_[static_cast<std::size_t>(n)];
}

const Rational& SequenceCache::euler_number(int n) {
    check_index(n);
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(euler_.size()) > n) return euler_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    fill_euler(n);
    return euler_[static_cast<std::size_t>(n)];
}

}  // namespace bek
