#pragma once

#include "bek/rational.hpp"

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

namespace bek {

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Rational binomial(int n, int k);

Rational factorial(int n);

// n! / prod(parts_i!). Throws std::invalid_argument unless the parts are
// non-negative and sum to n.
Rational multinomial(int n, std::span<const int> parts);

// Rising factorial z(z+1)...(z+k-1); 1 when k = 0.
Rational pochhammer(const Rational& z, int k);

// Gamma(z + m) / Gamma(z) for an integer offset m of either sign. For m < 0
// this is 1 / (z+m)_{-m}; throws std::domain_error when that hits a pole.
Rational gamma_ratio(const Rational& z, int m);

// H_n = sum_{j=1..n} 1/j
Rational harmonic(int n);
// H_{a,n} = sum_{j=0..n-1} 1/(j+a); throws std::domain_error for a <= 0.
Rational harmonic_shifted(const Rational& a, int n);
// H_n^(2) = sum_{j=1..n} 1/j^2
Rational harmonic_second(int n);

// Weak composition of n into k ordered non-negative parts.
struct Composition {
    std::vector<int> parts;

    int n() const;
    int k() const { return static_cast<int>(parts.size()); }
    int operator[](std::size_t i) const { return parts[i]; }
};

// Lexicographically ordered range over all weak compositions of n into k
// parts: compositions(2, 2) yields (0,2), (1,1), (2,0).
class Compositions {
public:
    class iterator {
    public:
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using reference = const Composition&;
        using pointer = const Composition*;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(int n, int k);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        Composition current_;
        bool done_ = true;
    };

    Compositions(int n, int k);

    iterator begin() const { return iterator(n_, k_); }
    iterator end() const { return {}; }

    // C(n+k-1, k-1)
    Rational count() const;

private:
    int n_;
    int k_;
};

inline Compositions compositions(int n, int k) { return {n, k}; }

}  // namespace bek
