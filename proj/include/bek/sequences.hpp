#pragma once

#include "bek/poly.hpp"
#include "bek/rational.hpp"

#include <deque>
#include <shared_mutex>

namespace bek {

// Memoized Bernoulli, Euler and Genocchi numbers and Bernoulli/Euler
// polynomials. Requesting index n fills every index up to n; filled entries
// are never modified, so returned references stay valid for the cache's
// lifetime. Concurrent readers, serialized fill.
class SequenceCache {
public:
    const Rational& bernoulli_number(int n);
    const Rational& genocchi_number(int n);
    const Rational& euler_number(int n);
    // E_n(0) = G_{n+1} / (n+1)
    const Rational& euler_poly_at_zero(int n);
    const Poly& bernoulli_poly(int n);
    const Poly& euler_poly(int n);

private:
    void fill_bernoulli(int n);
    void fill_euler(int n);

    std::shared_mutex mutex_;
    std::deque<Rational> bernoulli_;
    std::deque<Rational> genocchi_;
    std::deque<Rational> euler_at_zero_;
    std::deque<Poly> euler_polys_;
    std::deque<Rational> euler_;
    std::deque<Poly> bernoulli_polys_;
};

// Process-wide cache used by the free functions below.
SequenceCache& sequences();

inline const Rational& bernoulli_number(int n) { return sequences().bernoulli_number(n); }
inline const Rational& genocchi_number(int n) { return sequences().genocchi_number(n); }
inline const Rational& euler_number(int n) { return sequences().euler_number(n); }
inline const Rational& euler_poly_at_zero(int n) { return sequences().euler_poly_at_zero(n); }
inline const Poly& bernoulli_poly(int n) { return sequences().bernoulli_poly(n); }
inline const Poly& euler_poly(int n) { return sequences().euler_poly(n); }

}  // namespace bek
