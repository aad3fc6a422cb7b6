#pragma once

#include "bek/combinatorics.hpp"
#include "bek/identities.hpp"
#include "bek/sequences.hpp"

#include <stdexcept>
#include <string>

namespace bek::identities::detail {

inline const Rational& B(int n) { return bernoulli_number(n); }
inline const Poly& Bx(int n) { return bernoulli_poly(n); }
inline const Rational& E0(int n) { return euler_poly_at_zero(n); }
inline const Poly& Ex(int n) { return euler_poly(n); }

inline Rational q(long num, long den = 1) { return {num, den}; }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

inline void require_positive(const Rational& v, const char* name) {
    require(v.sign() > 0, std::string(name) + " must be positive");
}

}  // namespace bek::identities::detail
