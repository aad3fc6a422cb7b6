#pragma once

#include "bek/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace bek {

// Dense univariate polynomial over the rationals in the indeterminate x.
// coeffs()[i] is the coefficient of x^i; trailing zeros are always trimmed,
// so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, std::size_t degree);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const;

    Rational operator()(const Rational& at) const { return eval(at); }
    Rational eval(const Rational& at) const;

    // p(c*x)
    Poly compose_linear(const Rational& c) const;
    // p(x + u)
    Poly shift(const Rational& u) const;
    Poly derivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // Human readable, highest degree first: "x^2 - x + 1/6".
    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
inline Rational poly_eval(const Poly& p, const Rational& at) { return p.eval(at); }
inline Poly poly_compose_linear(const Poly& p, const Rational& c) { return p.compose_linear(c); }

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bek
