#include "bek/poly.hpp"

#include "bek/combinatorics.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace bek {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::compose_linear(const Rational& c) const {
    std::vector<Rational> out(coeffs_.size());
    Rational scale(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * scale;
        scale *= c;
    }
    return Poly(std::move(out));
}

Poly Poly::shift(const Rational& u) const {
    // sum_i c_i (x+u)^i = sum_j x^j sum_{i>=j} C(i,j) c_i u^{i-j}
    const std::size_t n = coeffs_.size();
    std::vector<Rational> out(n);
    std::vector<Rational> upow(n, Rational(1));
    for (std::size_t i = 1; i < n; ++i) upow[i] = upow[i - 1] * u;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i < n; ++i)
            if (!coeffs_[i].is_zero()) out[j] += binomial(static_cast<int>(i), static_cast<int>(j)) * coeffs_[i] * upow[i - j];
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0)
            os << mag.str();
        else if (!mag.is_integer())
            os << '(' << mag.str() << ')';
        else if (!unit)
            os << mag.str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace bek
