#include "bek/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace bek {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!valid_integer(num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(to_mpz(num));
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bek
