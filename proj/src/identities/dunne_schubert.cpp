#include "common.hpp"

namespace bek::identities {

using namespace detail;

namespace {

// Gamma(2l+p) / (Gamma(2l) Gamma(p+1)) for l >= 1.
Rational shifted_weight(const Rational& p, int l) {
    return pochhammer(p + Rational(1), 2 * l - 1) / factorial(2 * l - 1);
}

TermSum dunne_schubert_lhs(int n, const Rational& p) {
    TermSum lhs;
    for (int l = 1; l <= n - 1; ++l) {
        const int r = n - l;
        Rational w = shifted_weight(p, l) * shifted_weight(p, r);
        lhs.add(Poly(w * B(2 * l) / Rational(2 * l) * B(2 * r) / Rational(2 * r)));
    }
    return lhs;
}

// Shared tail: 2/(2n)! sum C(2n,2l) Gamma(p+2l)Gamma(2p+2n)/(Gamma(p+1)Gamma(2p+2l+1)) B_{2l}B_{2n-2l}.
void add_binomial_tail(TermSum& rhs, int n, const Rational& p) {
    const Rational scale = Rational(2) / factorial(2 * n);
    const Rational two_p = Rational(2) * p;
    for (int l = 1; l <= n; ++l) {
        const Rational w = scale * binomial(2 * n, 2 * l) * pochhammer(p + Rational(1), 2 * l - 1) *
                           gamma_ratio(two_p + Rational(2 * l + 1), 2 * n - 2 * l - 1);
        rhs.add(Poly(w * B(2 * l) * B(2 * n - 2 * l)));
    }
}

}  // namespace

Sides dunne_schubert(int n, const Rational& p, const Mutation& m) {
    require(n >= 2, "dunne-schubert requires n >= 2");
    require(p.sign() >= 0, "dunne-schubert requires p >= 0");
    const TermSum lhs = dunne_schubert_lhs(n, p);
    TermSum rhs(m);
    const Rational two_p = Rational(2) * p;
    const Rational scale = Rational(2) * B(2 * n) / factorial(2 * n);
    for (int l = 1; l <= 2 * n - 1; ++l) {
        const Rational w = pochhammer(p + Rational(1), l - 1) * gamma_ratio(two_p + Rational(l + 1), 2 * n - l - 1);
        rhs.add(Poly(scale * w));
    }
    add_binomial_tail(rhs, n, p);
    return {lhs.value(), rhs.value()};
}

Sides dunne_schubert_p1(int n, const Mutation& m) {
    require(n >= 2, "dunne-schubert-p1 requires n >= 2");
    TermSum lhs, rhs(m);
    for (int l = 1; l <= n; ++l) lhs.add(Poly(B(2 * l) * B(2 * n - 2 * l)));
    for (int l = 1; l <= n; ++l)
        rhs.add(Poly(Rational(1, n + 1) * binomial(2 * n + 2, 2 * l + 2) * B(2 * l) * B(2 * n - 2 * l)));
    rhs.add(Poly(Rational(2 * n) * B(2 * n)));
    return {lhs.value(), rhs.value()};
}

Sides dunne_schubert_from_theorem1(int n, const Rational& p, const Mutation& m) {
    require(n >= 2, "eq-7-2 requires n >= 2");
    require_positive(p, "p");
    const TermSum lhs = dunne_schubert_lhs(n, p);
    TermSum rhs(m);
    const Rational head = (pochhammer(Rational(2) * p, 2 * n) - Rational(2) * pochhammer(p, 2 * n)) /
                          (p * p * factorial(2 * n)) * B(2 * n);
    rhs.add(Poly(head));
    add_binomial_tail(rhs, n, p);
    return {lhs.value(), rhs.value()};
}

Sides gamma_sum(int n, const Rational& p, const Mutation& m) {
    require(n >= 1, "gamma-sum requires n >= 1");
    require_positive(p, "p");
    TermSum lhs, rhs(m);
    const Rational shifted = Rational(2) * p + Rational(1);
    for (int l = 1; l <= 2 * n - 1; ++l) lhs.add(Poly(pochhammer(p, l) / pochhammer(shifted, l)));
    rhs.add(Poly(Rational(1)));
    rhs.add(Poly(-pochhammer(p, 2 * n) / (p * pochhammer(shifted, 2 * n - 1))));
    return {lhs.value(), rhs.value()};
}

}  // namespace bek::identities
