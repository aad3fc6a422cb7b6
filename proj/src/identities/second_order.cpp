#include "common.hpp"

namespace bek::identities {

using namespace detail;

Sides theorem1(int n, const Rational& a, const Rational& b, const Mutation& m) {
    require(n >= 1, "theorem1 requires n >= 1");
    require_positive(a, "a");
    require_positive(b, "b");
    const Rational ab = a + b;
    TermSum lhs, rhs(m);
    const Rational denom = pochhammer(ab, n);
    for (int l = 0; l <= n; ++l)
        lhs.add(binomial(n, l) * pochhammer(a, l) * pochhammer(b, n - l) / denom, Bx(l) * Bx(n - l));
    for (int l = 0; l <= n; ++l) {
        const Rational w = (a * pochhammer(b, l) + b * pochhammer(a, l)) / pochhammer(ab, l + 1);
        rhs.add(binomial(n, l) * w * B(l), Bx(n - l));
    }
    rhs.add(a * b / ((ab + Rational(1)) * ab) * Rational(n), Bx(n - 1));
    return {lhs.value(), rhs.value()};
}

Sides euler_quadratic(int n, const Mutation& m) {
    require(n >= 1, "euler-1-2 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int j = 0; j <= n; ++j) lhs.add(Poly(binomial(n, j) * B(j) * B(n - j)));
    rhs.add(Poly(-Rational(n) * B(n - 1)));
    rhs.add(Poly(-Rational(n - 1) * B(n)));
    return {lhs.value(), rhs.value()};
}

Sides miki(int n, const Mutation& m) {
    require(n >= 4, "miki requires n >= 4");
    TermSum lhs, rhs(m);
    for (int j = 2; j <= n - 2; ++j) lhs.add(Poly(B(j) * B(n - j) / Rational(static_cast<long>(j) * (n - j))));
    for (int j = 2; j <= n - 2; ++j)
        lhs.add(Poly(-binomial(n, j) * B(j) * B(n - j) / Rational(static_cast<long>(j) * (n - j))));
    rhs.add(Poly(Rational(2) * harmonic(n) * B(n) / Rational(n)));
    return {lhs.value(), rhs.value()};
}

Sides matiyasevich(int n, const Mutation& m) {
    require(n >= 4, "matiyasevich requires n >= 4");
    TermSum lhs, rhs(m);
    for (int j = 2; j <= n - 2; ++j) lhs.add(Poly(Rational(n + 2) * B(j) * B(n - j)));
    for (int j = 2; j <= n - 2; ++j) lhs.add(Poly(Rational(-2) * binomial(n + 2, j) * B(j) * B(n - j)));
    rhs.add(Poly(Rational(static_cast<long>(n) * (n + 1)) * B(n)));
    return {lhs.value(), rhs.value()};
}

Sides corollary1(int n, const Mutation& m) {
    require(n >= 1, "corollary1 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n; ++l) lhs.add(Rational(n + 2), Bx(l) * Bx(n - l));
    for (int l = 0; l <= n; ++l) rhs.add(Rational(2) * binomial(n + 2, l + 2) * B(l), Bx(n - l));
    rhs.add(binomial(n + 2, 3), Bx(n - 1));
    return {lhs.value(), rhs.value()};
}

Sides corollary2(int n, const Mutation& m) {
    require(n >= 4 && n % 2 == 0, "corollary2 requires even n >= 4");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n; ++l) lhs.add(Poly(Rational(n + 2) * B(l) * B(n - l)));
    for (int l = 0; l <= n; ++l) rhs.add(Poly(Rational(2) * binomial(n + 2, l + 2) * B(l) * B(n - l)));
    return {lhs.value(), rhs.value()};
}

Sides corollary3(int n, const Rational& a, const Mutation& m) {
    require(n >= 1, "corollary3 requires n >= 1");
    require_positive(a, "a");
    TermSum lhs, rhs(m);
    const Rational an = pochhammer(a, n);
    for (int l = 0; l <= n - 1; ++l)
        lhs.add(binomial(n, l) * pochhammer(a, l) * factorial(n - l - 1) / an, Bx(l) * Bx(n - l));
    for (int l = 1; l <= n; ++l) {
        const Rational w = (a * factorial(l - 1) + pochhammer(a, l)) / pochhammer(a, l + 1);
        rhs.add(binomial(n, l) * w * B(l), Bx(n - l));
    }
    rhs.add(Rational(n) / (a + Rational(1)), Bx(n - 1));
    rhs.add(harmonic_shifted(a, n), Bx(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary3_a1_unsymmetrized(int n, const Mutation& m) {
    require(n >= 1, "eq-2-12 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n - 1; ++l) lhs.add(Rational(1, n - l), Bx(l) * Bx(n - l));
    for (int l = 1; l <= n; ++l) rhs.add(binomial(n, l) * B(l) / Rational(l), Bx(n - l));
    rhs.add(Rational(n, 2), Bx(n - 1));
    rhs.add(harmonic(n), Bx(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary4_a1(int n, const Mutation& m) {
    require(n >= 1, "corollary4 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 1; l <= n - 1; ++l) lhs.add(Rational(n, 2) / Rational(static_cast<long>(l) * (n - l)), Bx(l) * Bx(n - l));
    for (int l = 1; l <= n; ++l) rhs.add(binomial(n, l) * B(l) / Rational(l), Bx(n - l));
    rhs.add(Rational(n, 2), Bx(n - 1));
    rhs.add(harmonic(n - 1), Bx(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary4_a2(int n, const Mutation& m) {
    require(n >= 1, "corollary4b requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n - 1; ++l) lhs.add(Rational(static_cast<long>(n + 2) * (l + 1), n - l), Bx(l) * Bx(n - l));
    for (int l = 1; l <= n; ++l) {
        const Rational w = binomial(n + 2, l + 2) * Rational(static_cast<long>(l) * l + l + 2, l);
        rhs.add(w * B(l), Bx(n - l));
    }
    const Rational scale(static_cast<long>(n + 1) * (n + 2));
    rhs.add(scale * Rational(n, 3), Bx(n - 1));
    rhs.add(scale * harmonic_shifted(Rational(2), n), Bx(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary5(int n, const Mutation& m) {
    require(n >= 1, "corollary5 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n; ++l) lhs.add(binomial(n, l) * B(l), Bx(n - l));
    rhs.add(Rational(n), Poly({q(-1), q(1)}) * Bx(n - 1));
    rhs.add(Rational(1 - n), Bx(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary6(int n, const Mutation& m) {
    require(n >= 1, "corollary6 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n; ++l) lhs.add(binomial(n, l) * pow(q(1, 2), l) * B(l), Bx(n - l));
    const Rational two_n = pow(q(2), n);
    rhs.add(Rational(n) / two_n, Poly({q(-1), q(2)}) * Bx(n - 1).compose_linear(q(2)));
    rhs.add(Rational(1 - n) / two_n, Bx(n).compose_linear(q(2)));
    rhs.add(Rational(-n, 4), Bx(n - 1));
    return {lhs.value(), rhs.value()};
}

Sides half_weight_limit(int n, const Mutation& m) {
    require(n >= 1, "eq-2-15 requires n >= 1");
    TermSum lhs, rhs(m);
    const Rational inv_two_n = pow(q(1, 2), n);
    for (int l = 0; l <= n; ++l) lhs.add(inv_two_n * binomial(n, l), Bx(l) * Bx(n - l));
    for (int l = 0; l <= n; ++l) rhs.add(binomial(n, l) * pow(q(1, 2), l) * B(l), Bx(n - l));
    rhs.add(Rational(n, 4), Bx(n - 1));
    return {lhs.value(), rhs.value()};
}

Sides corollary7(int n, const Mutation& m) {
    require(n >= 1, "corollary7 requires n >= 1");
    TermSum lhs, rhs(m);
    const Rational hn1 = harmonic(n - 1);
    for (int l = 1; l <= n - 1; ++l) {
        const Rational w = Rational(n) * (hn1 - harmonic(l - 1)) / Rational(static_cast<long>(l) * (n - l));
        lhs.add(w, Bx(l) * Bx(n - l));
    }
    for (int l = 1; l <= n; ++l)
        rhs.add(binomial(n, l) * (harmonic(l) + Rational(1, l)) * B(l) / Rational(l), Bx(n - l));
    rhs.add(Rational(n), Bx(n - 1));
    rhs.add(Rational(1, 2) * (hn1 * hn1 + Rational(3) * harmonic_second(n - 1)), Bx(n));
    return {lhs.value(), rhs.value()};
}

}  // namespace bek::identities
