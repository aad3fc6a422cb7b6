#include "common.hpp"

#include <bit>
#include <vector>

namespace bek::identities {

using namespace detail;

namespace {

std::vector<int> complement_of(unsigned mask, int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
        if (!(mask & (1u << i))) out.push_back(i);
    return out;
}

// Triples (i, j, l) of positive integers with i + j + l = n, i outermost.
template <typename Fn>
void for_each_positive_triple(int n, Fn&& fn) {
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; i + j <= n - 1; ++j) fn(i, j, n - i - j);
}

Rational harmonic_mix(int n, int weight) {
    const Rational h = harmonic(n);
    return h * h + Rational(weight) * harmonic_second(n);
}

}  // namespace

Sides theorem3(int n, const Rational& a, const Rational& b, const Mutation& m) {
    require(n >= 1, "theorem3 requires n >= 1");
    require_positive(a, "a");
    require_positive(b, "b");
    TermSum lhs, rhs(m);
    const Rational denom = pochhammer(a + b, n);
    for (int l = 0; l <= n; ++l)
        lhs.add(binomial(n, l) * pochhammer(a, l) * pochhammer(b, n - l) / denom, Ex(l) * Ex(n - l));
    rhs.add(Rational(4, n + 1), Bx(n + 1));
    for (int l = 0; l <= n + 1; ++l) {
        const Rational w = Rational(-2, n + 1) * binomial(n + 1, l) * (pochhammer(a, l) + pochhammer(b, l)) /
                           pochhammer(a + b, l) * E0(l);
        rhs.add(w, Bx(n + 1 - l));
    }
    return {lhs.value(), rhs.value()};
}

Sides theorem3_unit(int n, const Mutation& m) {
    require(n >= 1, "theorem3-ab1 requires n >= 1");
    TermSum lhs, rhs(m);
    for (int l = 0; l <= n; ++l) lhs.add(Rational(n + 2), Ex(l) * Ex(n - l));
    rhs.add(Rational(4 * (n + 2)), Bx(n + 1));
    for (int l = 0; l <= n + 1; ++l) rhs.add(Rational(-4) * binomial(n + 2, l) * E0(n + 1 - l), Bx(l));
    return {lhs.value(), rhs.value()};
}

Sides theorem4(int n, std::span<const Rational> a, const Mutation& m) {
    const int k = static_cast<int>(a.size());
    require(k >= 1, "theorem4 requires k >= 1 parameters");
    require(k <= 16, "theorem4 supports at most 16 parameters");
    require(n >= 0, "theorem4 requires n >= 0");
    for (const auto& v : a) require_positive(v, "a_i");

    Rational total;
    for (const auto& v : a) total += v;
    auto ai = [&](int i) -> const Rational& { return a[static_cast<std::size_t>(i)]; };

    TermSum lhs, rhs(m);
    const Rational lhs_denom = pochhammer(total, n);
    for (const Composition& c : compositions(n, k)) {
        Rational w = multinomial(n, c.parts) / lhs_denom;
        Poly p(1);
        for (int i = 0; i < k; ++i) {
            w *= pochhammer(ai(i), c[static_cast<std::size_t>(i)]);
            p *= Ex(c[static_cast<std::size_t>(i)]);
        }
        lhs.add(w, p);
    }

    const bool even = k % 2 == 0;
    const int top = even ? n + 1 : n;
    const unsigned all = (1u << k) - 1;
    for (int j = 1; j <= k; ++j) {
        Rational sign = pow(q(-2), even ? j : j - 1);
        if (even) sign /= Rational(n + 1);
        for (unsigned mask = 1; mask <= all; ++mask) {
            if (std::popcount(mask) != j) continue;
            const auto rest = complement_of(mask, k);
            for (const Composition& c : compositions(top, k - j + 1)) {
                const int l0 = c[0];
                Rational w = sign * multinomial(top, c.parts) / pochhammer(total, top - l0);
                for (std::size_t t = 0; t < rest.size(); ++t) {
                    const int l = c[t + 1];
                    w *= pochhammer(ai(rest[t]), l) * E0(l);
                }
                rhs.add(w, even ? Bx(l0) : Ex(l0));
            }
        }
    }
    return {lhs.value(), rhs.value()};
}

Sides corollary10_first(int n, const Mutation& m) {
    require(n >= 2, "corollary10 requires n >= 2");
    TermSum lhs, rhs(m);
    for (int l = 1; l <= n - 2; ++l) lhs.add(Rational(1, static_cast<long>(l) * (n - l - 1)), Ex(l) * Ex(n - l - 1));
    for (int l = 1; l <= n - 1; ++l)
        rhs.add(Rational(4) * binomial(n - 2, l - 1) * harmonic(l - 1) * E0(l) / Rational(static_cast<long>(l) * (n - l)),
                Bx(n - l));
    rhs.add(Rational(2) * harmonic(n - 2) / Rational(n - 1), Ex(n - 1));
    rhs.add(Poly(Rational(4) * harmonic(n - 1) / Rational(n - 1) * E0(n) / Rational(n)));
    return {lhs.value(), rhs.value()};
}

Sides corollary10_second(int n, const Mutation& m) {
    require(n >= 1, "corollary10b requires n >= 1");
    const Rational hn1 = harmonic(n - 1);
    TermSum lhs, rhs(m);
    for (int l = 1; l <= n - 1; ++l)
        lhs.add((hn1 - harmonic(l - 1)) / Rational(static_cast<long>(l) * (n - l)), Ex(l) * Ex(n - l));
    rhs.add(Rational(1, 2) * harmonic_mix(n - 1, 3) / Rational(n), Ex(n));
    for (int l = 1; l <= n; ++l)
        rhs.add(binomial(n - 1, l - 1) * harmonic_mix(l - 1, 3) * E0(l) / Rational(static_cast<long>(n + 1 - l) * l),
                Bx(n + 1 - l));
    rhs.add(Poly(harmonic_mix(n, 3) * E0(n + 1) / Rational(static_cast<long>(n) * (n + 1))));
    return {lhs.value(), rhs.value()};
}

Sides corollary11_first(int n, const Mutation& m) {
    require(n >= 2, "corollary11 requires n >= 2");
    TermSum lhs, rhs(m);
    for (int l = 1; l <= n - 1; ++l) {
        const Rational w(1, static_cast<long>(l) * (n - l));
        lhs.add(w, Ex(l) * Ex(n - l) - Poly(E0(l) * E0(n - l)));
    }
    for_each_positive_triple(n, [&](int i, int j, int l) {
        rhs.add(binomial(n - 1, i) * E0(j) * E0(l) / Rational(static_cast<long>(j) * l), Ex(i));
    });
    rhs.add(Rational(2) * harmonic(n - 1) / Rational(n), Ex(n));
    return {lhs.value(), rhs.value()};
}

Sides corollary11_second(int n, const Mutation& m) {
    require(n >= 2, "corollary11b requires n >= 2");
    const Rational hn1 = harmonic(n - 1);
    TermSum lhs, rhs(m);
    for_each_positive_triple(n, [&](int i, int j, int l) {
        lhs.add(Rational(1, 3) / Rational(static_cast<long>(i) * j * l), Ex(i) * Ex(j) * Ex(l));
    });
    rhs.add(Rational(-2) * harmonic_mix(n - 1, 2) / Rational(n), Ex(n));
    for_each_positive_triple(n, [&](int i, int j, int l) {
        const Rational h = harmonic(j - 1) + harmonic(l - 1) - Rational(3) * harmonic(j + l - 1);
        rhs.add(binomial(n - 1, i) * h * E0(j) * E0(l) / Rational(static_cast<long>(j) * l), Ex(i));
    });
    for (int l = 1; l <= n - 1; ++l) {
        const Rational h = Rational(3) * hn1 - harmonic(l - 1) - harmonic(n - l - 1);
        const Rational w(1, static_cast<long>(l) * (n - l));
        rhs.add(h * w, Ex(l) * Ex(n - l) - Poly(E0(l) * E0(n - l)));
    }
    return {lhs.value(), rhs.value()};
}

}  // namespace bek::identities
