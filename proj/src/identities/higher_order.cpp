#include "common.hpp"

#include <bit>
#include <vector>

namespace bek::identities {

using namespace detail;

namespace {

// Visits every non-empty subset of {0..k-1} as a bitmask, by increasing size
// and then by increasing mask.
template <typename Fn>
void for_each_subset(int k, Fn&& fn) {
    const unsigned all = (1u << k) - 1;
    for (int size = 1; size <= k; ++size)
        for (unsigned mask = 1; mask <= all; ++mask)
            if (std::popcount(mask) == size) fn(mask, size);
}

std::vector<int> complement_of(unsigned mask, int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
        if (!(mask & (1u << i))) out.push_back(i);
    return out;
}

Poly product_bx(const std::vector<int>& parts) {
    Poly p(1);
    for (int l : parts) p *= Bx(l);
    return p;
}

Rational product_b(std::span<const int> parts) {
    Rational r(1);
    for (int l : parts) {
        r *= B(l);
        if (r.is_zero()) break;
    }
    return r;
}

}  // namespace

Sides theorem2(int n, std::span<const Rational> a, const Mutation& m) {
    const int k = static_cast<int>(a.size());
    require(k >= 2, "theorem2 requires k >= 2 parameters");
    require(k <= 16, "theorem2 supports at most 16 parameters");
    require(n >= 0, "theorem2 requires n >= 0");
    for (const auto& v : a) require_positive(v, "a_i");

    Rational total;
    for (const auto& v : a) total += v;

    TermSum lhs, rhs(m);
    const Rational lhs_denom = pochhammer(total, n);
    for (const Composition& c : compositions(n, k)) {
        Rational w = multinomial(n, c.parts) / lhs_denom;
        for (int i = 0; i < k; ++i) w *= pochhammer(a[static_cast<std::size_t>(i)], c.parts[static_cast<std::size_t>(i)]);
        lhs.add(w, product_bx(c.parts));
    }

    const Rational n_fact = factorial(n);
    for_each_subset(k, [&](unsigned mask, int j) {
        const int top = n + 1 - j;
        if (top < 0) return;
        Rational a_j(1);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) a_j *= a[static_cast<std::size_t>(i)];
        const auto rest = complement_of(mask, k);
        const Rational outer = a_j * n_fact / factorial(top);
        for (const Composition& c : compositions(top, k - j + 1)) {
            const int l0 = c.parts[0];
            Rational w = outer * multinomial(top, c.parts) / pochhammer(total, n + 1 - l0);
            Rational numbers(1);
            for (std::size_t t = 0; t < rest.size(); ++t) {
                const int l = c.parts[t + 1];
                w *= pochhammer(a[static_cast<std::size_t>(rest[t])], l);
                numbers *= B(l);
            }
            rhs.add(w * numbers, Bx(l0));
        }
    });
    return {lhs.value(), rhs.value()};
}

Sides third_order_matiyasevich(int n, const Mutation& m) {
    require(n >= 3, "eq-4-0a requires n >= 3");
    TermSum lhs, rhs(m);
    for (const Composition& c : compositions(n, 3)) lhs.add(Rational(n + 3), product_bx(c.parts));
    for (const Composition& c : compositions(n, 3))
        rhs.add(Rational(3) * binomial(n + 3, c[0]) * B(c[1]) * B(c[2]), Bx(c[0]));
    for (int i = 0; i <= n - 1; ++i) rhs.add(Rational(3) * binomial(n + 3, i) * B(n - 1 - i), Bx(i));
    rhs.add(binomial(n + 3, 5), Bx(n - 2));
    return {lhs.value(), rhs.value()};
}

Sides kth_order_matiyasevich(int n, int k, const Mutation& m) {
    require(k >= 2, "kth-matiyasevich requires k >= 2");
    require(n >= 0, "kth-matiyasevich requires n >= 0");
    TermSum lhs, rhs(m);
    for (const Composition& c : compositions(n, k)) lhs.add(Poly(product_b(c.parts)));
    const Rational scale(1, n + k);
    for (int j = 1; j <= k; ++j) {
        const int top = n + 1 - j;
        if (top < 0) break;
        for (const Composition& c : compositions(top, k - j + 1))
            rhs.add(Poly(scale * binomial(k, j) * binomial(n + k, c[0]) * product_b(c.parts)));
    }
    return {lhs.value(), rhs.value()};
}

Sides triple_epsilon(int n, const Rational& eps, const Mutation& m) {
    require(n >= 2, "eq-6-9 requires n >= 2");
    require_positive(eps, "epsilon");
    const Rational three_eps = Rational(3) * eps;
    TermSum lhs, rhs(m);
    const Rational lhs_denom = pochhammer(three_eps, n);
    for (const Composition& c : compositions(n, 3)) {
        Rational w = pochhammer(eps, c[0]) * pochhammer(eps, c[1]) * pochhammer(eps, c[2]) / lhs_denom;
        w /= factorial(c[0]) * factorial(c[1]) * factorial(c[2]);
        lhs.add(w, Bx(c[0]) * Bx(c[1]) * Bx(c[2]));
    }
    for (const Composition& c : compositions(n, 3)) {
        const int i = c[0], j = c[1], l = c[2];
        Rational w = Rational(3) * eps * pochhammer(eps, j) * pochhammer(eps, l) / pochhammer(three_eps, j + l + 1);
        w *= B(j) * B(l) / (factorial(i) * factorial(j) * factorial(l));
        rhs.add(w, Bx(i));
    }
    for (int i = 0; i <= n - 1; ++i) {
        const int j = n - 1 - i;
        Rational w = Rational(3) * eps * eps * pochhammer(eps, j) / pochhammer(three_eps, j + 2);
        w *= B(j) / (factorial(i) * factorial(j));
        rhs.add(w, Bx(i));
    }
    rhs.add(eps * eps * eps / pochhammer(three_eps, 3) / factorial(n - 2), Bx(n - 2));
    return {lhs.value(), rhs.value()};
}

Sides corollary8(int n, const Mutation& m) {
    require(n >= 2, "corollary8 requires n >= 2");
    TermSum lhs, rhs(m);
    for (const Composition& c : compositions(n, 3)) lhs.add(multinomial(n, c.parts), product_bx(c.parts));
    for (const Composition& c : compositions(n, 3))
        rhs.add(multinomial(n, c.parts) * pow(q(3), c[0]) * B(c[1]) * B(c[2]), Bx(c[0]));
    for (int i = 0; i <= n - 1; ++i) rhs.add(Rational(n) * binomial(n - 1, i) * pow(q(3), i) * B(n - 1 - i), Bx(i));
    rhs.add(Rational(static_cast<long>(n) * (n - 1)) * pow(q(3), n - 3), Bx(n - 2));
    return {lhs.value(), rhs.value()};
}

Sides corollary9(int n, const Mutation& m) {
    require(n >= 2, "corollary9 requires n >= 2");
    // b(l) = B_l / l
    auto b = [](int l) { return B(l) / Rational(l); };
    const Rational hn1 = harmonic(n - 1);
    TermSum lhs, rhs(m);
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; i + j <= n - 1; ++j) lhs.add(Poly(Rational(1, 3) * b(i) * b(j) * b(n - i - j)));
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; i + j <= n - 1; ++j) rhs.add(Poly(binomial(n - 1, i - 1) * b(i) * b(j) * b(n - i - j)));
    for (int l = 1; l <= n - 2; ++l) rhs.add(Poly(binomial(n - 1, l + 1) * b(l) * b(n - l - 1)));
    for (int l = 1; l <= n - 1; ++l)
        rhs.add(Poly((Rational(3) * hn1 - Rational(2) * harmonic(l - 1) + Rational(1, n)) * b(l) * b(n - l)));
    for (int l = 1; l <= n - 1; ++l)
        rhs.add(Poly(Rational(-2) * binomial(n - 1, l) * (Rational(2) * harmonic(l) + Rational(1, l)) * b(l) * b(n - l)));
    rhs.add(Poly(Rational(n - 1, 6) * B(n - 2)));
    rhs.add(Poly((Rational(1, static_cast<long>(n - 1) * n) - Rational(3)) * B(n - 1)));
    const Rational bracket = Rational(2, n) * hn1 + hn1 * hn1 + Rational(2) * harmonic_second(n - 1) +
                             Rational(3, static_cast<long>(n) * n);
    rhs.add(Poly(Rational(-2) * bracket * b(n)));
    return {lhs.value(), rhs.value()};
}

}  // namespace bek::identities
