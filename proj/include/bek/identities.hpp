#pragma once

#include "bek/poly.hpp"
#include "bek/rational.hpp"
#include "bek/sides.hpp"

#include <cstddef>
#include <optional>
#include <span>

// Exact evaluators for both sides of each convolution identity. Every function
// returns the left and right side as polynomials in x; identities between
// numbers return constant polynomials. Preconditions on n and the parameters
// are checked and reported with std::domain_error.
namespace bek::identities {

// Harness self-test: negate the right-hand-side summand with this index,
// counting nonzero summands in evaluation order. Used to prove that a broken
// identity is detected.
struct Mutation {
    std::optional<std::size_t> flip_rhs_term;
};

// Running sum that counts its nonzero summands and applies a Mutation.
class TermSum {
public:
    TermSum() = default;
    explicit TermSum(const Mutation& m) : flip_(m.flip_rhs_term) {}

    void add(const Poly& term);
    void add(const Rational& coeff, const Poly& term) { add(term * coeff); }

    const Poly& value() const { return value_; }
    std::size_t terms() const { return count_; }

private:
    std::optional<std::size_t> flip_;
    std::size_t count_ = 0;
    Poly value_;
};

// ---- second-order Bernoulli family ----------------------------------------

// sum C(n,l) (a)_l (b)_{n-l}/(a+b)_n B_l(x)B_{n-l}(x) against its reduction to
// single Bernoulli polynomials. n >= 1, a, b > 0.
Sides theorem1(int n, const Rational& a, const Rational& b, const Mutation& m = {});

// Euler's quadratic identity for Bernoulli numbers, n >= 1.
Sides euler_quadratic(int n, const Mutation& m = {});
// Miki's identity, n >= 4.
Sides miki(int n, const Mutation& m = {});
// Matiyasevich's identity, n >= 4.
Sides matiyasevich(int n, const Mutation& m = {});

// theorem1 at a = b = 1, polynomial form. n >= 1.
Sides corollary1(int n, const Mutation& m = {});
// corollary1 at x = 0; even n >= 4.
Sides corollary2(int n, const Mutation& m = {});
// Limit b -> 0 of theorem1 / b: shifted-harmonic Miki analogue. n >= 1, a > 0.
Sides corollary3(int n, const Rational& a, const Mutation& m = {});
// corollary3 at a = 1 after symmetrization. n >= 1.
Sides corollary4_a1(int n, const Mutation& m = {});
// corollary3 at a = 2, scaled by (n+1)(n+2). n >= 1.
Sides corollary4_a2(int n, const Mutation& m = {});
// corollary3 at a = 1 before symmetrization. n >= 1.
Sides corollary3_a1_unsymmetrized(int n, const Mutation& m = {});
// Limit a -> infinity of a * corollary3. n >= 1.
Sides corollary5(int n, const Mutation& m = {});
// Limit a = b -> infinity of theorem1, with the B(2x) evaluation. n >= 1.
Sides corollary6(int n, const Mutation& m = {});
// Limit a = b -> infinity of theorem1 before the B(2x) evaluation. n >= 1.
Sides half_weight_limit(int n, const Mutation& m = {});
// First-order coefficient in a = b = eps -> 0 of theorem1. n >= 1.
Sides corollary7(int n, const Mutation& m = {});

// ---- higher-order Bernoulli family -----------------------------------------

// k-fold weighted convolution of Bernoulli polynomials; k = a.size() >= 2,
// n >= 0, all a_i > 0.
Sides theorem2(int n, std::span<const Rational> a, const Mutation& m = {});
// theorem2 at k = 3, a = (1,1,1). n >= 3.
Sides third_order_matiyasevich(int n, const Mutation& m = {});
// theorem2 at a = (1,...,1), x = 0, for numbers. k >= 2, n >= 0.
Sides kth_order_matiyasevich(int n, int k, const Mutation& m = {});
// theorem2 at k = 3, a = (eps,eps,eps), divided by n!. n >= 2, eps > 0.
Sides triple_epsilon(int n, const Rational& eps, const Mutation& m = {});
// Limit eps -> infinity of triple_epsilon times 3^n n!. n >= 2.
Sides corollary8(int n, const Mutation& m = {});
// Third-order analogue of Miki's identity for numbers. n >= 2.
Sides corollary9(int n, const Mutation& m = {});

// ---- Euler family -----------------------------------------------------------

// Euler-polynomial analogue of theorem1. n >= 1, a, b > 0.
Sides theorem3(int n, const Rational& a, const Rational& b, const Mutation& m = {});
// theorem3 at a = b = 1, scaled by (n+1)(n+2). n >= 1.
Sides theorem3_unit(int n, const Mutation& m = {});
// k-fold weighted convolution of Euler polynomials; k = a.size() >= 1.
Sides theorem4(int n, std::span<const Rational> a, const Mutation& m = {});
// Euler analogues of Miki's identity from theorem3. First form n >= 2,
// second form n >= 1.
Sides corollary10_first(int n, const Mutation& m = {});
Sides corollary10_second(int n, const Mutation& m = {});
// Third-order Euler analogues from theorem4 at k = 3. n >= 2.
Sides corollary11_first(int n, const Mutation& m = {});
Sides corollary11_second(int n, const Mutation& m = {});

// ---- Dunne-Schubert family ---------------------------------------------------
// Gamma factors are divided out so both sides are exact rationals.

// Both sides divided by Gamma(p+1)^2. n >= 2, p >= 0.
Sides dunne_schubert(int n, const Rational& p, const Mutation& m = {});
// dunne_schubert at p = 1 in Matiyasevich form. n >= 2.
Sides dunne_schubert_p1(int n, const Mutation& m = {});
// Same left side as dunne_schubert, right side obtained from theorem1 at
// a = b = p. n >= 2, p > 0.
Sides dunne_schubert_from_theorem1(int n, const Rational& p, const Mutation& m = {});
// sum_{l=1}^{2n-1} Gamma(p+l)/Gamma(2p+l+1) normalized by Gamma(p)/Gamma(2p+1):
// sum (p)_l/(2p+1)_l = 1 - (p)_{2n} / (p (2p+1)_{2n-1}). n >= 1, p > 0.
Sides gamma_sum(int n, const Rational& p, const Mutation& m = {});

}  // namespace bek::identities
