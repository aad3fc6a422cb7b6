#include "bek/combinatorics.hpp"
#include "bek/sequences.hpp"
#include "bek/umbral.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace bek;
using namespace bek::umbral;

namespace {

AffineTerm xt(Rational c = 1) { return {c, std::nullopt}; }
AffineTerm st(SymbolId s, Rational c = 1) { return {c, s}; }

Monomial mono(int xp, std::vector<std::pair<SymbolId, int>> syms) { return Monomial{xp, std::move(syms)}; }

}  // namespace

TEST_CASE("expansion of affine powers") {
    const std::vector<AffineTerm> xu{xt(), st(uniform())};
    CHECK(umbral_pow(xu, 1) == UmbralExpr::x() + UmbralExpr::symbol(uniform()));

    const std::vector<AffineTerm> b{st(bernoulli())};
    const auto sq = umbral_pow(b, 2);
    CHECK(sq.terms().size() == 1);
    CHECK(sq.coeff(mono(0, {{bernoulli(), 2}})) == 1);

    const std::vector<AffineTerm> two{xt(), st(bernoulli(1), Rational(1, 2)), st(bernoulli(2), Rational(1, 2))};
    const auto e = umbral_pow(two, 2);
    CHECK(e.terms().size() == 6);
    CHECK(e.coeff(mono(2, {})) == 1);
    CHECK(e.coeff(mono(1, {{bernoulli(1), 1}})) == 1);
    CHECK(e.coeff(mono(1, {{bernoulli(2), 1}})) == 1);
    CHECK(e.coeff(mono(0, {{bernoulli(1), 2}})) == Rational(1, 4));
    CHECK(e.coeff(mono(0, {{bernoulli(1), 1}, {bernoulli(2), 1}})) == Rational(1, 2));
    CHECK(e.coeff(mono(0, {{bernoulli(2), 2}})) == Rational(1, 4));
}

TEST_CASE("moment evaluation") {
    CHECK(umbral_eval(UmbralExpr::term(1, mono(0, {{bernoulli(), 2}}))) == Poly(Rational(1, 6)));
    CHECK(umbral_eval(UmbralExpr::term(1, mono(0, {{uniform(), 3}}))) == Poly(Rational(1, 4)));
    CHECK(umbral_eval(UmbralExpr::term(1, mono(0, {{bernoulli(1), 2}, {bernoulli(2), 4}}))) ==
          Poly(Rational(-1, 180)));
    CHECK(moment(SymbolKind::UniformDiscrete, 0) == 1);
    CHECK(moment(SymbolKind::UniformDiscrete, 5) == Rational(1, 2));
    CHECK(moment(SymbolKind::Euler, 3) == Rational(1, 4));

    // multiplicative across independent symbols, linear over coefficients
    std::mt19937_64 rng(5);
    const SymbolKind kinds[] = {SymbolKind::Bernoulli, SymbolKind::Euler, SymbolKind::UniformContinuous,
                                SymbolKind::UniformDiscrete};
    for (int trial = 0; trial < 40; ++trial) {
        const SymbolKind k1 = kinds[trial % 4], k2 = kinds[(trial / 4) % 4];
        const int e1 = 1 + trial % 5, e2 = 1 + trial % 3;
        const Rational c = oracle::random_rational(rng);
        const auto a = UmbralExpr::term(c, mono(0, {{SymbolId{k1, 1}, e1}}));
        const auto b = UmbralExpr::term(1, mono(0, {{SymbolId{k2, 2}, e2}}));
        CHECK(umbral_eval(a * b) == Poly(c * moment(k1, e1) * moment(k2, e2)));
        CHECK(umbral_eval(a + b) == umbral_eval(a) + umbral_eval(b));
    }
}

TEST_CASE("difference operators") {
    const Rational u(3, 5);
    const Poly x2 = Poly::monomial(1, 2);
    CHECK(apply_delta({{u}, DeltaVariant::Forward}, x2) == Poly{u * u, Rational(2) * u});
    CHECK(apply_delta({{u}, DeltaVariant::DiscreteMean}, Poly::x()) == Poly{u / Rational(2), 1});
    CHECK(apply_delta({{Rational(1)}, DeltaVariant::Forward}, Poly::monomial(1, 3)) == Poly{1, 3, 3});
    CHECK(apply_delta({{}, DeltaVariant::Forward}, x2) == x2);
}

TEST_CASE("annihilation") {
    CHECK(verify_annihilation(AnnihilatingPair::BernoulliUniform, 1));
    CHECK(verify_annihilation(AnnihilatingPair::BernoulliUniform, 5));
    CHECK(verify_annihilation(AnnihilatingPair::EulerUniformDiscrete, 1));
    for (int n = 1; n <= 50; ++n) {
        CAPTURE(n);
        CHECK(verify_annihilation(AnnihilatingPair::BernoulliUniform, n));
        CHECK(verify_annihilation(AnnihilatingPair::EulerUniformDiscrete, n));
    }
}

TEST_CASE("shifted symbols give the polynomials") {
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        const std::vector<AffineTerm> xb{xt(), st(bernoulli())};
        const std::vector<AffineTerm> xe{xt(), st(euler())};
        CHECK(umbral_eval(umbral_pow(xb, n)) == bernoulli_poly(n));
        CHECK(umbral_eval(umbral_pow(xe, n)) == euler_poly(n));
    }
}

TEST_CASE("uniform symbols act as difference and mean operators") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = oracle::random_poly(rng, 1 + trial % 6);
        Rational u = oracle::random_rational(rng);
        if (u.is_zero()) u = 1;
        const std::vector<AffineTerm> xu{xt(), st(uniform(), u)};
        const std::vector<AffineTerm> xv{xt(), st(uniform_discrete(), u)};
        CHECK(umbral_eval(umbral_apply(p.derivative(), xu)) * u == p.shift(u) - p);
        CHECK(umbral_eval(umbral_apply(p, xv)) == (p + p.shift(u)) * Rational(1, 2));
    }
}

TEST_CASE("operator lemmas on monomials with random shifts") {
    CHECK(verify_lemma1(std::vector<Rational>{Rational(2), Rational(5)}, Poly::monomial(1, 2)));
    CHECK(verify_lemma1(std::vector<Rational>{Rational(7, 3)}, Poly::monomial(1, 4)));
    CHECK(verify_lemma1(std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)}, Poly::monomial(1, 4)));
    std::mt19937_64 rng(31);
    for (int k = 1; k <= 4; ++k)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> shifts;
            for (int i = 0; i < k; ++i) shifts.push_back(oracle::random_rational(rng));
            for (int m = 0; m <= 10; ++m) {
                CAPTURE(k);
                CAPTURE(m);
                const Poly p = Poly::monomial(1, static_cast<std::size_t>(m));
                CHECK(verify_lemma1(shifts, p));
                CHECK(verify_lemma3(shifts, p));
            }
        }
}

TEST_CASE("symbolic lemmas with random unit-sum weights") {
    CHECK(verify_lemma2(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}, 2));
    CHECK(verify_lemma2(std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)}, 5));
    CHECK(verify_lemma4(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}, 3));
    CHECK(verify_lemma4(std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)}, 4));
    CHECK(verify_general_f(std::vector<Rational>{Rational(1, 3), Rational(2, 3)}, Poly{0, 1, 0, 1}));
    CHECK(verify_general_f(std::vector<Rational>{Rational(1, 3), Rational(2, 3)}, Poly(Rational(5, 7))));

    std::mt19937_64 rng(17);
    for (int k = 1; k <= 3; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            const auto u = oracle::random_unit_tuple(rng, k);
            for (int n = 0; n <= 12; ++n) {
                CAPTURE(k);
                CAPTURE(n);
                CHECK(verify_lemma2(u, n));
                CHECK(verify_lemma4(u, n));
                // f = x^n reproduces the power form
                const Sides general = general_f_sides(u, Poly::monomial(1, static_cast<std::size_t>(n)));
                const Sides power = lemma2_sides(u, n);
                CHECK(general.lhs == power.lhs * factorial(n));
                CHECK(general.rhs == power.rhs * factorial(n));
            }
            CHECK(verify_general_f(u, oracle::random_poly(rng, 6)));
        }
}

TEST_CASE("unit-sum precondition") {
    const std::vector<Rational> bad{Rational(1, 2), Rational(1, 3)};
    CHECK_THROWS_AS(verify_lemma2(bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma4(bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_general_f(bad, Poly::x()), std::invalid_argument);
}
