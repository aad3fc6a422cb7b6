#include "bek/combinatorics.hpp"
#include "bek/poly.hpp"
#include "bek/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace bek;

TEST_CASE("rational parsing and formatting") {
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("-1/2").str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 2) == 15);
    for (int n = 0; n < 10; ++n) CHECK(binomial(n, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(100, 50) == Rational(Rational::parse("100891344545564193334812497256")));
}

TEST_CASE("multinomial") {
    CHECK(multinomial(4, std::vector<int>{2, 1, 1}) == 12);
    CHECK(multinomial(3, std::vector<int>{1, 1, 1}) == 6);
    for (int n = 0; n < 8; ++n) CHECK(multinomial(n, std::vector<int>{n}) == 1);
    for (int n = 0; n < 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(multinomial(n, std::vector<int>{k, n - k}) == binomial(n, k));
    CHECK_THROWS_AS(multinomial(4, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST_CASE("pochhammer and gamma ratio") {
    for (int n = 0; n < 15; ++n) CHECK(pochhammer(Rational(1), n) == factorial(n));
    CHECK(pochhammer(Rational(3, 4), 0) == 1);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational z = oracle::random_rational(rng);
        for (int k = 0; k < 8; ++k) CHECK(pochhammer(z, k + 1) == pochhammer(z, k) * (z + Rational(k)));
    }
    CHECK(gamma_ratio(Rational(5), -1) == Rational(1, 4));
    CHECK(gamma_ratio(Rational(1, 2), 2) == Rational(3, 4));
    CHECK_THROWS_AS(gamma_ratio(Rational(1), -1), std::domain_error);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(4) == Rational(25, 12));
    CHECK(harmonic_shifted(Rational(2), 3) == Rational(13, 12));
    for (int n = 0; n < 20; ++n) CHECK(harmonic_shifted(Rational(1), n) == harmonic(n));
    CHECK(harmonic_second(3) == Rational(49, 36));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational a = oracle::random_rational(rng, 9, 7, true);
        for (int n = 0; n < 10; ++n)
            CHECK(harmonic_shifted(a, n + 1) == harmonic_shifted(a, n) + Rational(1) / (Rational(n) + a));
    }
    CHECK_THROWS_AS(harmonic_shifted(Rational(0), 3), std::domain_error);
}

TEST_CASE("polynomial operations") {
    const Poly b2{Rational(1, 6), Rational(-1), Rational(1)};
    const Poly half{Rational(-1, 2), Rational(1)};
    CHECK(poly_mul(half, half) == Poly{Rational(1, 4), Rational(-1), Rational(1)});
    CHECK(poly_compose_linear(b2, Rational(2)) == Poly{Rational(1, 6), Rational(-2), Rational(4)});
    CHECK(poly_eval(b2, Rational(1, 2)) == Rational(-1, 12));
    CHECK(b2.str() == "x^2 - x + 1/6");
    CHECK(Poly().str() == "0");
    CHECK(Poly().degree() == -1);
    CHECK((b2 - b2).is_zero());
    CHECK(b2.derivative() == Poly{Rational(-1), Rational(2)});
    CHECK(Poly::x().shift(Rational(3)) == Poly{Rational(3), Rational(1)});
}

TEST_CASE("polynomial ring laws at random rational points") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly p = oracle::random_poly(rng, 5), q = oracle::random_poly(rng, 4);
        const Rational t = oracle::random_rational(rng), u = oracle::random_rational(rng);
        CHECK(poly_eval(poly_mul(p, q), t) == poly_eval(p, t) * poly_eval(q, t));
        CHECK(poly_eval(p + q, t) == poly_eval(p, t) + poly_eval(q, t));
        CHECK(poly_eval(p.shift(u), t) == poly_eval(p, t + u));
        CHECK(poly_eval(p.compose_linear(u), t) == poly_eval(p, u * t));
    }
}

TEST_CASE("weak compositions") {
    std::vector<std::vector<int>> seen;
    for (const auto& c : compositions(2, 2)) seen.push_back(c.parts);
    CHECK(seen == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

    seen.clear();
    for (const auto& c : compositions(0, 3)) seen.push_back(c.parts);
    CHECK(seen == std::vector<std::vector<int>>{{0, 0, 0}});

    CHECK(compositions(5, 3).count() == 21);

    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 8; ++n) {
            std::set<std::vector<int>> distinct;
            std::vector<int> previous;
            Rational total;
            long count = 0;
            for (const auto& c : compositions(n, k)) {
                int sum = 0;
                for (int v : c.parts) sum += v;
                CHECK(sum == n);
                if (!previous.empty()) CHECK(previous < c.parts);
                previous = c.parts;
                distinct.insert(c.parts);
                total += multinomial(n, c.parts);
                ++count;
            }
            CHECK(Rational(count) == compositions(n, k).count());
            CHECK(distinct.size() == static_cast<std::size_t>(count));
            CHECK(total == pow(Rational(k), n));
        }
}
