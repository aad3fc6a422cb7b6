#include "bek/sequences.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <thread>
#include <vector>

using namespace bek;

namespace {

Poly parse_poly(std::initializer_list<Rational> ascending) { return Poly(ascending); }

}  // namespace

TEST_CASE("table values of the three number sequences") {
    const std::vector<Rational> b{1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
    const std::vector<Rational> e{1, 0, -1, 0, 5, 0, -61};
    const std::vector<Rational> g{0, 1, -1, 0, 1, 0, -3};
    for (int n = 0; n <= 6; ++n) {
        CHECK(bernoulli_number(n) == b[static_cast<std::size_t>(n)]);
        CHECK(euler_number(n) == e[static_cast<std::size_t>(n)]);
        CHECK(genocchi_number(n) == g[static_cast<std::size_t>(n)]);
    }
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(euler_number(8) == 1385);
}

TEST_CASE("table polynomials") {
    CHECK(bernoulli_poly(0) == Poly(1));
    CHECK(bernoulli_poly(2) == parse_poly({Rational(1, 6), -1, 1}));
    CHECK(bernoulli_poly(5) == parse_poly({0, Rational(-1, 6), 0, Rational(5, 3), Rational(-5, 2), 1}));
    CHECK(bernoulli_poly(6) == parse_poly({Rational(1, 42), 0, Rational(-1, 2), 0, Rational(5, 2), -3, 1}));
    CHECK(euler_poly(0) == Poly(1));
    CHECK(euler_poly(3) == parse_poly({Rational(1, 4), 0, Rational(-3, 2), 1}));
    CHECK(euler_poly(4) == parse_poly({0, 1, 0, -2, 1}));
    CHECK(euler_poly(6) == parse_poly({0, -3, 0, 5, 0, -3, 1}));
    CHECK(euler_poly_at_zero(0) == 1);
    CHECK(euler_poly_at_zero(3) == Rational(1, 4));
    CHECK(euler_poly_at_zero(5) == Rational(-1, 2));
}

TEST_CASE("numbers agree with generating-function oracles") {
    constexpr int N = 60;
    const auto b = oracle::bernoulli_numbers(N);
    const auto e = oracle::euler_numbers(N);
    const auto g = oracle::genocchi_numbers(N);
    for (int n = 0; n <= N; ++n) {
        CAPTURE(n);
        CHECK(bernoulli_number(n) == b[static_cast<std::size_t>(n)]);
        CHECK(euler_number(n) == e[static_cast<std::size_t>(n)]);
        CHECK(genocchi_number(n) == g[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("parity, integrality and special values") {
    for (int n = 0; n <= 40; ++n) {
        CAPTURE(n);
        if (n % 2 == 1 && n > 1) CHECK(bernoulli_number(n).is_zero());
        if (n % 2 == 1) CHECK(euler_number(n).is_zero());
        CHECK(genocchi_number(n).is_integer());
        CHECK(euler_number(n).is_integer());
        const Poly& bn = bernoulli_poly(n);
        CHECK(bn.degree() == n);
        CHECK(bn.coeff(static_cast<std::size_t>(n)) == 1);
        CHECK(bn(Rational(0)) == bernoulli_number(n));
        CHECK(bn(Rational(1, 2)) == (pow(Rational(2), 1 - n) - Rational(1)) * bernoulli_number(n));
        CHECK(bn(Rational(1)) == pow(Rational(-1), n) * bernoulli_number(n));
        const Poly& en = euler_poly(n);
        CHECK(en.degree() == n);
        CHECK(en(Rational(0)) == euler_poly_at_zero(n));
        CHECK(en(Rational(1, 2)) == euler_number(n) / pow(Rational(2), n));
        CHECK(euler_poly_at_zero(n) == genocchi_number(n + 1) / Rational(n + 1));
    }
}

TEST_CASE("difference equations characterize the polynomials") {
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        const Poly& bn = bernoulli_poly(n);
        const Poly expected = n == 0 ? Poly() : Poly::monomial(Rational(n), static_cast<std::size_t>(n - 1));
        CHECK(bn.shift(Rational(1)) - bn == expected);
        if (n >= 1) CHECK(oracle::unit_integral(bn).is_zero());
        const Poly& en = euler_poly(n);
        CHECK(en + en.shift(Rational(1)) == Poly::monomial(Rational(2), static_cast<std::size_t>(n)));
    }
}

TEST_CASE("concurrent readers see one consistent table") {
    SequenceCache cache;
    std::vector<Rational> seen(8);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 8; ++t)
            pool.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = cache.bernoulli_number(20 + 2 * t); });
    }
    for (int t = 0; t < 8; ++t) CHECK(seen[static_cast<std::size_t>(t)] == bernoulli_number(20 + 2 * t));
}
