#pragma once

#include "bek/poly.hpp"
#include "bek/rational.hpp"
#include "bek/sides.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bek::umbral {

enum class SymbolKind { Bernoulli, Euler, UniformContinuous, UniformDiscrete };

// One umbral symbol. Distinct (kind, index) pairs are independent.
struct SymbolId {
    SymbolKind kind;
    int index = 0;

    friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

inline SymbolId bernoulli(int index = 0) { return {SymbolKind::Bernoulli, index}; }
inline SymbolId euler(int index = 0) { return {SymbolKind::Euler, index}; }
inline SymbolId uniform(int index = 0) { return {SymbolKind::UniformContinuous, index}; }
inline SymbolId uniform_discrete(int index = 0) { return {SymbolKind::UniformDiscrete, index}; }

std::string to_string(const SymbolId& s);

// n-th moment of a symbol: B -> B_n, E -> E_n(0), U -> 1/(n+1),
// V -> 1 if n = 0 else 1/2.
Rational moment(SymbolKind kind, int n);

// Product x^a * prod S_i^{e_i}; symbols kept sorted, no zero exponents.
struct Monomial {
    int x_power = 0;
    std::vector<std::pair<SymbolId, int>> symbols;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Formal polynomial in x and umbral symbols with rational coefficients.
class UmbralExpr {
public:
    using Terms = std::map<Monomial, Rational>;

    UmbralExpr() = default;
    UmbralExpr(const Rational& c);  // NOLINT(google-explicit-constructor)

    static UmbralExpr x();
    static UmbralExpr symbol(SymbolId s);
    static UmbralExpr term(const Rational& c, Monomial m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Coefficient of a monomial, zero if absent.
    Rational coeff(const Monomial& m) const;

    UmbralExpr& operator+=(const UmbralExpr& o);
    UmbralExpr& operator-=(const UmbralExpr& o);
    UmbralExpr& operator*=(const Rational& c);
    friend UmbralExpr operator+(UmbralExpr a, const UmbralExpr& b) { return a += b; }
    friend UmbralExpr operator-(UmbralExpr a, const UmbralExpr& b) { return a -= b; }
    friend UmbralExpr operator*(const UmbralExpr& a, const UmbralExpr& b);
    friend UmbralExpr operator*(UmbralExpr a, const Rational& c) { return a *= c; }
    friend UmbralExpr operator*(const Rational& c, UmbralExpr a) { return a *= c; }

    friend bool operator==(const UmbralExpr&, const UmbralExpr&) = default;

    // Adds c * m; m need not be normalized.
    void add(Monomial m, const Rational& c);

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

// One summand of an affine combination; no symbol means the indeterminate x.
struct AffineTerm {
    Rational coefficient;
    std::optional<SymbolId> symbol;
};

// (sum of terms)^n, fully expanded.
UmbralExpr umbral_pow(std::span<const AffineTerm> affine, int n);

// f(sum of terms) for a polynomial f.
UmbralExpr umbral_apply(const Poly& f, std::span<const AffineTerm> affine);

// Replaces symbol powers by moments, independent symbols multiplicatively;
// x stays formal.
Poly umbral_eval(const UmbralExpr& e);

enum class DeltaVariant { Forward, DiscreteMean };

// Composition of single-shift operators: Forward is f -> f(x+u) - f(x),
// DiscreteMean is f -> (f(x) + f(x+u)) / 2. An empty shift list is the
// identity.
struct DifferenceOp {
    std::vector<Rational> shifts;
    DeltaVariant variant = DeltaVariant::Forward;
};

Poly apply_delta(const DifferenceOp& op, const Poly& p);

// Operator identities on a test polynomial; shifts.size() is k.
Sides lemma1_sides(std::span<const Rational> shifts, const Poly& p);
Sides lemma3_sides(std::span<const Rational> shifts, const Poly& p);
bool verify_lemma1(std::span<const Rational> shifts, const Poly& p);
bool verify_lemma3(std::span<const Rational> shifts, const Poly& p);

// Symbolic identities for weights u_1..u_k summing to one. Throw
// std::invalid_argument when the weights do not sum to one.
Sides lemma2_sides(std::span<const Rational> u, int n);
Sides lemma4_sides(std::span<const Rational> u, int n);
Sides general_f_sides(std::span<const Rational> u, const Poly& f);
bool verify_lemma2(std::span<const Rational> u, int n);
bool verify_lemma4(std::span<const Rational> u, int n);
bool verify_general_f(std::span<const Rational> u, const Poly& f);

enum class AnnihilatingPair { BernoulliUniform, EulerUniformDiscrete };

// umbral_eval((S + T)^n) == 0
bool verify_annihilation(AnnihilatingPair pair, int n);

}  // namespace bek::umbral
