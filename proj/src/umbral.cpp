#include "bek/umbral.hpp"

#include "bek/combinatorics.hpp"
#include "bek/sequences.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace bek::umbral {

std::string to_string(const SymbolId& s) {
    const char* name = "?";
    switch (s.kind) {
        case SymbolKind::Bernoulli: name = "B"; break;
        case SymbolKind::Euler: name = "E"; break;
        case SymbolKind::UniformContinuous: name = "U"; break;
        case SymbolKind::UniformDiscrete: name = "V"; break;
    }
    return std::string(name) + std::to_string(s.index);
}

Rational moment(SymbolKind kind, int n) {
    if (n < 0) throw std::invalid_argument("moment: negative order");
    switch (kind) {
        case SymbolKind::Bernoulli: return bernoulli_number(n);
        case SymbolKind::Euler: return euler_poly_at_zero(n);
        case SymbolKind::UniformContinuous: return Rational(1, n + 1);
        case SymbolKind::UniformDiscrete: return n == 0 ? Rational(1) : Rational(1, 2);
    }
    throw std::logic_error("moment: unknown symbol kind");
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.x_power = a.x_power + b.x_power;
    out.symbols.reserve(a.symbols.size() + b.symbols.size());
    auto i = a.symbols.begin();
    auto j = b.symbols.begin();
    while (i != a.symbols.end() || j != b.symbols.end()) {
        if (j == b.symbols.end() || (i != a.symbols.end() && i->first < j->first)) {
            out.symbols.push_back(*i++);
        } else if (i == a.symbols.end() || j->first < i->first) {
            out.symbols.push_back(*j++);
        } else {
            out.symbols.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

UmbralExpr::UmbralExpr(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

UmbralExpr UmbralExpr::x() { return term(Rational(1), Monomial{1, {}}); }

UmbralExpr UmbralExpr::symbol(SymbolId s) { return term(Rational(1), Monomial{0, {{s, 1}}}); }

UmbralExpr UmbralExpr::term(const Rational& c, Monomial m) {
    UmbralExpr e;
    e.add(std::move(m), c);
    return e;
}

void UmbralExpr::add(Monomial m, const Rational& c) {
    auto& s = m.symbols;
    std::sort(s.begin(), s.end());
    std::vector<std::pair<SymbolId, int>> merged;
    merged.reserve(s.size());
    for (const auto& p : s) {
        if (!merged.empty() && merged.back().first == p.first)
            merged.back().second += p.second;
        else
            merged.push_back(p);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    s = std::move(merged);
    add_term(m, c);
}

Rational UmbralExpr::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UmbralExpr::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UmbralExpr& UmbralExpr::operator+=(const UmbralExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UmbralExpr& UmbralExpr::operator-=(const UmbralExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UmbralExpr& UmbralExpr::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

UmbralExpr operator*(const UmbralExpr& a, const UmbralExpr& b) {
    UmbralExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

std::string UmbralExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.x_power > 0) os << "*x^" << m.x_power;
        for (const auto& [s, e] : m.symbols) os << "*" << to_string(s) << "^" << e;
    }
    return os.str();
}

UmbralExpr umbral_pow(std::span<const AffineTerm> affine, int n) {
    if (n < 0) throw std::invalid_argument("umbral_pow: negative exponent");
    if (affine.empty()) return n == 0 ? UmbralExpr(Rational(1)) : UmbralExpr();

    const int m = static_cast<int>(affine.size());
    // powers[i][e] = coefficient_i^e
    std::vector<std::vector<Rational>> powers(affine.size());
    for (std::size_t i = 0; i < affine.size(); ++i) {
        powers[i].resize(static_cast<std::size_t>(n) + 1);
        powers[i][0] = Rational(1);
        for (int e = 1; e <= n; ++e)
            powers[i][static_cast<std::size_t>(e)] = powers[i][static_cast<std::size_t>(e - 1)] * affine[i].coefficient;
    }

    UmbralExpr out;
    for (const Composition& c : compositions(n, m)) {
        Rational coeff = multinomial(n, c.parts);
        Monomial mono;
        for (std::size_t i = 0; i < affine.size(); ++i) {
            const int e = c.parts[i];
            if (e == 0) continue;
            coeff *= powers[i][static_cast<std::size_t>(e)];
            if (affine[i].symbol)
                mono.symbols.emplace_back(*affine[i].symbol, e);
            else
                mono.x_power += e;
        }
        if (coeff.is_zero()) continue;
        out.add(std::move(mono), coeff);
    }
    return out;
}

UmbralExpr umbral_apply(const Poly& f, std::span<const AffineTerm> affine) {
    UmbralExpr out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        out += umbral_pow(affine, static_cast<int>(i)) * f.coeffs()[i];
    }
    return out;
}

Poly umbral_eval(const UmbralExpr& e) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : e.terms()) {
        Rational v = c;
        for (const auto& [s, power] : m.symbols) {
            v *= moment(s.kind, power);
            if (v.is_zero()) break;
        }
        if (v.is_zero()) continue;
        const auto idx = static_cast<std::size_t>(m.x_power);
        if (coeffs.size() <= idx) coeffs.resize(idx + 1);
        coeffs[idx] += v;
    }
    return Poly(std::move(coeffs));
}

Poly apply_delta(const DifferenceOp& op, const Poly& p) {
    Poly out = p;
    for (const Rational& u : op.shifts) {
        if (op.variant == DeltaVariant::Forward)
            out = out.shift(u) - out;
        else
            out = (out + out.shift(u)) * Rational(1, 2);
    }
    return out;
}

namespace {

using Mask = unsigned;

std::vector<Rational> pick(std::span<const Rational> values, Mask mask) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (mask & (Mask{1} << i)) out.push_back(values[i]);
    return out;
}

Rational sum_of(std::span<const Rational> values) {
    Rational s;
    for (const auto& v : values) s += v;
    return s;
}

Mask full_mask(std::size_t k) {
    if (k == 0 || k > 20) throw std::invalid_argument("need 1 <= k <= 20 parameters");
    return (Mask{1} << k) - 1;
}

void require_unit_sum(std::span<const Rational> u) {
    if (sum_of(u) != Rational(1)) throw std::invalid_argument("weights u_1..u_k must sum to 1");
}

// x + [base] + sum_{i not in J} u_i S_i, with S_i of the given kind and index i+1
std::vector<AffineTerm> complement_argument(std::span<const Rational> u, Mask j_mask, SymbolKind kind,
                                            std::optional<SymbolId> base) {
    std::vector<AffineTerm> arg{{Rational(1), std::nullopt}};
    if (base) arg.push_back({Rational(1), base});
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(j_mask & (Mask{1} << i))) arg.push_back({u[i], SymbolId{kind, static_cast<int>(i) + 1}});
    return arg;
}

Rational product_over(std::span<const Rational> u, Mask mask) {
    Rational r(1);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (mask & (Mask{1} << i)) r *= u[i];
    return r;
}

}  // namespace

Sides lemma1_sides(std::span<const Rational> shifts, const Poly& p) {
    const Mask all = full_mask(shifts.size());
    Sides s;
    s.lhs = apply_delta({{sum_of(shifts)}, DeltaVariant::Forward}, p);
    for (Mask j = 1; j <= all; ++j) s.rhs += apply_delta({pick(shifts, j), DeltaVariant::Forward}, p);
    return s;
}

Sides lemma3_sides(std::span<const Rational> shifts, const Poly& p) {
    const Mask all = full_mask(shifts.size());
    const bool even = shifts.size() % 2 == 0;
    Sides s;
    s.lhs = apply_delta({{sum_of(shifts)}, DeltaVariant::DiscreteMean}, p);
    Poly sum;
    for (Mask j = 1; j <= all; ++j) {
        const int size = std::popcount(j);
        sum += apply_delta({pick(shifts, j), DeltaVariant::DiscreteMean}, p) * pow(Rational(-2), size - 1);
    }
    s.rhs = even ? p - sum : sum;
    return s;
}

bool verify_lemma1(std::span<const Rational> shifts, const Poly& p) { return lemma1_sides(shifts, p).equal(); }
bool verify_lemma3(std::span<const Rational> shifts, const Poly& p) { return lemma3_sides(shifts, p).equal(); }

Sides lemma2_sides(std::span<const Rational> u, int n) {
    require_unit_sum(u);
    if (n < 0) throw std::invalid_argument("lemma2: negative n");
    const Mask all = full_mask(u.size());
    Sides s;
    const auto lhs_arg = complement_argument(u, 0, SymbolKind::Bernoulli, std::nullopt);
    s.lhs = umbral_eval(umbral_pow(lhs_arg, n)) * (Rational(1) / factorial(n));
    for (Mask j = 1; j <= all; ++j) {
        const int size = std::popcount(j);
        const int power = n + 1 - size;
        if (power < 0) continue;
        const auto arg = complement_argument(u, j, SymbolKind::Bernoulli, bernoulli(0));
        s.rhs += umbral_eval(umbral_pow(arg, power)) * (product_over(u, j) / factorial(power));
    }
    return s;
}

Sides lemma4_sides(std::span<const Rational> u, int n) {
    require_unit_sum(u);
    if (n < 0) throw std::invalid_argument("lemma4: negative n");
    const Mask all = full_mask(u.size());
    const bool even = u.size() % 2 == 0;
    Sides s;
    const auto lhs_arg = complement_argument(u, 0, SymbolKind::Euler, std::nullopt);
    s.lhs = umbral_eval(umbral_pow(lhs_arg, n));
    if (even) s.lhs *= Rational(n + 1);
    for (Mask j = 1; j <= all; ++j) {
        const int size = std::popcount(j);
        if (even) {
            const auto arg = complement_argument(u, j, SymbolKind::Euler, bernoulli(0));
            s.rhs += umbral_eval(umbral_pow(arg, n + 1)) * pow(Rational(-2), size);
        } else {
            const auto arg = complement_argument(u, j, SymbolKind::Euler, euler(0));
            s.rhs += umbral_eval(umbral_pow(arg, n)) * pow(Rational(-2), size - 1);
        }
    }
    return s;
}

Sides general_f_sides(std::span<const Rational> u, const Poly& f) {
    require_unit_sum(u);
    const Mask all = full_mask(u.size());
    Sides s;
    s.lhs = umbral_eval(umbral_apply(f, complement_argument(u, 0, SymbolKind::Bernoulli, std::nullopt)));
    std::vector<Poly> derivatives{f};
    for (Mask j = 1; j <= all; ++j) {
        const auto order = static_cast<std::size_t>(std::popcount(j) - 1);
        while (derivatives.size() <= order) derivatives.push_back(derivatives.back().derivative());
        if (derivatives[order].is_zero()) continue;
        const auto arg = complement_argument(u, j, SymbolKind::Bernoulli, bernoulli(0));
        s.rhs += umbral_eval(umbral_apply(derivatives[order], arg)) * product_over(u, j);
    }
    return s;
}

bool verify_lemma2(std::span<const Rational> u, int n) { return lemma2_sides(u, n).equal(); }
bool verify_lemma4(std::span<const Rational> u, int n) { return lemma4_sides(u, n).equal(); }
bool verify_general_f(std::span<const Rational> u, const Poly& f) { return general_f_sides(u, f).equal(); }

bool verify_annihilation(AnnihilatingPair pair, int n) {
    const bool bu = pair == AnnihilatingPair::BernoulliUniform;
    const AffineTerm terms[] = {{Rational(1), bu ? bernoulli(0) : euler(0)},
                                {Rational(1), bu ? uniform(0) : uniform_discrete(0)}};
    return umbral_eval(umbral_pow(terms, n)).is_zero();
}

}  // namespace bek::umbral
