#include "bek/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace bek::registry {

namespace ids = bek::identities;
using ids::Mutation;

namespace {

using NumberFn = Sides (*)(int, const Mutation&);

Rational r(long num, long den = 1) { return {num, den}; }

std::vector<Inputs> n_range(int lo, int hi, int step = 1) {
    std::vector<Inputs> out;
    for (int n = lo; n <= hi; n += step) out.push_back(Inputs{n, std::nullopt, {}});
    return out;
}

std::vector<Inputs> cross(const std::vector<Inputs>& ns, const std::vector<Params>& sets) {
    std::vector<Inputs> out;
    for (const auto& p : sets)
        for (auto in : ns) {
            in.params = p;
            out.push_back(std::move(in));
        }
    return out;
}

std::vector<Params> scalar_sets(const std::string& key, const std::vector<Rational>& values) {
    std::vector<Params> out;
    for (const auto& v : values) out.push_back(Params{{key, {v}}});
    return out;
}

std::vector<Params> pair_sets() {
    std::vector<Params> out;
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{
             {r(1), r(1)}, {r(2), r(1)}, {r(1, 2), r(3, 2)}, {r(7, 3), r(5, 4)}})
        out.push_back(Params{{"a", {a}}, {"b", {b}}});
    return out;
}

// Parameter tuples per k, all-ones first.
std::vector<std::vector<Rational>> tuples_for(int k) {
    switch (k) {
    case 1: return {{r(1)}, {r(2)}, {r(1, 2)}, {r(3, 2)}};
    case 2: return {{r(1), r(1)}, {r(2), r(1)}, {r(1, 2), r(3, 2)}, {r(7, 3), r(5, 4)}};
    case 3: return {{r(1), r(1), r(1)}, {r(1), r(2), r(1, 2)}, {r(3, 2), r(1, 2), r(2)}};
    case 4:
        return {{r(1), r(1), r(1), r(1)}, {r(1), r(2), r(1, 2), r(3, 2)}, {r(2), r(2), r(1, 2), r(1, 2)}};
    default: return {std::vector<Rational>(static_cast<std::size_t>(k), r(1))};
    }
}

std::vector<Inputs> tuple_inputs(int n, int k) {
    std::vector<Inputs> out;
    for (auto& t : tuples_for(k)) out.push_back(Inputs{n, k, Params{{"a_vec", std::move(t)}}});
    return out;
}

// Grid for the k-fold entries: n limits per k.
std::vector<Inputs> tuple_grid(const std::vector<std::pair<int, int>>& k_and_max_n, int n_min) {
    std::vector<Inputs> out;
    for (auto [k, max_n] : k_and_max_n)
        for (const auto& t : tuples_for(k))
            for (int n = n_min; n <= max_n; ++n) out.push_back(Inputs{n, k, Params{{"a_vec", t}}});
    return out;
}

const std::vector<Rational>& a_vec_checked(const Inputs& in) {
    const auto& a = in.vec("a_vec");
    if (in.k && static_cast<std::size_t>(*in.k) != a.size())
        throw std::domain_error("k = " + std::to_string(*in.k) + " does not match " + std::to_string(a.size()) +
                                " entries of a_vec");
    return a;
}

IdentitySpec plain(std::string name, std::string summary, Form form, std::string validity, int lo, int hi,
                   int step, NumberFn fn) {
    IdentitySpec s;
    s.name = std::move(name);
    s.summary = std::move(summary);
    s.form = form;
    s.validity = std::move(validity);
    s.default_grid = "n = " + std::to_string(lo) + ".." + std::to_string(hi) +
                     (step == 1 ? std::string() : " step " + std::to_string(step));
    s.evaluate = [fn](const Inputs& in, const Mutation& m) { return fn(in.n, m); };
    s.grid = [lo, hi, step] { return n_range(lo, hi, step); };
    s.expand = [](int n, std::optional<int>) { return n_range(n, n); };
    return s;
}

IdentitySpec scalar_param(std::string name, std::string summary, Form form, std::string validity,
                          const std::string& key, std::vector<Rational> values, int lo, int hi,
                          Sides (*fn)(int, const Rational&, const Mutation&)) {
    IdentitySpec s;
    s.name = std::move(name);
    s.summary = std::move(summary);
    s.form = form;
    s.arity = {key};
    s.validity = std::move(validity);
    std::string listed;
    for (const auto& v : values) listed += (listed.empty() ? "" : ", ") + v.str();
    s.default_grid = "n = " + std::to_string(lo) + ".." + std::to_string(hi) + " x " + key + " in {" + listed + "}";
    s.evaluate = [fn, key](const Inputs& in, const Mutation& m) { return fn(in.n, in.scalar(key), m); };
    s.grid = [=] { return cross(n_range(lo, hi), scalar_sets(key, values)); };
    s.expand = [=](int n, std::optional<int>) { return cross(n_range(n, n), scalar_sets(key, values)); };
    return s;
}

IdentitySpec ab_param(std::string name, std::string summary, std::string validity, int lo, int hi,
                      Sides (*fn)(int, const Rational&, const Rational&, const Mutation&)) {
    IdentitySpec s;
    s.name = std::move(name);
    s.summary = std::move(summary);
    s.arity = {"a", "b"};
    s.validity = std::move(validity);
    s.default_grid = "n = " + std::to_string(lo) + ".." + std::to_string(hi) +
                     " x (a,b) in {(1,1), (2,1), (1/2,3/2), (7/3,5/4)}";
    s.evaluate = [fn](const Inputs& in, const Mutation& m) { return fn(in.n, in.scalar("a"), in.scalar("b"), m); };
    s.grid = [=] { return cross(n_range(lo, hi), pair_sets()); };
    s.expand = [](int n, std::optional<int>) { return cross(n_range(n, n), pair_sets()); };
    return s;
}

IdentitySpec tuple_param(std::string name, std::string summary, std::string validity,
                         std::vector<std::pair<int, int>> k_and_max_n, int min_k,
                         Sides (*fn)(int, std::span<const Rational>, const Mutation&)) {
    IdentitySpec s;
    s.name = std::move(name);
    s.summary = std::move(summary);
    s.arity = {"k", "a_vec"};
    s.validity = std::move(validity);
    for (auto [k, max_n] : k_and_max_n)
        s.default_grid += (s.default_grid.empty() ? "" : "; ") + std::string("k = ") + std::to_string(k) +
                          ", n = 0.." + std::to_string(max_n);
    s.default_grid += "; tuples from {1, 2, 1/2, 3/2, 7/3, 5/4} including all-ones";
    s.evaluate = [fn](const Inputs& in, const Mutation& m) { return fn(in.n, a_vec_checked(in), m); };
    s.grid = [k_and_max_n] { return tuple_grid(k_and_max_n, 0); };
    s.expand = [k_and_max_n, min_k](int n, std::optional<int> k) {
        if (k) {
            if (*k < min_k) throw std::domain_error("k must be at least " + std::to_string(min_k));
            return tuple_inputs(n, *k);
        }
        std::vector<Inputs> out;
        for (auto [kk, max_n] : k_and_max_n) {
            auto part = tuple_inputs(n, kk);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    };
    return s;
}

std::vector<IdentitySpec> build() {
    const std::vector<Rational> ds_p{r(1, 2), r(1), r(3, 2), r(2), r(7, 3)};
    std::vector<Rational> ds_p0{r(0)};
    ds_p0.insert(ds_p0.end(), ds_p.begin(), ds_p.end());

    std::vector<IdentitySpec> v;
    v.push_back(ab_param("theorem1", "weighted second-order convolution of Bernoulli polynomials",
                         "n >= 1, a > 0, b > 0", 1, 30, &ids::theorem1));
    v.push_back(tuple_param("theorem2", "k-fold weighted convolution of Bernoulli polynomials",
                            "n >= 0, k >= 2, all a_i > 0", {{2, 20}, {3, 14}, {4, 10}}, 2, &ids::theorem2));
    v.push_back(ab_param("theorem3", "weighted second-order convolution of Euler polynomials",
                         "n >= 1, a > 0, b > 0", 1, 30, &ids::theorem3));
    v.push_back(tuple_param("theorem4", "k-fold weighted convolution of Euler polynomials",
                            "n >= 0, k >= 1, all a_i > 0", {{1, 20}, {2, 20}, {3, 14}, {4, 10}}, 1,
                            &ids::theorem4));
    v.push_back(plain("euler-1-2", "Euler's quadratic identity for Bernoulli numbers", Form::Number, "n >= 1", 1,
                      60, 1, &ids::euler_quadratic));
    v.push_back(plain("miki", "Miki's identity", Form::Number, "n >= 4", 4, 60, 1, &ids::miki));
    v.push_back(plain("matiyasevich", "Matiyasevich's identity", Form::Number, "n >= 4", 4, 60, 1,
                      &ids::matiyasevich));
    v.push_back(plain("corollary1", "theorem1 at a = b = 1", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::corollary1));
    v.push_back(plain("corollary2", "corollary1 at x = 0", Form::Number, "even n >= 4", 4, 60, 2,
                      &ids::corollary2));
    v.push_back(scalar_param("corollary3", "shifted-harmonic analogue of Miki's identity", Form::Polynomial,
                             "n >= 1, a > 0", "a", {r(1), r(2), r(1, 2), r(7, 3)}, 1, 30, &ids::corollary3));
    v.push_back(plain("corollary4", "corollary3 at a = 1, symmetrized", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::corollary4_a1));
    v.push_back(plain("corollary4b", "corollary3 at a = 2", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::corollary4_a2));
    v.push_back(plain("eq-2-12", "corollary3 at a = 1 before symmetrization", Form::Polynomial, "n >= 1", 1, 30,
                      1, &ids::corollary3_a1_unsymmetrized));
    v.push_back(plain("corollary5", "polynomial form of Euler's identity", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::corollary5));
    v.push_back(plain("corollary6", "equal-weight limit, duplication form", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::corollary6));
    v.push_back(plain("eq-2-15", "equal-weight limit", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::half_weight_limit));
    v.push_back(plain("corollary7", "second-order harmonic analogue of Miki's identity", Form::Polynomial,
                      "n >= 1", 1, 30, 1, &ids::corollary7));
    v.push_back(plain("eq-4-0a", "theorem2 at k = 3, a = (1,1,1)", Form::Polynomial, "n >= 3", 3, 30, 1,
                      &ids::third_order_matiyasevich));

    {
        IdentitySpec s;
        s.name = "kth-matiyasevich";
        s.summary = "k-th order Matiyasevich identity for Bernoulli numbers";
        s.form = Form::Number;
        s.arity = {"k"};
        s.validity = "n >= 0, k >= 2";
        s.default_grid = "k = 2, 3 with n = 0..60; k = 4 with n = 0..40";
        s.evaluate = [](const Inputs& in, const Mutation& m) {
            if (!in.k) throw std::invalid_argument("kth-matiyasevich needs --k");
            return ids::kth_order_matiyasevich(in.n, *in.k, m);
        };
        s.grid = [] {
            std::vector<Inputs> out;
            for (auto [k, max_n] : std::vector<std::pair<int, int>>{{2, 60}, {3, 60}, {4, 40}})
                for (int n = 0; n <= max_n; ++n) out.push_back(Inputs{n, k, {}});
            return out;
        };
        s.expand = [](int n, std::optional<int> k) {
            std::vector<Inputs> out;
            if (k) out.push_back(Inputs{n, k, {}});
            else
                for (int kk = 2; kk <= 4; ++kk) out.push_back(Inputs{n, kk, {}});
            return out;
        };
        v.push_back(std::move(s));
    }

    v.push_back(scalar_param("eq-6-9", "theorem2 at k = 3 with equal weights epsilon", Form::Polynomial,
                             "n >= 2, epsilon > 0", "epsilon", {r(1), r(1, 2), r(3)}, 2, 20,
                             &ids::triple_epsilon));
    v.push_back(plain("corollary8", "third-order multinomial convolution", Form::Polynomial, "n >= 2", 2, 30, 1,
                      &ids::corollary8));
    v.push_back(plain("corollary9", "third-order analogue of Miki's identity", Form::Number, "n >= 2", 2, 60, 1,
                      &ids::corollary9));
    v.push_back(plain("corollary10", "Euler analogue of Miki's identity, first form", Form::Polynomial, "n >= 2",
                      2, 30, 1, &ids::corollary10_first));
    v.push_back(plain("corollary10b", "Euler analogue of Miki's identity, second form", Form::Polynomial,
                      "n >= 1", 1, 30, 1, &ids::corollary10_second));
    v.push_back(plain("corollary11", "third-order Euler convolution, first form", Form::Polynomial, "n >= 2", 2,
                      30, 1, &ids::corollary11_first));
    v.push_back(plain("corollary11b", "third-order Euler convolution, second form", Form::Polynomial, "n >= 2",
                      2, 30, 1, &ids::corollary11_second));
    v.push_back(plain("theorem3-ab1", "theorem3 at a = b = 1", Form::Polynomial, "n >= 1", 1, 30, 1,
                      &ids::theorem3_unit));
    v.push_back(scalar_param("dunne-schubert", "Dunne-Schubert identity, Pochhammer-normalized", Form::Number,
                             "n >= 2, p >= 0", "p", ds_p0, 2, 15, &ids::dunne_schubert));
    v.push_back(plain("dunne-schubert-p1", "Dunne-Schubert identity at p = 1", Form::Number, "n >= 2", 2, 60, 1,
                      &ids::dunne_schubert_p1));
    v.push_back(scalar_param("eq-7-2", "Dunne-Schubert left side via theorem1 at a = b = p", Form::Number,
                             "n >= 2, p > 0", "p", ds_p, 2, 15, &ids::dunne_schubert_from_theorem1));
    v.push_back(scalar_param("gamma-sum", "finite sum of gamma ratios", Form::Number, "n >= 1, p > 0", "p", ds_p,
                             1, 30, &ids::gamma_sum));
    return v;
}

}  // namespace

const std::vector<IdentitySpec>& all() {
    static const std::vector<IdentitySpec> specs = build();
    return specs;
}

const IdentitySpec* find(std::string_view name) {
    const auto& specs = all();
    auto it = std::find_if(specs.begin(), specs.end(), [&](const IdentitySpec& s) { return s.name == name; });
    return it == specs.end() ? nullptr : &*it;
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& s : all()) out.push_back(s.name);
    return out;
}

}  // namespace bek::registry
