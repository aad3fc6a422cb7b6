#pragma once

#include "bek/identities.hpp"
#include "bek/poly.hpp"
#include "bek/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bek::registry {

// Named rational parameters. Scalars (a, b, p, epsilon) hold one value;
// a_vec holds the full tuple.
using Params = std::map<std::string, std::vector<Rational>>;

struct Inputs {
    int n = 0;
    std::optional<int> k;
    Params params;

    // Scalar parameter lookup; throws std::invalid_argument when missing.
    const Rational& scalar(const std::string& key) const;
    const std::vector<Rational>& vec(const std::string& key) const;
};

// Parses "a=1/2,b=3/2" or "a_vec=1,2,1/2". Bare values extend the previous key.
Params parse_params(std::string_view text);
std::string format_params(const Params& params);

enum class Form { Polynomial, Number };

struct IdentitySpec {
    std::string name;
    std::string summary;
    Form form = Form::Polynomial;
    // Parameter keys the evaluator reads; "k" means the entry takes --k.
    std::vector<std::string> arity;
    std::string validity;
    std::string default_grid;  // human-readable description of grid()

    std::function<Sides(const Inputs&, const identities::Mutation&)> evaluate;
    // Default desk-scale grid.
    std::function<std::vector<Inputs>()> grid;
    // Parameter sets used when a caller supplies n but no parameters.
    std::function<std::vector<Inputs>(int n, std::optional<int> k)> expand;
};

const std::vector<IdentitySpec>& all();
const IdentitySpec* find(std::string_view name);
std::vector<std::string> names();

enum class Status { Pass, Fail, Error };
std::string_view to_string(Status s);

struct IdentityReport {
    std::string identity;
    Inputs inputs;
    Status status = Status::Error;
    Poly lhs, rhs, difference;
    std::string error;
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    identities::Mutation mutation;
    unsigned threads = 1;
};

// One report per grid point, in grid order. Domain errors at a point become
// Status::Error reports; the batch continues.
std::vector<IdentityReport> verify(const IdentitySpec& spec, const std::vector<Inputs>& grid,
                                   const VerifyOptions& options = {});

}  // namespace bek::registry
