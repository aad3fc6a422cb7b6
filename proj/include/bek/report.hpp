#pragma once

#include "bek/registry.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

// Serialization of verification reports and sequence tables. Rationals are
// written as "p/q" (or "n") strings; polynomials as coefficient arrays in
// ascending degree, the zero polynomial as ["0"].
namespace bek::report {

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& name);

nlohmann::ordered_json coefficients(const Poly& p);
nlohmann::ordered_json inputs_json(const registry::Inputs& in);
// elapsed_ms is null unless with_timing is set, keeping output reproducible.
nlohmann::ordered_json to_json(const registry::IdentityReport& r, bool with_timing);

std::string csv_header();
std::string csv_row(const registry::IdentityReport& r, bool with_timing);
std::string csv_escape(const std::string& field);

struct TextStyle {
    bool color = false;
    bool with_timing = false;
};
// Summary line per identity, then every failing or erroring point in full.
void write_text(std::ostream& os, const std::string& identity, const std::vector<registry::IdentityReport>& reports,
                const TextStyle& style);

std::string describe_inputs(const registry::Inputs& in);

// Table of B_n, E_n, G_n, B_n(x), E_n(x) for n = 0..max_n.
void write_table(std::ostream& os, int max_n, Format format);

}  // namespace bek::report
