#include "bek/report.hpp"

#include "bek/sequences.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bek::report {

using nlohmann::ordered_json;
using registry::IdentityReport;
using registry::Status;

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

ordered_json coefficients(const Poly& p) {
    ordered_json arr = ordered_json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

ordered_json inputs_json(const registry::Inputs& in) {
    ordered_json j;
    j["n"] = in.n;
    if (in.k) j["k"] = *in.k;
    for (const auto& [key, values] : in.params) {
        if (key == "a_vec") {
            ordered_json arr = ordered_json::array();
            for (const auto& v : values) arr.push_back(v.str());
            j[key] = arr;
        } else {
            j[key] = values.front().str();
        }
    }
    return j;
}

ordered_json to_json(const IdentityReport& r, bool with_timing) {
    ordered_json j;
    j["identity"] = r.identity;
    j["inputs"] = inputs_json(r.inputs);
    j["status"] = std::string(registry::to_string(r.status));
    if (r.status == Status::Error) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["difference"] = nullptr;
        j["error"] = r.error;
    } else {
        j["lhs"] = coefficients(r.lhs);
        j["rhs"] = coefficients(r.rhs);
        j["difference"] = coefficients(r.difference);
    }
    if (with_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    else
        j["elapsed_ms"] = nullptr;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_header() { return "identity,n,k,params,status,lhs,rhs,difference,elapsed_ms,error"; }

std::string csv_row(const IdentityReport& r, bool with_timing) {
    const bool err = r.status == Status::Error;
    std::ostringstream os;
    os << csv_escape(r.identity) << ',' << r.inputs.n << ',' << (r.inputs.k ? std::to_string(*r.inputs.k) : "")
       << ',' << csv_escape(registry::format_params(r.inputs.params)) << ',' << registry::to_string(r.status) << ','
       << (err ? "" : csv_escape(r.lhs.str())) << ',' << (err ? "" : csv_escape(r.rhs.str())) << ','
       << (err ? "" : csv_escape(r.difference.str())) << ',';
    if (with_timing) os << std::fixed << std::setprecision(3) << r.elapsed_ms;
    os << ',' << csv_escape(r.error);
    return os.str();
}

std::string describe_inputs(const registry::Inputs& in) {
    std::string s = "n=" + std::to_string(in.n);
    if (in.k) s += " k=" + std::to_string(*in.k);
    if (!in.params.empty()) s += " " + registry::format_params(in.params);
    return s;
}

namespace {

const char* paint(bool color, Status s) {
    if (!color) return "";
    switch (s) {
    case Status::Pass: return "\033[32m";
    case Status::Fail: return "\033[31m";
    case Status::Error: return "\033[33m";
    }
    return "";
}

const char* reset(bool color) { return color ? "\033[0m" : ""; }

}  // namespace

void write_text(std::ostream& os, const std::string& identity, const std::vector<IdentityReport>& reports,
                const TextStyle& style) {
    std::size_t pass = 0, fail = 0, error = 0;
    double total_ms = 0.0;
    int lo = 0, hi = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        pass += r.status == Status::Pass;
        fail += r.status == Status::Fail;
        error += r.status == Status::Error;
        total_ms += r.elapsed_ms;
        lo = i == 0 ? r.inputs.n : std::min(lo, r.inputs.n);
        hi = i == 0 ? r.inputs.n : std::max(hi, r.inputs.n);
    }
    const Status overall = error ? Status::Error : fail ? Status::Fail : Status::Pass;
    os << paint(style.color, overall) << (overall == Status::Pass ? "PASS" : overall == Status::Fail ? "FAIL" : "ERROR")
       << reset(style.color) << ' ' << identity << ": " << pass << '/' << reports.size() << " pass";
    if (fail) os << ", " << fail << " fail";
    if (error) os << ", " << error << " error";
    if (!reports.empty()) os << " (n = " << lo << ".." << hi << ')';
    if (style.with_timing) os << " [" << std::fixed << std::setprecision(1) << total_ms << " ms]";
    os << '\n';
    for (const auto& r : reports) {
        if (r.status == Status::Pass) continue;
        os << "  " << paint(style.color, r.status) << registry::to_string(r.status) << reset(style.color) << ' '
           << describe_inputs(r.inputs) << '\n';
        if (r.status == Status::Error) {
            os << "    " << r.error << '\n';
            continue;
        }
        os << "    lhs        = " << r.lhs << '\n'
           << "    rhs        = " << r.rhs << '\n'
           << "    difference = " << r.difference << '\n';
    }
}

void write_table(std::ostream& os, int max_n, Format format) {
    if (max_n < 0) throw std::domain_error("max-n must be non-negative");
    if (format == Format::Json) {
        ordered_json rows = ordered_json::array();
        for (int n = 0; n <= max_n; ++n) {
            ordered_json row;
            row["n"] = n;
            row["B"] = bernoulli_number(n).str();
            row["E"] = euler_number(n).str();
            row["G"] = genocchi_number(n).str();
            row["B(x)"] = coefficients(bernoulli_poly(n));
            row["E(x)"] = coefficients(euler_poly(n));
            rows.push_back(row);
        }
        os << rows.dump(2) << '\n';
        return;
    }
    if (format == Format::Csv) {
        os << "n,B_n,E_n,G_n,B_n(x),E_n(x)\n";
        for (int n = 0; n <= max_n; ++n)
            os << n << ',' << bernoulli_number(n) << ',' << euler_number(n) << ',' << genocchi_number(n) << ','
               << csv_escape(bernoulli_poly(n).str()) << ',' << csv_escape(euler_poly(n).str()) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells{{"n", "B_n", "E_n", "G_n", "B_n(x)", "E_n(x)"}};
    for (int n = 0; n <= max_n; ++n)
        cells.push_back({std::to_string(n), bernoulli_number(n).str(), euler_number(n).str(),
                         genocchi_number(n).str(), bernoulli_poly(n).str(), euler_poly(n).str()});
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::size_t pad = width[c] - row[c].size();
            // numbers right-aligned, polynomials left-aligned
            if (c < 4)
                line += std::string(pad, ' ') + row[c];
            else
                line += row[c] + std::string(c + 1 < row.size() ? pad : 0, ' ');
            if (c + 1 < row.size()) line += "  ";
        }
        os << line << '\n';
    }
}

}  // namespace bek::report
