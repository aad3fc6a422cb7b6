#include "bek/registry.hpp"

#include <stdexcept>

namespace bek::registry {

const Rational& Inputs::scalar(const std::string& key) const {
    const auto& v = vec(key);
    if (v.size() != 1) throw std::invalid_argument("parameter '" + key + "' must be a single value");
    return v.front();
}

const std::vector<Rational>& Inputs::vec(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end() || it->second.empty()) throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Params parse_params(std::string_view text) {
    Params out;
    std::string current;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (token.empty()) throw std::invalid_argument("empty entry in parameter list");
        const auto eq = token.find('=');
        if (eq != std::string_view::npos) {
            current = std::string(trim(token.substr(0, eq)));
            if (current.empty()) throw std::invalid_argument("parameter name missing before '='");
            if (out.contains(current)) throw std::invalid_argument("parameter '" + current + "' given twice");
            token = trim(token.substr(eq + 1));
            out[current];
        } else if (current.empty()) {
            throw std::invalid_argument("value '" + std::string(token) + "' has no parameter name");
        }
        out[current].push_back(Rational::parse(token));
    }
    return out;
}

std::string format_params(const Params& params) {
    std::string out;
    for (const auto& [key, values] : params) {
        if (!out.empty()) out += ',';
        out += key + '=';
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ',';
            out += values[i].str();
        }
    }
    return out;
}

}  // namespace bek::registry
