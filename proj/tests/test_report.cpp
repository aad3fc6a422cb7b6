#include "bek/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace bek;

TEST_CASE("report JSON schema") {
    const auto* spec = registry::find("theorem1");
    REQUIRE(spec);
    registry::Inputs in{2, std::nullopt, registry::parse_params("a=1/2,b=3/2")};
    const auto reports = registry::verify(*spec, {in});
    const auto j = report::to_json(reports.front(), false);
    for (const char* key : {"identity", "inputs", "status", "lhs", "rhs", "difference", "elapsed_ms"}) {
        CAPTURE(key);
        CHECK(j.contains(key));
    }
    CHECK(j["identity"] == "theorem1");
    CHECK(j["status"] == "pass");
    CHECK(j["inputs"]["n"] == 2);
    CHECK(j["inputs"]["a"] == "1/2");
    CHECK(j["elapsed_ms"].is_null());
    CHECK(j["difference"] == nlohmann::ordered_json::array({"0"}));
    for (const auto& c : j["lhs"]) CHECK(c.is_string());
    CHECK(report::to_json(reports.front(), true)["elapsed_ms"].is_number());
}

TEST_CASE("coefficient arrays are ascending exact strings") {
    const Poly p{Rational(1, 6), -1, 1};
    CHECK(report::coefficients(p) == nlohmann::ordered_json::array({"1/6", "-1", "1"}));
    CHECK(report::coefficients(Poly()) == nlohmann::ordered_json::array({"0"}));
}

TEST_CASE("csv rows quote fields with commas") {
    CHECK(report::csv_escape("a=1,b=2") == "\"a=1,b=2\"");
    CHECK(report::csv_escape("plain") == "plain");
    CHECK(report::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const auto* spec = registry::find("theorem1");
    const auto reports = registry::verify(*spec, {registry::Inputs{1, std::nullopt, registry::parse_params("a=1,b=1")}});
    CHECK(report::csv_row(reports.front(), false) ==
          "theorem1,1,,\"a=1,b=1\",pass,x - 1/2,x - 1/2,0,,");
}

TEST_CASE("text table reproduces the first seven rows") {
    std::ostringstream os;
    report::write_table(os, 6, report::Format::Text);
    const std::string expected =
        "n    B_n  E_n  G_n  B_n(x)                                   E_n(x)\n"
        "0      1    1    0  1                                        1\n"
        "1   -1/2    0    1  x - 1/2                                  x - 1/2\n"
        "2    1/6   -1   -1  x^2 - x + 1/6                            x^2 - x\n"
        "3      0    0    0  x^3 - (3/2)x^2 + (1/2)x                  x^3 - (3/2)x^2 + 1/4\n"
        "4  -1/30    5    1  x^4 - 2x^3 + x^2 - 1/30                  x^4 - 2x^3 + x\n"
        "5      0    0    0  x^5 - (5/2)x^4 + (5/3)x^3 - (1/6)x       x^5 - (5/2)x^4 + (5/2)x^2 - 1/2\n"
        "6   1/42  -61   -3  x^6 - 3x^5 + (5/2)x^4 - (1/2)x^2 + 1/42  x^6 - 3x^5 + 5x^3 - 3x\n";
    CHECK(os.str() == expected);
}
