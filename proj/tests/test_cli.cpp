#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef BEK_BINARY
#error "BEK_BINARY must point at the built CLI"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string("NO_COLOR=1 ") + BEK_BINARY + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify miki over a range") {
    const auto r = run("verify --identity miki --n 4..12 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 9);
    for (const auto& rep : j) CHECK(rep["status"] == "pass");
    CHECK(j[0]["lhs"][0] == "-5/144");
    CHECK(j[0]["rhs"][0] == "-5/144");
}

TEST_CASE("exit codes") {
    CHECK(run("verify --identity corollary2 --n 2..2").status == 2);
    CHECK(run("verify --identity no-such-thing").status == 2);
    CHECK(run("verify --identity miki --n 9..3").status == 2);
    CHECK(run("verify --identity theorem1 --n 3 --params c=1").status == 2);
    CHECK(run("verify --identity theorem1 --n 3 --params a=0,b=1").status == 2);
    CHECK(run("verify --identity miki --n 4..12 --flip-rhs-term 0").status == 1);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("mc --a 1,1 --l 1,1 --samples 1000 --sigma -1").status == 1);
    CHECK(run("--help").status == 0);
}

TEST_CASE("domain error names the validity predicate") {
    const std::string cmd = std::string(BEK_BINARY) + " verify --identity corollary2 --n 2..2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out.find("even n >= 4") != std::string::npos);
}

TEST_CASE("unknown identity lists the valid names") {
    const std::string cmd = std::string(BEK_BINARY) + " verify --identity nope 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out.find("gamma-sum") != std::string::npos);
    CHECK(out.find("kth-matiyasevich") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const char* args : {"verify --identity theorem2 --n 0..6 --k 3 --format json",
                             "verify --identity theorem1 --n 1..5 --format csv",
                             "verify --identity eq-6-9 --n 2..6 --params epsilon=1/3 --format json",
                             "mc --a 1,2,1/2 --l 2,1,3 --samples 20000 --seed 7 --format json",
                             "tables --max-n 10 --format csv"}) {
        CAPTURE(args);
        const auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("thread count does not change the report stream") {
    const auto a = run("verify --identity theorem4 --n 0..8 --format json --threads 1");
    const auto b = run("verify --identity theorem4 --n 0..8 --format json --threads 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("tables and list") {
    const auto t = run("tables --max-n 6 --format json");
    CHECK(t.status == 0);
    const auto j = nlohmann::json::parse(t.out);
    CHECK(j.size() == 7);
    CHECK(j[6]["E"] == "-61");
    CHECK(j[6]["G"] == "-3");
    CHECK(j[6]["B"] == "1/42");
    const auto l = run("list --format json");
    CHECK(l.status == 0);
    const auto entries = nlohmann::json::parse(l.out);
    bool found = false;
    for (const auto& e : entries)
        if (e["name"] == "corollary2") {
            found = true;
            CHECK(e["validity"] == "even n >= 4");
        }
    CHECK(found);
}

TEST_CASE("parameter forms") {
    CHECK(run("verify --identity theorem2 --n 0..5 --params a_vec=1,2,1/2").status == 0);
    CHECK(run("verify --identity theorem2 --n 3 --k 2 --params a_vec=1,2,1/2").status == 2);
    CHECK(run("verify --identity dunne-schubert --n 2..6 --params p=1/2").status == 0);
    CHECK(run("verify --identity kth-matiyasevich --n 0..10:2 --k 5").status == 0);
    CHECK(run("verify --identity theorem4 --k 3").status == 0);
    CHECK(run("mc --a 1,1 --l 1,1 --samples 100000 --seed 3").status == 0);
}
