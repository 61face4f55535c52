#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(WEYLCRIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WEXITSTATUS(rc);
    return res;
}

}  // namespace

TEST_CASE("critical-set subcommand") {
    RunResult r = run_cli("critical-set --n 2 --mu 3,2 --d -3");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "critical-set");
    CHECK(doc["outputs"]["members"] == json::array({-4, -3, -2, -1}));
    CHECK(doc["result"] == "pass");
    for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
    RunResult a = run_cli("critical-set --mu \"3,2;4,1\" --d -3");
    RunResult b = run_cli("critical-set --mu \"3,2;4,1\" --d -3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("lemma-check --mu 3,2 --d -3");
    RunResult d = run_cli("lemma-check --mu 3,2 --d -3");
    CHECK(c.out == d.out);
}

TEST_CASE("exit code 2 on malformed input") {
    CHECK(run_cli("critical-set --mu 1,2,0 --d 0").status == 2);   // chain violation
    CHECK(run_cli("critical-set --mu 3,x --d 0").status == 2);     // bad integer
    CHECK(run_cli("critical-set --d 0").status == 2);              // missing --mu
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("critical-set --n 3 --mu 3,2 --d 0").status == 2);  // n mismatch
}

TEST_CASE("exit code 1 on a failed check") {
    // -n and 1-n are not critical here
    RunResult r = run_cli("arch-ratio --mu 3,2 --d -4");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["result"] == "fail");
    // mu_min = 0 is an explicit failed check, not a crash
    CHECK(run_cli("critical-set --mu 2,0 --d 0").status == 1);
}

TEST_CASE("arch-ratio reports the exact value") {
    RunResult r = run_cli("arch-ratio --mu 3,2 --d -3");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["ratio"] == "4/15 * pi^(4/2)");
}

TEST_CASE("balanced subcommand") {
    RunResult r = run_cli("balanced --n 4");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["outputs"]["elements"].size() == 2);
    // w^- (cycle with the last two images negated) sorts before w^+
    CHECK(doc["outputs"]["elements"][0] == json::array({2, 3, 4, -5, -1}));
    CHECK(doc["outputs"]["elements"][1] == json::array({2, 3, 4, 5, 1}));
}

TEST_CASE("kostant subcommand") {
    RunResult r = run_cli("kostant --n 2");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["count"] == 6);
    CHECK(doc["outputs"]["lengths"] == json::array({0, 1, 2, 2, 3, 4}));
    CHECK(doc["outputs"]["w_P_word"] == json::array({0, 2, 1, 0}));
}

TEST_CASE("dims subcommand") {
    RunResult r = run_cli("dims --n 2 --rf 1");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["dim_SG"] == 9);
    CHECK(doc["outputs"]["q_b"] == 2);
    CHECK(doc["outputs"]["frak_q_b"] == 4);
    CHECK(doc["outputs"]["frak_q_t"] == 4);
}

TEST_CASE("euler-check subcommand") {
    RunResult r = run_cli("euler-check --lambda 2,1,-1");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["alternating_sum"] == "0");
    // n is derived from the entry count when not given
    RunResult r4 = run_cli("euler-check --lambda 3,2,1,1,-1");
    CHECK(r4.status == 0);
    CHECK(json::parse(r4.out)["inputs"]["n"] == 4);
}

TEST_CASE("lemma-check subcommand") {
    RunResult r = run_cli("lemma-check --mu \"3,2;4,-2\" --d -3");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["cond_ii"] == true);
    CHECK(doc["outputs"]["witness"] == json::array({"w+", "w-"}));
}

TEST_CASE("intertwine subcommand") {
    RunResult r = run_cli("intertwine --mu 3,2 --d -3");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["c"] == "8/15 * pi^(4/2)");
    CHECK(doc["outputs"]["parity_counts"] == json::array({1, 1}));
    CHECK(doc["outputs"]["c_over_L_ratio"] == "2/1 * pi^(0/2)");

    // negative last entry and flipped character parity
    RunResult rn = run_cli("intertwine --mu 3,-2 --d -3 --eps0 1");
    CHECK(rn.status == 0);
    CHECK(json::parse(rn.out)["outputs"]["c"] == "2/3 * pi^(4/2)");

    // point left of the unitary axis is an explicit failed check
    CHECK(run_cli("intertwine --mu 3,2 --d -1").status == 1);
}

TEST_CASE("satake subcommand") {
    RunResult r = run_cli("satake --thetas 1,1 --q 2 --s 1");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["local_L_s"] == "16");
    CHECK(doc["outputs"]["gk_ratio"] == "81/16");
}

TEST_CASE("small sweep") {
    RunResult r = run_cli("sweep --n 2 --rf-max 1 --mu-bound 2 --d-min -6 --d-max 0");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["outputs"]["points"] == 6 * 7);  // 6 dominant weights, 7 twists
    CHECK(doc["result"] == "pass");
}
