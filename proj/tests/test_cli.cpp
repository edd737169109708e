#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pspos/cli.hpp"
#include "pspos/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pspos;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
}

}  // namespace

TEST_CASE("tangle evaluates and expands") {
    auto cf = run({"tangle", "--cf", "-1,2,3,2,0"});
    CHECK(cf.code == 0);
    CHECK(cf.out.find("fraction: 4/9") != std::string::npos);

    auto rational = run({"tangle", "--rational", "7/2"});
    CHECK(rational.code == 0);
    CHECK(rational.out.find("continued fraction: [2, 3]") != std::string::npos);

    auto zero = run({"tangle", "--rational", "0/1"});
    CHECK(zero.code == 0);
    CHECK(zero.out.find("continued fraction: [0]") != std::string::npos);

    auto inf_value = run({"tangle", "--cf", "0,0"});
    CHECK(inf_value.code == 0);
    CHECK(inf_value.out.find("fraction: inf") != std::string::npos);
    CHECK(inf_value.out.find("no finite expansion") != std::string::npos);

    CHECK(run({"tangle", "--rational", "inf"}).code == 2);
    CHECK(run({"tangle"}).code == 2);
    CHECK(run({"tangle", "--cf", "1,2", "--rational", "3"}).code == 2);
    CHECK(run({"tangle", "--cf", "1,x"}).code == 2);
}

TEST_CASE("ttk single records") {
    auto ok = run({"ttk", "2", "3", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("surgery slope: 131") != std::string::npos);
    CHECK(ok.out.find("{3, 5}") != std::string::npos);
    CHECK(ok.out.find("{2, 5}") != std::string::npos);
    CHECK(ok.out.find("distinct_by_index_set") != std::string::npos);

    auto degenerate = run({"ttk", "2", "3", "0"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out.find("connected sum of two lens spaces") != std::string::npos);
    CHECK(degenerate.out.find("positions: none") != std::string::npos);

    auto invalid = run({"ttk", "2", "4", "5"});
    CHECK(invalid.code == 2);
    CHECK(invalid.err.find("gcd") != std::string::npos);

    CHECK(run({"ttk", "2", "3"}).code == 2);
    CHECK(run({"ttk", "2", "3", "x"}).code == 2);
}

TEST_CASE("emk single records") {
    auto mod1 = run({"emk", "case1", "2", "4", "2", "--slope", "1"});
    CHECK(mod1.code == 0);
    CHECK(mod1.out.find("distinct_by_invariants_mod1") != std::string::npos);

    auto byset = run({"emk", "case1", "3", "2", "2", "--slope", "0"});
    CHECK(byset.code == 0);
    CHECK(byset.out.find("distinct_by_index_set") != std::string::npos);

    // degeneracy is an in-band report, not an error
    auto degenerate = run({"emk", "case2", "2", "4", "1", "--slope", "0"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.out.find("hypothesis_violated") != std::string::npos);
    CHECK(degenerate.out.find("A-fiber index 1") != std::string::npos);

    CHECK(run({"emk", "case3", "2", "4", "1", "--slope", "0"}).code == 2);
    CHECK(run({"emk", "case1", "2", "4", "1"}).code == 2);
    CHECK(run({"emk", "case1", "2", "4", "1", "--slope", "7"}).code == 2);
}

TEST_CASE("enumerate ttk sweeps the valid grid") {
    auto res = run({"enumerate", "ttk", "--p", "2..5", "--q", "3..7", "--n",
                    "2..6", "--format", "jsonl"});
    CHECK(res.code == 0);
    REQUIRE(count_lines(res.out) > 0);
    std::istringstream lines(res.out);
    std::string line;
    std::size_t records = 0;
    while (std::getline(lines, line)) {
        auto rec = record_from_jsonl(line);  // parses => schema holds
        REQUIRE(rec.verdict.has_value());
        CHECK(rec.verdict->kind == VerdictKind::DistinctByIndexSet);
        ++records;
    }
    // 13 coprime pairs in the box, each with every n in 2..6
    CHECK(records == 13 * 5);
    CHECK(res.err.find("summary") != std::string::npos);
    CHECK(res.err.find("distinct_by_index_set=65") != std::string::npos);
}

TEST_CASE("enumerate emk reproduces the invariant family") {
    auto res = run({"enumerate", "emk", "--case", "1", "--l", "2..2", "--m",
                    "4..4", "--n", "1..20", "--slope", "1", "--format", "jsonl"});
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 20);
    std::istringstream lines(res.out);
    std::string line;
    while (std::getline(lines, line)) {
        auto rec = record_from_jsonl(line);
        CHECK(rec.verdict->kind == VerdictKind::DistinctByInvariantsMod1);
    }
}

TEST_CASE("enumerate output is deterministic") {
    std::vector<std::string> args{"enumerate", "emk",  "--case", "1",
                                  "--l",       "1..3", "--m",    "-2..4",
                                  "--n",       "0..3", "--slope", "0..1",
                                  "--format",  "jsonl"};
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}

TEST_CASE("empty enumeration succeeds with zero records") {
    auto res = run({"enumerate", "ttk", "--p", "5..2", "--q", "3..7", "--n",
                    "2..6", "--format", "jsonl"});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    CHECK(res.err.find("records: 0") != std::string::npos);
}

TEST_CASE("enumerate writes to a file and fails cleanly on a bad path") {
    std::string path = "cli_test_records.jsonl";
    auto res = run({"enumerate", "ttk", "--p", "2..3", "--q", "3..5", "--n",
                    "2..3", "--format", "jsonl", "--output", path});
    CHECK(res.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::size_t records = 0;
    while (std::getline(in, line)) {
        record_from_jsonl(line);
        ++records;
    }
    CHECK(records > 0);
    in.close();
    std::remove(path.c_str());

    auto bad = run({"enumerate", "ttk", "--p", "2..3", "--q", "3..5", "--n",
                    "2..3", "--output", "no/such/dir/records.jsonl"});
    CHECK(bad.code == 1);
}

TEST_CASE("compare-sfs") {
    auto distinct = run({"compare-sfs", "--base", "disk", "4/3,9/5", "-1/3,9/5"});
    CHECK(distinct.code == 0);
    CHECK(distinct.out.find("NOT homeomorphic") != std::string::npos);

    auto same = run({"compare-sfs", "--base", "disk", "4/3,9/5", "9/5,4/3"});
    CHECK(same.code == 0);
    CHECK(same.out.find("verdict: homeomorphic") != std::string::npos);

    auto mod1 = run({"compare-sfs", "--base", "disk", "4/3,9/5", "1/3,4/5"});
    CHECK(mod1.out.find("verdict: homeomorphic") != std::string::npos);

    auto sphere = run({"compare-sfs", "--base", "sphere", "4/3,9/5", "1/3,4/5"});
    CHECK(sphere.code == 0);
    CHECK(sphere.out.find("sum") != std::string::npos);
    CHECK(sphere.out.find("NOT homeomorphic") != std::string::npos);

    CHECK(run({"compare-sfs", "--base", "disk", "4/3,9/5"}).code == 2);
    CHECK(run({"compare-sfs", "--base", "torus", "1/2,1/2", "1/2,1/2"}).code == 2);
    CHECK(run({"compare-sfs", "--base", "disk", "x,y", "1/2,1/2"}).code == 2);
    // a disk half has exactly two invariants
    CHECK(run({"compare-sfs", "--base", "disk", "1/2,1/2,1/2", "1/2,1/2"}).code == 2);
}

TEST_CASE("csv and jsonl single-record output") {
    auto csv = run({"ttk", "2", "3", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find(csv_header()) == 0);
    CHECK(count_lines(csv.out) == 2);

    auto jsonl = run({"ttk", "2", "3", "5", "--format", "jsonl"});
    CHECK(jsonl.code == 0);
    auto rec = record_from_jsonl(jsonl.out.substr(0, jsonl.out.find('\n')));
    CHECK(rec.hyperbolic_certified == true);
}

TEST_CASE("usage surface") {
    CHECK(run({}).code == 2);
    CHECK(run({"help"}).code == 0);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate", "ttk", "--p", "2..3"}).code == 2);
    CHECK(run({"enumerate", "ttk", "--p", "2..x", "--q", "3..5", "--n", "2..3"}).code == 2);
    CHECK(run({"ttk", "2", "3", "5", "--format", "yaml"}).code == 2);
}
