#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pspos/distinctness.hpp"
#include "pspos/report.hpp"
#include "pspos/tangle_knots.hpp"
#include "pspos/twisted_torus.hpp"

#include <json.hpp>

using namespace pspos;
using json = nlohmann::json;

namespace {

std::vector<SurgeryRecord> sample_records() {
    std::vector<SurgeryRecord> records;
    records.push_back(decide_surgery(make_record(TtkParams{2, 3, 5})));
    records.push_back(decide_surgery(make_record(TtkParams{3, 5, -4})));
    records.push_back(make_record(TtkParams{2, 3, 0}));
    records.push_back(make_record(TtkParams{2, 3, -1}));
    records.push_back(decide_surgery(make_record(
        TangleKnotParams{TangleCase::Case1, 2, 4, 2, SlopeTag::Gamma1})));
    records.push_back(decide_surgery(make_record(
        TangleKnotParams{TangleCase::Case1, 3, 2, 2, SlopeTag::Gamma0})));
    records.push_back(decide_surgery(make_record(
        TangleKnotParams{TangleCase::Case2, 3, 2, 2, SlopeTag::Gamma1})));
    records.push_back(make_record(
        TangleKnotParams{TangleCase::Case2, 2, 4, 1, SlopeTag::Gamma0}));
    records.push_back(make_record(
        TangleKnotParams{TangleCase::Case1, 1, 4, 2, SlopeTag::Gamma0}));
    return records;
}

}  // namespace

TEST_CASE("jsonl carries the stable schema fields") {
    for (const auto& rec : sample_records()) {
        json j = json::parse(to_jsonl(rec));
        for (const char* field :
             {"family", "params", "slope", "classification", "positions",
              "verdict", "evidence"})
            CHECK_MESSAGE(j.contains(field), "missing field ", field);
        CHECK((j["family"] == "ttk" || j["family"] == "emk"));
        for (const auto& pos : j["positions"]) {
            CHECK(pos.contains("surface_label"));
            CHECK(pos.contains("index_set"));
            // index sets are sorted ascending arrays of exact strings
            std::vector<long long> values;
            for (const auto& v : pos["index_set"])
                values.push_back(std::stoll(v.get<std::string>()));
            CHECK(std::is_sorted(values.begin(), values.end()));
        }
    }
}

TEST_CASE("jsonl round-trips through the parser without loss") {
    for (const auto& rec : sample_records()) {
        std::string line = to_jsonl(rec);
        SurgeryRecord back = record_from_jsonl(line);
        CHECK(to_jsonl(back) == line);
    }
}

TEST_CASE("rationals serialize as reduced p/q strings") {
    auto rec = decide_surgery(make_record(
        TangleKnotParams{TangleCase::Case1, 2, 4, 2, SlopeTag::Gamma1}));
    json j = json::parse(to_jsonl(rec));
    auto invariants = j["positions"][0]["invariants"];
    CHECK(invariants == json::array({"4/3", "25/14"}));
    // no JSON numbers anywhere in exact payloads
    CHECK(j["slope"]["value"].is_string());
    CHECK(j["params"]["l"].is_string());
}

TEST_CASE("malformed jsonl is rejected") {
    CHECK_THROWS_AS(record_from_jsonl("{"), std::invalid_argument);
    CHECK_THROWS_AS(record_from_jsonl("{}"), std::invalid_argument);
    CHECK_THROWS_AS(record_from_jsonl(R"({"family":"nope"})"),
                    std::invalid_argument);
}

TEST_CASE("csv has one fixed header and quoted free text") {
    const std::string header = csv_header();
    CHECK(header.find("family,params,slope") == 0);
    std::size_t columns = std::count(header.begin(), header.end(), ',') + 1;
    for (const auto& rec : sample_records()) {
        std::string row = to_csv_row(rec);
        // count unquoted commas
        std::size_t cells = 1;
        bool quoted = false;
        for (char c : row) {
            if (c == '"') quoted = !quoted;
            else if (c == ',' && !quoted) ++cells;
        }
        CHECK(cells == columns);
    }
}

TEST_CASE("text rendering mentions the essentials") {
    auto rec = decide_surgery(make_record(TtkParams{2, 3, 5}));
    std::string text = to_text(rec);
    CHECK(text.find("131") != std::string::npos);
    CHECK(text.find("{3, 5}") != std::string::npos);
    CHECK(text.find("{2, 5}") != std::string::npos);
    CHECK(text.find("distinct_by_index_set") != std::string::npos);

    auto em = decide_surgery(make_record(
        TangleKnotParams{TangleCase::Case1, 2, 4, 2, SlopeTag::Gamma1}));
    std::string em_text = to_text(em);
    CHECK(em_text.find("gamma1") != std::string::npos);
    CHECK(em_text.find("4/3") != std::string::npos);
    CHECK(em_text.find("braid index: 15") != std::string::npos);
}

TEST_CASE("records without a verdict cannot serialize") {
    auto rec = make_record(TtkParams{2, 3, 5});  // verdict not yet decided
    CHECK_THROWS_AS(to_jsonl(rec), std::logic_error);
    CHECK_THROWS_AS(to_csv_row(rec), std::logic_error);
}

TEST_CASE("format names") {
    CHECK(parse_format("text") == ReportFormat::HumanText);
    CHECK(parse_format("jsonl") == ReportFormat::JsonLines);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}
