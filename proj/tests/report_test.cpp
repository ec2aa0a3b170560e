// Report serialization: stable key order, text rendering, and conformance
// of emitted JSON with the schema shipped in docs/.

#include <gtest/gtest.h>

#include <fstream>
#include <regex>

#include "detvar/report.hpp"

namespace detvar {
namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.check = "4.2";
  r.b = 2;
  r.field = "fp:1009";
  r.seed = 7;
  r.require_eq("node_count", 27, 27);
  r.require("node_scheme_reduced", true);
  r.note("flavor", "grid");
  r.wall_ms = 12;
  return r;
}

TEST(Report, JsonKeysComeInContractOrder) {
  auto j = report_to_json(sample_report());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "b", "field", "seed",
                                            "status", "witnesses", "wall_ms"}));
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["witnesses"]["node_count"], "27");
}

TEST(Report, FailureFlipsStatusAndRecordsBothSides) {
  VerificationReport r;
  r.check = "3.1";
  r.field = "q";
  r.require_eq("codim", 3, 2);
  EXPECT_EQ(r.status, "fail");
  EXPECT_FALSE(r.passed());
  auto j = report_to_json(r);
  EXPECT_EQ(j["witnesses"]["codim"], "got 3, want 2");
}

TEST(Report, SkipKeepsWitnessTrail) {
  VerificationReport r;
  r.check = "4.2";
  r.field = "q";
  r.skip("no finite point count over symbolic parameters");
  EXPECT_EQ(r.status, "skipped");
  auto j = report_to_json(r);
  EXPECT_EQ(j["status"], "skipped");
  EXPECT_NE(j["witnesses"].find("skipped"), j["witnesses"].end());
}

TEST(Report, TextRenderingIsStable) {
  EXPECT_EQ(report_text(sample_report()),
            "[PASS] check 4.2  (b=2, field=fp:1009, seed=7)\n"
            "  node_count = 27\n"
            "  node_scheme_reduced = ok\n"
            "  flavor = grid\n");
}

// Structural conformance with docs/report.schema.json, checked directly
// against the schema's own constraints (required keys, types, enums,
// field pattern) so the schema file and the emitter cannot drift apart.
TEST(Report, MatchesShippedSchema) {
  std::ifstream in(DETVAR_SCHEMA_PATH);
  ASSERT_TRUE(in.is_open()) << "schema file not found: " << DETVAR_SCHEMA_PATH;
  auto schema = nlohmann::json::parse(in);
  ASSERT_EQ(schema["type"], "array");

  const auto& item = schema["items"];
  std::vector<std::string> required = item["required"];

  auto reports = OrderedJson::array();
  reports.push_back(report_to_json(sample_report()));
  VerificationReport sk;
  sk.check = "chern";
  sk.field = "q";
  sk.skip("example");
  reports.push_back(report_to_json(sk));

  for (const auto& rep : reports) {
    for (const auto& key : required)
      EXPECT_TRUE(rep.contains(key)) << "missing " << key;
    // additionalProperties: false
    for (auto it = rep.begin(); it != rep.end(); ++it)
      EXPECT_TRUE(item["properties"].contains(it.key()))
          << "stray key " << it.key();
    EXPECT_TRUE(rep["b"].is_number_integer());
    EXPECT_TRUE(rep["seed"].is_number_integer());
    EXPECT_TRUE(rep["wall_ms"].is_number_integer());
    EXPECT_GE(rep["wall_ms"].get<long long>(), 0);

    std::vector<std::string> checks = item["properties"]["check"]["enum"];
    EXPECT_NE(std::find(checks.begin(), checks.end(),
                        rep["check"].get<std::string>()),
              checks.end());
    std::vector<std::string> statuses = item["properties"]["status"]["enum"];
    EXPECT_NE(std::find(statuses.begin(), statuses.end(),
                        rep["status"].get<std::string>()),
              statuses.end());

    std::regex field_re(
        item["properties"]["field"]["pattern"].get<std::string>());
    EXPECT_TRUE(std::regex_search(rep["field"].get<std::string>(), field_re));

    for (auto it = rep["witnesses"].begin(); it != rep["witnesses"].end(); ++it)
      EXPECT_TRUE(it.value().is_string());
  }
}

}  // namespace
}  // namespace detvar
