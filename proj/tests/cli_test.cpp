// Integration tests for the command-line front end: spawns the real binary
// and checks exit codes, report formatting, JSON determinism, and the ideal
// file operations end to end.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef DETVAR_CLI_PATH
#error "DETVAR_CLI_PATH must point at the built binary"
#endif
#ifndef DETVAR_DATA_DIR
#error "DETVAR_DATA_DIR must point at the test data directory"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(DETVAR_CLI_PATH) +
                    " " + args + " 2>&1";
  RunResult res;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    ADD_FAILURE() << "popen failed for: " << cmd;
    return res;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.output.append(buf, n);
  int rc = pclose(p);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream os(path, std::ios::binary);
  os << body;
  return path;
}

// Replaces every "wall_ms": <n> value by zero so reruns compare bytewise.
std::string zero_wall_times(std::string s) {
  auto arr = nlohmann::ordered_json::parse(s);
  for (auto& rep : arr) rep["wall_ms"] = 0;
  return arr.dump(2);
}

TEST(CliVerify, SingleCheckTextReport) {
  auto r = run_cli("verify --prop 4.5 --b 2");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("[PASS] check 4.5  (b=2, field=fp:1009, seed=42)"),
            std::string::npos)
      << r.output;
  EXPECT_NE(r.output.find("1 passed, 0 failed, 0 skipped"), std::string::npos);
}

TEST(CliVerify, UnknownCheckIdIsAUsageError) {
  auto r = run_cli("verify --prop 9");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(
      r.output.find("unknown check '9' (want 3.1|4.1|4.2|4.3|4.4|4.5|chern|all)"),
      std::string::npos)
      << r.output;
}

TEST(CliVerify, SkippedChecksDoNotFailTheRun) {
  auto r = run_cli("verify --prop 4.2 --mode generic --field q");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("[SKIP] check 4.2"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("0 passed, 0 failed, 1 skipped"), std::string::npos);
}

TEST(CliVerify, JsonOutputIsDeterministicForAFixedSeed) {
  const std::string args = "verify --prop all --b 1 --seed 42 --format json";
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  ASSERT_EQ(r1.exit_code, 0) << r1.output;
  ASSERT_EQ(r2.exit_code, 0) << r2.output;
  EXPECT_EQ(zero_wall_times(r1.output), zero_wall_times(r2.output));

  // Spot-check the schema-relevant shape of the first report.
  auto arr = nlohmann::ordered_json::parse(r1.output);
  ASSERT_TRUE(arr.is_array());
  ASSERT_EQ(arr.size(), 7u);
  const auto& rep = arr[0];
  EXPECT_EQ(rep["check"], "3.1");
  EXPECT_EQ(rep["b"], 1);
  EXPECT_EQ(rep["field"], "fp:1009");
  EXPECT_EQ(rep["seed"], 42);
  EXPECT_EQ(rep["status"], "pass");
  EXPECT_TRUE(rep["witnesses"].is_object());
  EXPECT_TRUE(rep["wall_ms"].is_number_integer());
}

TEST(CliVerify, EnvironmentSeedOverridesTheFlag) {
  auto r = run_cli("verify --prop 4.5 --seed 1 --format json",
                   "DETVAR_SEED=7");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  auto arr = nlohmann::ordered_json::parse(r.output);
  ASSERT_EQ(arr.size(), 1u);
  EXPECT_EQ(arr[0]["seed"], 7);
}

TEST(CliVerify, OutFlagWritesThePayloadToAFile) {
  std::string path = ::testing::TempDir() + "cli_out.json";
  std::remove(path.c_str());
  auto r = run_cli("verify --prop 4.5 --format json --out " + path);
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in.good()) << "no file written at " << path;
  std::stringstream buf;
  buf << in.rdbuf();
  auto arr = nlohmann::ordered_json::parse(buf.str());
  ASSERT_EQ(arr.size(), 1u);
  EXPECT_EQ(arr[0]["check"], "4.5");
  EXPECT_EQ(arr[0]["status"], "pass");
}

TEST(CliVerify, BadFlagIsAUsageError) {
  auto r = run_cli("verify --bogus-flag");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(CliVerify, HelpExitsCleanly) {
  auto r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("verify"), std::string::npos);
  EXPECT_NE(r.output.find("table"), std::string::npos);
  EXPECT_NE(r.output.find("ideal"), std::string::npos);
}

TEST(CliTable, EulerCharacteristicTableHasPinnedCells) {
  auto r = run_cli("table --which chi-X --b 3");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("chi(O(alpha, beta)) on the threefold, b = 3"),
            std::string::npos);
  // chi(O(0,4)) = 36 appears in the beta = 4 row.
  EXPECT_NE(r.output.find("36"), std::string::npos);
}

TEST(CliTable, CohomologyTableMarksUndeterminedCells) {
  auto r = run_cli("table --which cohomology-X1 --b 3");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("h-polynomials on the (2, b+1) model, b = 3"),
            std::string::npos);
  // The structure sheaf cell h^0 = h^3 = 1 and at least one open cell.
  EXPECT_NE(r.output.find("h^3+1"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("?"), std::string::npos);
}

TEST(CliTable, UnknownTableNameIsAUsageError) {
  auto r = run_cli("table --which bogus");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("unknown table 'bogus'"), std::string::npos);
}

TEST(CliTable, EmptyRangeIsAUsageError) {
  auto r = run_cli("table --which chi-X --alpha-min 2 --alpha-max 1");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("empty table range"), std::string::npos);
}

TEST(CliIdeal, DimensionDegreeGenusOfTheFixtureCurve) {
  std::string file = std::string(DETVAR_DATA_DIR) + "/twisted_cubic.ideal";
  auto r = run_cli("ideal --file " + file + " --op dim-degree");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output, "dim=1 degree=3 genus=0\n");
}

TEST(CliIdeal, GroebnerBasisOfAPrincipalIdeal) {
  auto path = write_temp("principal.ideal",
                         "ring: vars=x; field=q\n"
                         "x^2 - 1\n");
  auto r = run_cli("ideal --file " + path + " --op gb");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output, "x^2 - 1\n");
}

TEST(CliIdeal, EliminationProjectsTheRationalNormalCurve) {
  auto path = write_temp("elim.ideal",
                         "ring: vars=t,x,y; field=q\n"
                         "x - t^2\n"
                         "y - t^3\n");
  auto r = run_cli("ideal --file " + path + " --op eliminate --vars t");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output, "x^3 - y^2\n");
}

TEST(CliIdeal, SaturationRemovesAnEmbeddedComponent) {
  auto path = write_temp("sat.ideal",
                         "ring: vars=x,y; field=q\n"
                         "x^2*y - x^3\n");
  auto r = run_cli("ideal --file " + path + " --op saturate --vars x");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output, "x - y\n");
}

TEST(CliIdeal, MissingVarsListIsAUsageError) {
  std::string file = std::string(DETVAR_DATA_DIR) + "/twisted_cubic.ideal";
  auto r = run_cli("ideal --file " + file + " --op eliminate");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("needs --vars"), std::string::npos);
}

TEST(CliIdeal, SyntaxErrorsCarrySourcePositions) {
  auto path = write_temp("broken.ideal",
                         "ring: vars=x; field=q\n"
                         "x^^2\n");
  auto r = run_cli("ideal --file " + path + " --op gb");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find(
                "parse error: ParseError: line 2, col 3: expected an integer"),
            std::string::npos)
      << r.output;
}

TEST(CliIdeal, MissingFileIsAUsageError) {
  auto r = run_cli("ideal --file /nonexistent/nope.ideal --op gb");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("cannot open"), std::string::npos);
}

}  // namespace
