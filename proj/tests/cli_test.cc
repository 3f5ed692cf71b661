// Copyright 2026 The phasenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "json.hpp"
#include "phasenoise/state_io.h"

namespace phasenoise::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(std::vector<std::string> args) {
  Result r = run_cli(std::move(args));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  return result;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("phasenoise_cli_test_" + name)).string();
}

TEST(ReportCommandTest, NumberState) {
  nlohmann::json j = run_json({"report", "--state", "number:n=5"});
  EXPECT_EQ(j["phase_noise"], 1.0);
  EXPECT_EQ(j["slack_eq8"], 0.0);
  EXPECT_EQ(j["witness"]["nonclassical"], false);
}

TEST(ReportCommandTest, TriangleIsNonclassical) {
  nlohmann::json j = run_json({"report", "--state", "triangle:n0=100"});
  EXPECT_EQ(j["witness"]["nonclassical"], true);
}

TEST(ReportCommandTest, CoherentIsNearEquality) {
  nlohmann::json j = run_json({"report", "--state", "coherent:alpha=5"});
  const double slack = j["slack_eq8"];
  EXPECT_GT(slack, 0.0);
  EXPECT_LT(slack, 0.01);
  EXPECT_EQ(j["witness"]["nonclassical"], false);
}

TEST(ReportCommandTest, Ensemble) {
  const std::string path = temp_path("ensemble.json");
  write_text_file(path, R"({"components": [{"weight": 0.5, "alpha": [2, 0]},
                                            {"weight": 0.5, "alpha": [-2, 0]}]})");
  nlohmann::json j = run_json({"report", "--ensemble", path});
  EXPECT_EQ(j["witness"]["phase_noise"], 1.0);
  EXPECT_EQ(j["witness"]["nonclassical"], false);
  std::filesystem::remove(path);
}

TEST(ReportCommandTest, PrecisionControlsDigits) {
  Result r = run_cli({"--precision", "4", "report", "--state", "coherent:alpha=1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"phase_noise\": 0.4"), std::string::npos);
  nlohmann::json j = nlohmann::json::parse(r.out);
  const double noise = j["phase_noise"];
  EXPECT_NEAR(noise, 0.4, 0.01);
}

TEST(ReportCommandTest, WritesOutputFile) {
  const std::string path = temp_path("report.json");
  Result r = run_cli({"report", "--state", "number:n=1", "--output", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  nlohmann::json j = nlohmann::json::parse(read_text_file(path));
  EXPECT_EQ(j["phase_noise"], 1.0);
  std::filesystem::remove(path);
}

TEST(ExitCodeTest, ParseAndUsageErrors) {
  EXPECT_EQ(run_cli({"report", "--state", "bogus:x=1"}).code, kExitParse);
  EXPECT_EQ(run_cli({"report", "--state", "triangle:n0=3"}).code, kExitParse);
  EXPECT_EQ(run_cli({"report"}).code, kExitParse);
  EXPECT_EQ(run_cli({"no-such-command"}).code, kExitParse);
  EXPECT_EQ(run_cli({"sweep", "--family", "tps", "--n0", "1:0:4"}).code, kExitParse);
  EXPECT_EQ(run_cli({"report", "--state", "number:n=1", "--format", "csv"}).code, kExitParse);
}

TEST(ExitCodeTest, RealizationErrors) {
  EXPECT_EQ(run_cli({"report", "--state", "file:/nonexistent/x.json"}).code, kExitRealization);
  EXPECT_EQ(run_cli({"--max-dim", "20", "report", "--state", "coherent:alpha=10"}).code,
            kExitRealization);
}

TEST(ExitCodeTest, InfeasibleExtremalTarget) {
  Result r = run_cli({"extremal", "--mean-n", "300", "--dim", "256"});
  EXPECT_EQ(r.code, kExitConvergence);
  EXPECT_FALSE(r.err.empty());
}

TEST(SweepCommandTest, TriangleRows) {
  Result r = run_cli({"sweep", "--family", "triangle", "--n0", "2:2:200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0],
            "parameter,mean_n,var_n,abs_e_minus,phase_noise,lhs_eq8,rhs_eq7,classical_bound,"
            "witness");
  for (std::size_t i = 13; i <= 100; ++i) {
    EXPECT_GT(std::stod(fields(rows[i]).back()), 0.0) << rows[i];
  }
}

TEST(SweepCommandTest, TruncatedPhaseIncreasing) {
  Result r = run_cli({"sweep", "--family", "tps", "--n0", "1:1:10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 11u);
  double previous = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double lhs = std::stod(fields(rows[i])[5]);
    EXPECT_GT(lhs, previous);
    previous = lhs;
  }
}

TEST(SweepCommandTest, NumberStatesSaturate) {
  Result r = run_cli({"sweep", "--family", "number", "--n", "0:1:5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(fields(rows[i])[5], "0.25");
}

TEST(SweepCommandTest, JsonFormat) {
  Result r = run_cli({"--format", "json", "sweep", "--family", "tps", "--n0", "1:1:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_object() || j.is_array());
}

TEST(McCommandTest, NoViolationsAndDeterministic) {
  const std::vector<std::string> args = {"mc-classical", "--samples", "1000", "--seed", "42"};
  Result a = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(run_cli(args).out, a.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "4"});
  EXPECT_EQ(run_cli(threaded).out, a.out);
}

TEST(McCommandTest, NearVacuumMarginIsTinyButPositive) {
  nlohmann::json j = run_json({"mc-classical", "--samples", "500", "--seed", "3",
                               "--max-components", "1", "--max-alpha", "0.001"});
  const double margin = j["min_margin"];
  EXPECT_GT(margin, 0.0);
  EXPECT_LT(margin, 1e-5);
}

TEST(McCommandTest, DumpWritesOneRowPerSample) {
  const std::string path = temp_path("mc_dump.csv");
  Result r = run_cli({"mc-classical", "--samples", "25", "--seed", "5", "--dump", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(read_text_file(path)).size(), 26u);
  std::filesystem::remove(path);
}

TEST(ExtremalCommandTest, VacuumAndStateFile) {
  const std::string path = temp_path("extremal_state.json");
  nlohmann::json j = run_json({"extremal", "--mean-n", "0", "--dim", "8", "--state-out", path});
  EXPECT_EQ(j["phase_noise"], 1.0);
  PureState s = read_state_file(path);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s[0], Complex(1.0));
  std::filesystem::remove(path);
}

TEST(ExtremalCommandTest, BeatsTriangle) {
  nlohmann::json j = run_json({"extremal", "--mean-n", "50", "--dim", "256"});
  const double noise = j["phase_noise"];
  EXPECT_LT(noise, 1.1994001919472135e-3);
  EXPECT_EQ(j["witness"]["nonclassical"], true);
}

TEST(ExtremalCommandTest, RangeProducesCsvAndIsDeterministic) {
  const std::vector<std::string> args = {"extremal", "--mean-n", "1:1:20", "--dim", "128"};
  Result a = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(lines(a.out).size(), 21u);
  EXPECT_EQ(run_cli(args).out, a.out);
}

TEST(VerifyCommandTest, PassesAndReportsNumberStateEquality) {
  nlohmann::json j = run_json({"verify-identities", "--trials", "1", "--seed", "7"});
  EXPECT_EQ(j["passed"], true);
  bool seen = false;
  for (const auto& check : j["checks"]) {
    if (check["name"] == "number_state_equality") {
      seen = true;
      EXPECT_EQ(check["max_violation"], 0.0);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(VerifyCommandTest, CanaryExitsWithVerificationFailure) {
  Result r = run_cli({"verify-identities", "--trials", "50", "--canary-flip-variance"});
  EXPECT_EQ(r.code, kExitVerification);
}

}  // namespace
}  // namespace phasenoise::cli
