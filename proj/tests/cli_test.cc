// Copyright 2026 The qmetric Authors
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qmetric/error.h"

namespace qmetric::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

json InvokeJson(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = Invoke(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return json::parse(r.out);
}

TEST(ParseTest, StateAndMap) {
  EXPECT_EQ(ParseState("--a", "0,1"), GaussianState(0, 1));
  EXPECT_EQ(ParseState("--a", "-2.5,1e-3"), GaussianState(-2.5, 1e-3));
  EXPECT_EQ(ParseMap("--map", "0.5,0,0.5,0.5"),
            AffineGaussianMap(0.5, 0, 0.5, 0.5));
}

TEST(ParseTest, ErrorsNameTheFlag) {
  for (const char* bad : {"0", "0,1,2", "a,1", "0,", "", "1,2x"}) {
    try {
      ParseState("--b", bad);
      FAIL() << bad;
    } catch (const std::exception& e) {
      EXPECT_NE(std::string(e.what()).find("--b"), std::string::npos) << bad;
    }
  }
  try {
    ParseState("--a", "0,-1");
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("sigma must be positive"),
              std::string::npos);
  }
}

TEST(DistanceCommandTest, Examples) {
  const json j = InvokeJson({"distance", "--a", "0,1", "--b", "2,1"});
  EXPECT_EQ(j.at("command"), "distance");
  EXPECT_EQ(j.at("version"), 1);
  const double d = j.at("result").at("distance").get<double>();
  EXPECT_NEAR(d, std::sqrt(2.0 - 2.0 * std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(d, 1.124383, 2e-6);

  const json same = InvokeJson({"distance", "--a", "0,1", "--b", "0,1"});
  EXPECT_EQ(same.at("result").at("distance"), 0.0);
}

TEST(DistanceCommandTest, QuadratureCrossCheck) {
  const json j =
      InvokeJson({"distance", "--a", "0,1", "--b", "0,2", "--quadrature"});
  const json& q = j.at("result").at("quadrature");
  EXPECT_NEAR(q.at("overlap").get<double>(), 0.894427190999916, 1e-10);
  EXPECT_LE(q.at("abs_discrepancy").get<double>(), 1e-10);
}

TEST(DistanceCommandTest, TableIsDefault) {
  const Result r = Invoke({"distance", "--a", "0,1", "--b", "2,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1.1243847729568"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(DistanceCommandTest, InvalidInputExits2) {
  Result r = Invoke({"distance", "--a", "0,-1", "--b", "0,1"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("sigma must be positive"), std::string::npos);
  EXPECT_NE(r.err.find("--a"), std::string::npos);
  r = Invoke({"distance", "--a", "zero,1", "--b", "0,1"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  r = Invoke({"distance", "--a", "0,1"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  r = Invoke({"distance", "--a", "0,1", "--b", "0,1", "--format", "csv"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  r = Invoke({"distance", "--a", "0,1", "--b", "0,1", "--quadrature",
              "--panels", "7"});
  EXPECT_EQ(r.code, kExitInvalidInput);
}

TEST(IterateCommandTest, ConvergesToAnalyticFixedPoint) {
  const json j =
      InvokeJson({"iterate", "--map", "0.5,0,0.5,0.5", "--start", "4,3"});
  const json& r = j.at("result");
  EXPECT_TRUE(r.at("converged").get<bool>());
  EXPECT_NEAR(r.at("fixed_point").at("mu").get<double>(), 0.0, 1e-10);
  EXPECT_NEAR(r.at("fixed_point").at("sigma").get<double>(), 1.0, 1e-10);
}

TEST(IterateCommandTest, ConstantMap) {
  const json j = InvokeJson({"iterate", "--map", "0,0,0,1", "--start", "9,9"});
  EXPECT_LE(j.at("result").at("iterations_used").get<int>(), 2);
}

TEST(IterateCommandTest, InvalidMapExits2) {
  const Result r =
      Invoke({"iterate", "--map", "1.5,0,0.5,0.5", "--start", "1,1"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("lambda must satisfy |lambda| < 1"), std::string::npos);
}

TEST(IterateCommandTest, BudgetExhaustedExits3WithReport) {
  const Result r = Invoke({"iterate", "--map", "0.99999,0,0.5,0.5", "--start",
                           "4,3", "--max-iter", "10", "--format", "json"});
  EXPECT_EQ(r.code, kExitNotConverged);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j.at("result").at("converged").get<bool>());
  EXPECT_EQ(j.at("result").at("iterations_used"), 10);
}

TEST(IterateCommandTest, CsvTrace) {
  const Result r = Invoke({"iterate", "--map", "0.5,0,0.5,0.5", "--start",
                           "4,3", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,mu,sigma,step_distance,a_priori_bound");
  int rows = 0;
  std::string line, last;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
    last = line;
    ++rows;
  }
  EXPECT_GT(rows, 2);
  EXPECT_EQ(last.find(std::to_string(rows - 1) + ","), 0u);
}

TEST(AuditCommandTest, Targets) {
  EXPECT_EQ(Invoke({"audit", "--target", "tnorm", "--kind", "lukasiewicz"}).code,
            kExitOk);
  EXPECT_EQ(Invoke({"audit", "--target", "tnorm"}).code, kExitOk);
  EXPECT_EQ(Invoke({"audit", "--target", "metric-axioms", "--samples", "2000",
                    "--seed", "0"})
                .code,
            kExitOk);
  EXPECT_EQ(Invoke({"audit", "--target", "gv", "--points", "200"}).code,
            kExitOk);
  EXPECT_EQ(Invoke({"audit", "--target", "gv", "--carrier", "gaussian",
                    "--points", "100", "--kind", "minimum"})
                .code,
            kExitOk);
  EXPECT_EQ(Invoke({"audit", "--target", "banach-bounds", "--map",
                    "0.5,0,0.5,0.5", "--start", "4,3"})
                .code,
            kExitOk);
}

TEST(AuditCommandTest, JsonShape) {
  const json j = InvokeJson({"audit", "--target", "tnorm", "--kind", "product"});
  EXPECT_TRUE(j.at("result").at("passed").get<bool>());
  ASSERT_EQ(j.at("result").at("audits").size(), 1u);
  EXPECT_TRUE(j.at("result").at("audits")[0].contains("checks"));
}

TEST(AuditCommandTest, UnknownSelectorsExit2) {
  EXPECT_EQ(Invoke({"audit", "--target", "tnorm", "--kind", "bogus"}).code,
            kExitInvalidInput);
  EXPECT_EQ(Invoke({"audit", "--target", "nothing"}).code, kExitInvalidInput);
}

TEST(AuditCommandTest, UnderstatedContractionFactorExits4WithWitness) {
  const Result r =
      Invoke({"audit", "--target", "banach-bounds", "--map", "0.5,0,0.5,0.5",
              "--start", "4,3", "--k", "0.1", "--format", "json"});
  EXPECT_EQ(r.code, kExitAuditFailed);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j.at("result").at("passed").get<bool>());
  bool has_witness = false;
  for (const json& check : j.at("result").at("audits")[0].at("checks")) {
    has_witness = has_witness || !check.at("witness").is_null();
  }
  EXPECT_TRUE(has_witness);
}

TEST(CompareCommandTest, DefaultsEmitJson) {
  const Result r = Invoke({"compare"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  const json& res = j.at("result");
  EXPECT_NEAR(res.at("interference_excess_quantum").get<double>(),
              2.0 * std::exp(-0.25), 1e-14);
  EXPECT_EQ(res.at("interference_excess_fuzzy"), 0.0);
  EXPECT_LE(res.at("fixed_point_agreement").get<double>(), 1e-11);
}

TEST(CompareCommandTest, IdenticalProbe) {
  const json j = InvokeJson({"compare", "--probe-a", "0,1", "--probe-b", "0,1"});
  EXPECT_NEAR(j.at("result").at("interference_excess_quantum").get<double>(),
              2.0, 1e-15);
}

TEST(CompareCommandTest, BudgetExhaustedExits3) {
  EXPECT_EQ(
      Invoke({"compare", "--map", "0.99999,0,0.5,0.5", "--max-iter", "10"}).code,
      kExitNotConverged);
}

TEST(CliTest, DeterministicJson) {
  const std::vector<std::vector<std::string>> commands = {
      {"distance", "--a", "0,1", "--b", "2,1", "--format", "json"},
      {"iterate", "--map", "0.5,0,0.5,0.5", "--start", "4,3", "--format",
       "json"},
      {"audit", "--target", "metric-axioms", "--samples", "500", "--format",
       "json"},
      {"compare", "--seed", "0"},
  };
  for (const auto& cmd : commands) {
    const Result a = Invoke(cmd);
    const Result b = Invoke(cmd);
    EXPECT_EQ(a.code, kExitOk) << cmd[0];
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST(CliTest, JsonReserializesIdentically) {
  const Result r = Invoke({"compare"});
  const json j = json::parse(r.out);
  EXPECT_EQ(json::parse(j.dump()), j);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliTest, OutWritesFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "qmetric_cli_test_out.json";
  std::filesystem::remove(path);
  const Result r = Invoke({"distance", "--a", "0,1", "--b", "2,1", "--format",
                           "json", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("command"), "distance");
  std::filesystem::remove(path);
}

TEST(CliTest, HelpAndUsage) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({"distance", "--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({}).code, kExitInvalidInput);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInvalidInput);
  EXPECT_EQ(Invoke({"distance", "--a", "0,1", "--b", "0,1", "--tol", "-1"}).code,
            kExitInvalidInput);
}

}  // namespace
}  // namespace qmetric::cli
