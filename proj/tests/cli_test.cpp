// Copyright 2026 The numsyl Authors
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


#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace numsyl::cli {
namespace {

namespace fs = std::filesystem;

std::string Data(const std::string& name) { return std::string(NUMSYL_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("numsyl-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with --json and --out pointed at the scratch directory.
  nlohmann::json RunJson(std::vector<std::string> args, int* code = nullptr) {
    args.insert(args.begin(), {"--json", "--out", dir_.string()});
    std::ostringstream out;
    std::ostringstream err;
    const int rc = cli::Run(args, out, err);
    if (code != nullptr) *code = rc;
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j.at("exit_code").get<int>(), rc);
    return j;
  }

  std::string Out(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(ExitCode(Status::kValid), 0);
  EXPECT_EQ(ExitCode(Status::kUnsat), 0);
  EXPECT_EQ(ExitCode(Status::kUnknown), 2);
  EXPECT_EQ(ExitCode(Status::kError), 1);
  EXPECT_EQ(StatusName(Status::kNotDerivable), "NotDerivable");
}

TEST_F(CliTest, SolveArgumentOne) {
  int code = -1;
  const auto j = RunJson({"--lexicon", Data("artists.lex"), "solve", Data("argument1.txt")}, &code);
  EXPECT_EQ(code, 0);
  EXPECT_EQ(j.at("tool"), "numsyl");
  EXPECT_EQ(j.at("command"), "solve");
  EXPECT_EQ(j.at("status"), "Valid");
  ASSERT_FALSE(j.at("certificates").empty());
  const auto sys = j.at("certificates").at(0).get<std::string>();
  const auto again = RunJson({"check", "--system", sys});
  EXPECT_EQ(again.at("status"), "Unsat");
}

TEST_F(CliTest, SymbolicInputNeedsNoLexicon) {
  EXPECT_EQ(RunJson({"solve", Data("argument1.sym")}).at("status"), "Valid");
}

TEST_F(CliTest, PremisesAloneAreSatisfiable) {
  const auto j = RunJson({"--lexicon", Data("artists.lex"), "solve", Data("argument1-premises.txt")});
  ASSERT_EQ(j.at("status"), "Sat");
  std::string model;
  for (const auto& c : j.at("certificates")) {
    if (c.get<std::string>().ends_with(".struct")) model = c;
  }
  ASSERT_FALSE(model.empty());
  const auto checked = RunJson({"--lexicon", Data("artists.lex"), "check", model,
                                Data("argument1-premises.txt")});
  EXPECT_EQ(checked.at("status"), "True");
}

TEST_F(CliTest, Contradiction) {
  EXPECT_EQ(RunJson({"--lexicon", Data("letters.lex"), "solve", Data("contradiction.txt")}).at("status"),
            "Unsat");
  EXPECT_EQ(RunJson({"--lexicon", Data("letters.lex"), "derive", Data("ex-falso.txt")}).at("status"),
            "Derivable");
}

TEST_F(CliTest, DeriveSequent) {
  EXPECT_EQ(RunJson({"derive", Data("sequent.sym")}).at("status"), "NotDerivable");
  const auto j = RunJson({"derive", Data("sequent-explicit.sym")});
  ASSERT_EQ(j.at("status"), "Derivable");
  const auto d = j.at("certificates").at(0).get<std::string>();
  EXPECT_EQ(RunJson({"check", "--derivation", d, Data("sequent-explicit.sym")}).at("status"), "True");
}

TEST_F(CliTest, GenerateThreeColAndSolve) {
  const auto j = RunJson({"generate", "3col", "--graph", "k4"});
  ASSERT_EQ(j.at("status"), "Done");
  EXPECT_EQ(RunJson({"solve", Out("formulas.txt")}).at("status"), "Unsat");
}

TEST_F(CliTest, GenerateTiling) {
  const auto j = RunJson({"--seed", "7", "generate", "tiling", "--k", "1", "--colours", "2"});
  ASSERT_EQ(j.at("status"), "Done");
  EXPECT_EQ(RunJson({"check", Out("witness.struct"), Out("theta.txt")}).at("status"), "True");
}

TEST_F(CliTest, GenerateIncompleteness) {
  ASSERT_EQ(RunJson({"generate", "incompleteness", "--m", "6"}).at("status"), "Done");
  EXPECT_TRUE(fs::exists(Out("phi.txt")));
  EXPECT_TRUE(fs::exists(Out("counterexample.txt")));
}

TEST_F(CliTest, Psat) {
  const auto sat = RunJson({"psat", Data("psat-feasible.txt")});
  ASSERT_EQ(sat.at("status"), "Sat");
  EXPECT_EQ(RunJson({"check", "--assignment", Out("assignment.txt"), "--psat", Data("psat-feasible.txt")})
                .at("status"),
            "True");
  const auto unsat = RunJson({"psat", Data("psat-infeasible.txt")});
  ASSERT_EQ(unsat.at("status"), "Unsat");
  const auto cert = unsat.at("certificates").at(0).get<std::string>();
  EXPECT_EQ(RunJson({"check", "--system", cert, "--rational"}).at("status"), "Unsat");
}

TEST_F(CliTest, RelationalSearch) {
  EXPECT_EQ(RunJson({"solve", Data("chain-unsat.sym")}).at("status"), "Unsat");
  EXPECT_EQ(RunJson({"solve", Data("chain.sym")}).at("status"), "Sat");
}

TEST_F(CliTest, Shrink) {
  const auto j = RunJson({"shrink", Data("chain100.struct"), Data("chain.sym")});
  ASSERT_EQ(j.at("status"), "Done");
  EXPECT_EQ(RunJson({"check", Out("shrunk.struct"), Data("chain.sym")}).at("status"), "True");
}

TEST_F(CliTest, BudgetGivesUnknown) {
  int code = -1;
  const auto j = RunJson({"--budget", "20000", "--lexicon", Data("trades.lex"), "solve",
                          Data("argument2.txt")},
                         &code);
  EXPECT_EQ(j.at("status"), "Unknown");
  EXPECT_EQ(code, 2);
}

TEST_F(CliTest, InputErrorsExitWithOne) {
  fs::create_directories(dir_);
  const std::string bad = Out("bad.sym");
  std::ofstream(bad) << ">=1 (p &\n";
  int code = -1;
  const auto j = RunJson({"solve", bad}, &code);
  EXPECT_EQ(code, 1);
  EXPECT_EQ(j.at("status"), "Error");
  EXPECT_NE(j.at("details").at("error").get<std::string>().find("line 1"), std::string::npos);

  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::Run({"solve", "/nonexistent/file"}, out, err), 1);
  EXPECT_EQ(cli::Run({"frobnicate"}, out, err), 1);
}

TEST_F(CliTest, TextOutputNamesTheVerdict) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::Run({"--out", dir_.string(), "solve", Data("argument1.sym")}, out, err), 0);
  EXPECT_NE(out.str().find("Valid"), std::string::npos);
}

}  // namespace
}  // namespace numsyl::cli
