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

#ifndef NUMSYL_TOOLS_CLI_HPP_
#define NUMSYL_TOOLS_CLI_HPP_

// Subcommands of the numsyl tool. Each returns a Verdict; Run() parses the
// command line, prints the verdict as text or JSON and maps it to an exit
// code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace numsyl::cli {

enum class Status {
  kValid,
  kInvalid,
  kSat,
  kUnsat,
  kDerivable,
  kNotDerivable,
  kUnknown,
  kTrue,   // check: every formula holds
  kFalse,  // check: some formula fails
  kDone,   // generate, shrink
  kError,
};
std::string_view StatusName(Status s);
// 0 when decided, 2 for Unknown, 1 for input errors.
int ExitCode(Status s);

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct Options {
  bool json = false;
  // Certificates and generated files go here; created on demand.
  std::string out_dir = "numsyl-out";
  // Work limit; 0 means NUMSYL_BUDGET or the per-command default.
  std::uint64_t budget = 0;
  double timeout_seconds = 0;
  // Largest domain tried by the relational search; 0 means the size bound.
  std::size_t domain_cap = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
  bool explain = false;
  std::string lexicon;  // path; selects English input
  std::string format = "auto";  // auto, english or symbolic
};

struct Verdict {
  std::string command;
  Status status = Status::kUnknown;
  std::vector<std::string> certificates;
  double seconds = 0;
  nlohmann::json details = nlohmann::json::object();
  std::string report;  // human-readable body
};

nlohmann::json ToJson(const Verdict& v);
std::string ToText(const Verdict& v);

// Budget in effect: options.budget, else NUMSYL_BUDGET, else `fallback`.
std::uint64_t EffectiveBudget(const Options& options, std::uint64_t fallback);

Verdict Solve(const std::string& argument_path, const Options& options);
Verdict Derive(const std::string& argument_path, const Options& options);

struct ThreeColParams {
  std::string graph;       // named graph ("k4", "c5", "e3")
  std::string graph_file;  // DIMACS-like file
  std::size_t random_nodes = 0;
  double density = 0.5;
};
Verdict GenerateThreeCol(const ThreeColParams& params, const Options& options);

struct TilingParams {
  std::size_t k = 1;
  std::size_t colours = 2;
  std::size_t init_length = 1;
  std::string system_file;  // otherwise a random system with a planted tiling
};
Verdict GenerateTiling(const TilingParams& params, const Options& options);

Verdict GenerateIncompleteness(std::size_t m, const Options& options);

Verdict Psat(const std::string& instance_path, bool inequalities, const Options& options);

struct CheckParams {
  std::string structure;
  std::string formulas;
  std::string system;
  bool rational = false;
  std::string derivation;
  std::string assignment;
  std::string psat;
};
Verdict Check(const CheckParams& params, const Options& options);

Verdict Shrink(const std::string& structure_path, const std::string& formulas_path,
               const Options& options);

// Entry point for main(); returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsyl::cli

#endif  // NUMSYL_TOOLS_CLI_HPP_
