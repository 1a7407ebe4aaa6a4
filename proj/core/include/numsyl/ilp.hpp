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

#ifndef NUMSYL_ILP_HPP_
#define NUMSYL_ILP_HPP_

#include <atomic>
#include <cstdint>
#include <span>
#include <string_view>

#include "numsyl/linear_system.hpp"
#include "numsyl/simplex.hpp"

namespace numsyl {

// kUnknown means a limit was hit; it never stands in for kInfeasible.
enum class SolveStatus { kFeasible, kInfeasible, kUnknown };
std::string_view StatusName(SolveStatus s);

struct IlpOptions {
  std::uint64_t node_limit = 5'000'000;
  // Wall-clock limit in seconds; 0 disables it.
  double time_limit_seconds = 0;
  // Pivots allowed per LP relaxation before the node falls back to plain
  // branching.
  std::uint64_t lp_pivot_limit = 200'000;
  bool use_lp = true;
  // Polled between nodes; a set flag ends the search with kUnknown.
  const std::atomic<bool>* cancel = nullptr;
  LpLimits lp_limits;
};

struct IlpResult {
  SolveStatus status = SolveStatus::kUnknown;
  NaturalVector solution;  // Set when status == kFeasible.
  std::uint64_t nodes = 0;
  std::uint64_t lp_pivots = 0;
};

// Natural solution with 0 <= x_j <= upper[j], found by branch-and-bound:
// interval propagation over the rows to a fixpoint, an exact LP relaxation at
// every node, and branching on the fractional variable with the narrowest
// interval (lower branch first). The search is deterministic.
IlpResult IlpSolve(const LinearSystem& sys, std::span<const std::int64_t> upper,
                   const IlpOptions& options = {});

}  // namespace numsyl

#endif  // NUMSYL_ILP_HPP_
