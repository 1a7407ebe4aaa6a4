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

#ifndef NUMSYL_SIMPLEX_HPP_
#define NUMSYL_SIMPLEX_HPP_

// Exact feasibility simplex over bounded variables.
//
// Each row i gets a slack s_i = a_i . x whose bounds encode the relation, so
// the problem becomes "find an assignment within all bounds" for the equations
// s = A x. The tableau keeps every basic variable as a combination of the
// nonbasic ones; Check() repairs violated basic variables by pivoting under
// Bland's rule, which cannot cycle. Bounds can be tightened and restored with
// Push()/Pop(), so branch-and-bound reuses one tableau for the whole search.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "numsyl/linear_system.hpp"
#include "numsyl/rational.hpp"

namespace numsyl {

struct LpLimits {
  std::size_t max_rows = 20'000;
  std::size_t max_cols = 500'000;
  // Upper bound on rows x (rows + cols) tableau entries.
  std::size_t max_entries = 60'000'000;
};

class BoundedSimplex {
 public:
  enum class Status { kFeasible, kInfeasible, kPivotLimit };

  // Structural variables x_0..x_{L-1} start with bounds [0, +inf).
  explicit BoundedSimplex(const LinearSystem& sys, const LpLimits& limits = {});

  std::size_t num_structural() const { return num_structural_; }

  void SetLower(std::size_t var, const mpq_class& value);
  void SetUpper(std::size_t var, const mpq_class& value);
  const std::optional<mpq_class>& lower(std::size_t var) const { return lower_[var]; }
  const std::optional<mpq_class>& upper(std::size_t var) const { return upper_[var]; }

  // Saves the current bounds; Pop() restores them. The assignment is left as
  // is, since it stays within the restored (looser) bounds.
  void Push();
  void Pop();

  Status Check(std::uint64_t pivot_limit = UINT64_MAX);

  const mpq_class& value(std::size_t var) const { return value_[var]; }
  RationalVector Solution() const;
  std::uint64_t pivots() const { return pivots_; }

 private:
  bool BelowLower(std::size_t v) const {
    return lower_[v] && value_[v] < *lower_[v];
  }
  bool AboveUpper(std::size_t v) const {
    return upper_[v] && value_[v] > *upper_[v];
  }
  // Moves nonbasic `var` to `target`, updating every basic variable.
  void UpdateNonbasic(std::size_t var, const mpq_class& target);
  // Brings basic variable at `row` to `target` by moving nonbasic `entering`,
  // then swaps their roles.
  void PivotAndUpdate(std::size_t row, std::size_t entering,
                      const mpq_class& target);
  void Pivot(std::size_t row, std::size_t entering);

  std::size_t num_structural_ = 0;
  std::size_t num_vars_ = 0;
  // rows_[r] expresses basic_[r] over the nonbasic variables; dense.
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::size_t> basic_;
  // Row index of a basic variable, or npos.
  std::vector<std::size_t> row_of_;
  std::vector<mpq_class> value_;
  std::vector<std::optional<mpq_class>> lower_;
  std::vector<std::optional<mpq_class>> upper_;
  struct TrailEntry {
    std::size_t var;
    std::optional<mpq_class> lower;
    std::optional<mpq_class> upper;
  };
  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> marks_;
  std::uint64_t pivots_ = 0;
};

// Some x >= 0 satisfying every row, or nullopt when none exists. Throws
// CapExceeded when the system exceeds `limits`.
std::optional<RationalVector> LpFeasible(const LinearSystem& sys,
                                         const LpLimits& limits = {});

}  // namespace numsyl

#endif  // NUMSYL_SIMPLEX_HPP_
