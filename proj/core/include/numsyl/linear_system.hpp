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

#ifndef NUMSYL_LINEAR_SYSTEM_HPP_
#define NUMSYL_LINEAR_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsyl/rational.hpp"

namespace numsyl {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
std::string_view RelationSymbol(Relation r);

using NaturalVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

struct LinearRow {
  // Sorted by column, no zero coefficients, no repeated columns.
  std::vector<std::pair<std::size_t, Rational>> terms;
  Relation relation = Relation::kEqual;
  Rational rhs;
};

// m rows over L variables with exact rational coefficients.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<LinearRow>& rows() const { return rows_; }
  const LinearRow& row(std::size_t i) const { return rows_[i]; }

  // `coefficients` has num_vars() entries.
  void AddDenseRow(std::span<const Rational> coefficients, Relation relation,
                   Rational rhs);
  // Terms may be unsorted and repeat a column; they are merged.
  void AddSparseRow(std::vector<std::pair<std::size_t, Rational>> terms,
                    Relation relation, Rational rhs);

  Rational coefficient(std::size_t row, std::size_t col) const;
  // Every coefficient is 0 or 1 and every right-hand side is a natural.
  bool is_boolean() const;
  bool all_equalities() const;

  Rational RowValue(std::size_t row, std::span<const Rational> x) const;
  bool IsSolution(std::span<const Rational> x) const;
  bool IsSolution(std::span<const std::int64_t> x) const;

  // Restriction to the given columns, in the given order.
  LinearSystem SelectColumns(std::span<const std::size_t> columns) const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<LinearRow> rows_;
};

RationalVector ToRational(std::span<const std::int64_t> x);
std::size_t CountNonzeros(std::span<const std::int64_t> x);
std::size_t CountNonzeros(std::span<const Rational> x);

// Text form: a header "m L", then m rows "a1 ... aL (<=|>=|=) c" where each
// entry is an integer or p/q. Blank lines and '#' comments are ignored.
LinearSystem ParseLinearSystem(std::string_view text);
std::string FormatLinearSystem(const LinearSystem& sys);

// The m x (m+1) Boolean system whose only natural solution is all ones: rows
// 1..m-1 carry three consecutive ones starting at column i, the last row is
// (1,1,0,1,0,0,1,0,...,0), and the right-hand side is (3,...,3,4).
// Requires m >= 6.
LinearSystem ManyNonzerosInstance(std::size_t m);

// All natural solutions with 0 <= x_j <= upper[j], in lexicographic order.
// Throws CapExceeded when the box holds more than `volume_cap` points.
std::vector<NaturalVector> EnumerateSolutions(
    const LinearSystem& sys, std::span<const std::int64_t> upper,
    std::uint64_t volume_cap = 10'000'000);

}  // namespace numsyl

#endif  // NUMSYL_LINEAR_SYSTEM_HPP_
