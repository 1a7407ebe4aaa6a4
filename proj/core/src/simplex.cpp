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

#include "numsyl/simplex.hpp"

#include <stdexcept>
#include <string>

#include "numsyl/error.hpp"

namespace numsyl {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

BoundedSimplex::BoundedSimplex(const LinearSystem& sys, const LpLimits& limits)
    : num_structural_(sys.num_vars()),
      num_vars_(sys.num_vars() + sys.num_rows()) {
  const std::size_t m = sys.num_rows();
  if (m > limits.max_rows || num_structural_ > limits.max_cols ||
      (m > 0 && num_vars_ > limits.max_entries / m)) {
    throw CapExceeded("LP with " + std::to_string(m) + " rows and " +
                      std::to_string(num_structural_) +
                      " columns exceeds the configured caps");
  }
  rows_.assign(m, std::vector<mpq_class>(num_vars_));
  basic_.resize(m);
  row_of_.assign(num_vars_, kNone);
  value_.assign(num_vars_, mpq_class(0));
  lower_.assign(num_vars_, std::nullopt);
  upper_.assign(num_vars_, std::nullopt);
  for (std::size_t j = 0; j < num_structural_; ++j) lower_[j] = mpq_class(0);
  for (std::size_t i = 0; i < m; ++i) {
    const LinearRow& row = sys.row(i);
    for (const auto& [col, coef] : row.terms) rows_[i][col] = coef.raw();
    const std::size_t slack = num_structural_ + i;
    basic_[i] = slack;
    row_of_[slack] = i;
    if (row.relation != Relation::kGreaterEqual) upper_[slack] = row.rhs.raw();
    if (row.relation != Relation::kLessEqual) lower_[slack] = row.rhs.raw();
  }
}

void BoundedSimplex::SetLower(std::size_t var, const mpq_class& v) {
  if (!marks_.empty()) trail_.push_back({var, lower_[var], upper_[var]});
  lower_[var] = v;
  if (row_of_[var] == kNone && value_[var] < v) UpdateNonbasic(var, v);
}

void BoundedSimplex::SetUpper(std::size_t var, const mpq_class& v) {
  if (!marks_.empty()) trail_.push_back({var, lower_[var], upper_[var]});
  upper_[var] = v;
  if (row_of_[var] == kNone && value_[var] > v) UpdateNonbasic(var, v);
}

void BoundedSimplex::Push() { marks_.push_back(trail_.size()); }

void BoundedSimplex::Pop() {
  if (marks_.empty()) throw std::logic_error("Pop without Push");
  const std::size_t mark = marks_.back();
  marks_.pop_back();
  while (trail_.size() > mark) {
    TrailEntry& e = trail_.back();
    lower_[e.var] = std::move(e.lower);
    upper_[e.var] = std::move(e.upper);
    trail_.pop_back();
  }
}

void BoundedSimplex::UpdateNonbasic(std::size_t var, const mpq_class& target) {
  const mpq_class theta = target - value_[var];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class& a = rows_[r][var];
    if (sgn(a) != 0) value_[basic_[r]] += a * theta;
  }
  value_[var] = target;
}

void BoundedSimplex::PivotAndUpdate(std::size_t row, std::size_t entering,
                                    const mpq_class& target) {
  const std::size_t leaving = basic_[row];
  const mpq_class theta = (target - value_[leaving]) / rows_[row][entering];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class& a = rows_[r][entering];
    if (sgn(a) != 0) value_[basic_[r]] += a * theta;
  }
  value_[entering] += theta;
  Pivot(row, entering);
}

void BoundedSimplex::Pivot(std::size_t row, std::size_t entering) {
  const std::size_t leaving = basic_[row];
  std::vector<mpq_class>& pivot_row = rows_[row];
  // Rewrite `leaving = a.x` as `entering = (leaving - sum_{k != e} a_k x_k) / a_e`.
  const mpq_class inv = 1 / pivot_row[entering];
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < num_vars_; ++k) {
    if (k == entering || sgn(pivot_row[k]) == 0) continue;
    pivot_row[k] *= -inv;
    support.push_back(k);
  }
  pivot_row[entering] = 0;
  pivot_row[leaving] = inv;
  support.push_back(leaving);

  mpq_class scaled;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == row) continue;
    std::vector<mpq_class>& target = rows_[r];
    if (sgn(target[entering]) == 0) continue;
    const mpq_class c = target[entering];
    target[entering] = 0;
    for (std::size_t k : support) {
      mpq_mul(scaled.get_mpq_t(), c.get_mpq_t(), pivot_row[k].get_mpq_t());
      target[k] += scaled;
    }
  }
  basic_[row] = entering;
  row_of_[entering] = row;
  row_of_[leaving] = kNone;
  ++pivots_;
}

BoundedSimplex::Status BoundedSimplex::Check(std::uint64_t pivot_limit) {
  for (std::size_t v = 0; v < num_vars_; ++v) {
    if (lower_[v] && upper_[v] && *lower_[v] > *upper_[v]) {
      return Status::kInfeasible;
    }
  }
  std::uint64_t budget = pivot_limit;
  while (true) {
    // Bland: the violated basic variable of least index leaves.
    std::size_t row = kNone;
    std::size_t leaving = kNone;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t b = basic_[r];
      if (b < leaving && (BelowLower(b) || AboveUpper(b))) {
        leaving = b;
        row = r;
      }
    }
    if (row == kNone) return Status::kFeasible;
    if (budget-- == 0) return Status::kPivotLimit;

    const bool increase = BelowLower(leaving);
    const std::vector<mpq_class>& coeffs = rows_[row];
    std::size_t entering = kNone;
    for (std::size_t j = 0; j < num_vars_ && entering == kNone; ++j) {
      const int s = sgn(coeffs[j]);
      if (s == 0) continue;
      const bool can_up = !upper_[j] || value_[j] < *upper_[j];
      const bool can_down = !lower_[j] || value_[j] > *lower_[j];
      const bool raises = s > 0 ? can_up : can_down;
      const bool lowers = s > 0 ? can_down : can_up;
      if (increase ? raises : lowers) entering = j;
    }
    if (entering == kNone) return Status::kInfeasible;
    PivotAndUpdate(row, entering, increase ? *lower_[leaving] : *upper_[leaving]);
  }
}

RationalVector BoundedSimplex::Solution() const {
  RationalVector out;
  out.reserve(num_structural_);
  for (std::size_t j = 0; j < num_structural_; ++j) {
    out.emplace_back(BigInt(value_[j].get_num()), BigInt(value_[j].get_den()));
  }
  return out;
}

std::optional<RationalVector> LpFeasible(const LinearSystem& sys,
                                         const LpLimits& limits) {
  BoundedSimplex simplex(sys, limits);
  if (simplex.Check() != BoundedSimplex::Status::kFeasible) return std::nullopt;
  RationalVector x = simplex.Solution();
  if (!sys.IsSolution(std::span<const Rational>(x))) {
    throw std::logic_error("simplex returned a non-solution");
  }
  return x;
}

}  // namespace numsyl
