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

#include "numsyl/ilp.hpp"

#include <chrono>
#include <deque>
#include <stdexcept>

#include "integer_rows.hpp"
#include "numsyl/error.hpp"

namespace numsyl {

std::string_view StatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

using internal::CeilDiv;
using internal::FloorDiv;
using internal::Wide;
using Clock = std::chrono::steady_clock;

class BranchAndBound {
 public:
  BranchAndBound(const LinearSystem& sys, std::span<const std::int64_t> upper,
                 const IlpOptions& options)
      : original_(sys), sys_(internal::ScaleToIntegers(sys)), options_(options),
        lo_(sys.num_vars(), 0), hi_(upper.begin(), upper.end()),
        queued_(sys_.rows.size(), false) {
    if (options.use_lp) lp_.emplace(sys, options.lp_limits);
    if (options.time_limit_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         options.time_limit_seconds));
    }
  }

  IlpResult Run() {
    IlpResult result;
    for (auto h : hi_) {
      if (h < 0) throw InputError("negative variable cap");
    }
    for (std::size_t i = 0; i < sys_.rows.size(); ++i) Enqueue(i);
    if (lp_) {
      for (std::size_t j = 0; j < hi_.size(); ++j) {
        lp_->SetUpper(j, mpq_class(static_cast<long>(hi_[j])));
      }
    }
    result.status = Node();
    result.nodes = nodes_;
    if (lp_) result.lp_pivots = lp_->pivots();
    if (result.status == SolveStatus::kFeasible) {
      if (!original_.IsSolution(std::span<const std::int64_t>(solution_))) {
        throw std::logic_error("branch-and-bound produced a non-solution");
      }
      result.solution = std::move(solution_);
    }
    return result;
  }

 private:
  struct Change {
    std::size_t var;
    std::int64_t lo;
    std::int64_t hi;
  };

  void Enqueue(std::size_t row) {
    if (!queued_[row]) {
      queued_[row] = true;
      queue_.push_back(row);
    }
  }

  // Returns false when the tightened interval is empty.
  bool Tighten(std::size_t var, Wide lo, Wide hi) {
    if (lo <= lo_[var] && hi >= hi_[var]) return true;
    trail_.push_back({var, lo_[var], hi_[var]});
    touched_.push_back(var);
    if (lo > lo_[var]) lo_[var] = static_cast<std::int64_t>(lo);
    if (hi < hi_[var]) hi_[var] = static_cast<std::int64_t>(hi);
    if (lo_[var] > hi_[var]) return false;
    for (const auto& [row, a] : sys_.columns[var]) Enqueue(row);
    return true;
  }

  bool PropagateRow(std::size_t i) {
    const internal::IntRow& row = sys_.rows[i];
    Wide min_act = 0;
    Wide max_act = 0;
    for (const auto& [j, a] : row.terms) {
      min_act += a > 0 ? Wide(a) * lo_[j] : Wide(a) * hi_[j];
      max_act += a > 0 ? Wide(a) * hi_[j] : Wide(a) * lo_[j];
    }
    const Wide c = row.rhs;
    const bool upper_side = row.relation != Relation::kGreaterEqual;
    const bool lower_side = row.relation != Relation::kLessEqual;
    if (upper_side && min_act > c) return false;
    if (lower_side && max_act < c) return false;
    const Wide kInf = Wide(1) << 100;
    for (const auto& [j, a] : row.terms) {
      Wide lo = -kInf;
      Wide hi = kInf;
      if (upper_side) {
        // a x_j <= c - (min_act - own minimum contribution).
        if (a > 0) {
          hi = FloorDiv(c - min_act + Wide(a) * lo_[j], a);
        } else {
          lo = CeilDiv(c - min_act + Wide(a) * hi_[j], a);
        }
      }
      if (lower_side) {
        if (a > 0) {
          lo = std::max(lo, CeilDiv(c - max_act + Wide(a) * hi_[j], a));
        } else {
          hi = std::min(hi, FloorDiv(c - max_act + Wide(a) * lo_[j], a));
        }
      }
      if (!Tighten(j, lo, hi)) return false;
    }
    return true;
  }

  bool Propagate() {
    while (!queue_.empty()) {
      const std::size_t row = queue_.front();
      queue_.pop_front();
      queued_[row] = false;
      if (!PropagateRow(row)) {
        for (auto r : queue_) queued_[r] = false;
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Change& c = trail_.back();
      lo_[c.var] = c.lo;
      hi_[c.var] = c.hi;
      trail_.pop_back();
    }
  }

  bool OutOfBudget() {
    if (nodes_ >= options_.node_limit) return true;
    if (options_.cancel && options_.cancel->load(std::memory_order_relaxed)) {
      return true;
    }
    if (deadline_ && (nodes_ & 63) == 0 && Clock::now() > *deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  bool AllFixed() const {
    for (std::size_t j = 0; j < lo_.size(); ++j) {
      if (lo_[j] != hi_[j]) return false;
    }
    return true;
  }

  bool RowsHold(const NaturalVector& x) const {
    for (const auto& row : sys_.rows) {
      Wide act = 0;
      for (const auto& [j, a] : row.terms) act += Wide(a) * x[j];
      if (row.relation != Relation::kGreaterEqual && act > row.rhs) return false;
      if (row.relation != Relation::kLessEqual && act < row.rhs) return false;
    }
    return true;
  }

  SolveStatus Node() {
    if (OutOfBudget()) return SolveStatus::kUnknown;
    ++nodes_;
    const std::size_t mark = trail_.size();
    if (!Propagate()) {
      Undo(mark);
      return SolveStatus::kInfeasible;
    }
    if (AllFixed()) {
      if (RowsHold(lo_)) {
        solution_ = lo_;
        return SolveStatus::kFeasible;
      }
      Undo(mark);
      return SolveStatus::kInfeasible;
    }

    std::size_t branch_var = SIZE_MAX;
    std::int64_t down_hi = 0;
    bool lp_pushed = false;
    if (lp_) {
      lp_->Push();
      lp_pushed = true;
      for (std::size_t j : touched_) {
        lp_->SetLower(j, mpq_class(static_cast<long>(lo_[j])));
        lp_->SetUpper(j, mpq_class(static_cast<long>(hi_[j])));
      }
      touched_.clear();
      const auto status = lp_->Check(options_.lp_pivot_limit);
      if (status == BoundedSimplex::Status::kInfeasible) {
        lp_->Pop();
        Undo(mark);
        return SolveStatus::kInfeasible;
      }
      if (status == BoundedSimplex::Status::kFeasible) {
        std::int64_t best_width = INT64_MAX;
        for (std::size_t j = 0; j < lo_.size(); ++j) {
          const mpq_class& v = lp_->value(j);
          if (v.get_den() == 1) continue;
          const std::int64_t width = hi_[j] - lo_[j];
          if (width < best_width) {
            best_width = width;
            branch_var = j;
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
            down_hi = f.get_si();
          }
        }
        if (branch_var == SIZE_MAX) {
          NaturalVector x(lo_.size());
          for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = lp_->value(j).get_num().get_si();
          }
          solution_ = std::move(x);
          return SolveStatus::kFeasible;
        }
      }
    }
    touched_.clear();
    if (branch_var == SIZE_MAX) {
      // No usable relaxation: split the narrowest open interval at its floor.
      std::int64_t best_width = INT64_MAX;
      for (std::size_t j = 0; j < lo_.size(); ++j) {
        const std::int64_t width = hi_[j] - lo_[j];
        if (width > 0 && width < best_width) {
          best_width = width;
          branch_var = j;
          down_hi = lo_[j];
        }
      }
    }

    bool unknown = false;
    const std::int64_t old_lo = lo_[branch_var];
    const std::int64_t old_hi = hi_[branch_var];
    for (int side = 0; side < 2; ++side) {
      const std::size_t child_mark = trail_.size();
      const Wide lo = side == 0 ? old_lo : down_hi + 1;
      const Wide hi = side == 0 ? down_hi : old_hi;
      touched_.clear();
      if (Tighten(branch_var, lo, hi)) {
        const SolveStatus s = Node();
        if (s == SolveStatus::kFeasible) return s;
        if (s == SolveStatus::kUnknown) unknown = true;
      }
      Undo(child_mark);
      for (auto r : queue_) queued_[r] = false;
      queue_.clear();
    }
    if (lp_pushed) lp_->Pop();
    Undo(mark);
    return unknown ? SolveStatus::kUnknown : SolveStatus::kInfeasible;
  }

  const LinearSystem& original_;
  internal::IntSystem sys_;
  IlpOptions options_;
  std::optional<BoundedSimplex> lp_;
  NaturalVector lo_;
  NaturalVector hi_;
  std::vector<Change> trail_;
  std::vector<std::size_t> touched_;
  std::deque<std::size_t> queue_;
  std::vector<bool> queued_;
  NaturalVector solution_;
  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
  bool timed_out_ = false;
};

}  // namespace

IlpResult IlpSolve(const LinearSystem& sys, std::span<const std::int64_t> upper,
                   const IlpOptions& options) {
  if (upper.size() != sys.num_vars()) {
    throw InputError("one upper bound per variable is required");
  }
  return BranchAndBound(sys, upper, options).Run();
}

}  // namespace numsyl
