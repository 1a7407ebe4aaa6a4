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

#ifndef NUMSYL_PSAT_HPP_
#define NUMSYL_PSAT_HPP_

// Probability assignments over truth assignments, the threshold semantics
// for unary counting atoms at a fixed scale, and a small PSAT decider.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsyl/linear_system.hpp"
#include "numsyl/logic.hpp"
#include "numsyl/rational.hpp"

namespace numsyl {

struct World {
  std::uint64_t assignment = 0;  // bit i: letter i is true
  Rational weight;
  friend bool operator==(const World&, const World&) = default;
};

class ProbabilityAssignment {
 public:
  static constexpr std::size_t kMaxLetters = 64;

  // Merges worlds with equal assignments and drops zero weights. Throws
  // InputError on repeated letters, negative weights or a total other than 1.
  ProbabilityAssignment(std::vector<std::string> letters, std::vector<World> worlds,
                        std::optional<std::int64_t> scale = std::nullopt);

  const std::vector<std::string>& letters() const { return letters_; }
  // Sorted by assignment.
  const std::vector<World>& worlds() const { return worlds_; }
  const std::optional<std::int64_t>& scale() const { return scale_; }
  void set_scale(std::optional<std::int64_t> scale);

  // Throws InputError for an unknown letter or a quantified formula.
  Rational Prob(const C1Formula& f) const;
  Rational Prob(const Literal& a, const Literal& b) const;
  bool Satisfies(std::uint64_t assignment, const C1Formula& f) const;

  friend bool operator==(const ProbabilityAssignment&,
                         const ProbabilityAssignment&) = default;

 private:
  std::size_t Index(const std::string& letter) const;

  std::vector<std::string> letters_;
  std::map<std::string, std::size_t> index_;
  std::vector<World> worlds_;
  std::optional<std::int64_t> scale_;
};

// P |~ a at P's scale N: ">=C" holds when P(L1 & L2) >= C/N, "<=C" when it is
// at most C/N. Throws InputError without a scale or for relational atoms.
bool ApproxModels(const ProbabilityAssignment& p, const CountingAtom& atom);

// One world per element, flat weights, scale = domain size. Predicates the
// structure leaves uninterpreted are false everywhere.
ProbabilityAssignment FlatAssignment(const FiniteStructure& s,
                                     std::vector<std::string> letters);

struct PsatConstraint {
  std::vector<Literal> clause;  // disjunction; empty means false
  Relation relation = Relation::kEqual;
  Rational probability;
};

struct PsatOptions {
  std::size_t max_letters = 20;
  // Accept <= and >= constraints as well as equalities.
  bool allow_inequalities = false;
};

struct PsatResult {
  bool satisfiable = false;
  std::optional<ProbabilityAssignment> assignment;
  std::size_t columns = 0;  // distinct atom signatures fed to the LP
  // The LP over those columns: one row per constraint, then the total.
  LinearSystem system;
};

// Exact decision. A returned assignment reproduces every demanded
// probability and has at most (constraints + 1) worlds. Throws CapExceeded
// past max_letters.
PsatResult PsatDecide(std::span<const PsatConstraint> constraints,
                      const PsatOptions& options = {});

bool CheckPsat(const ProbabilityAssignment& p,
               std::span<const PsatConstraint> constraints);

// Lines "p | !q | r ; 1/2"; the value may carry a "<=" or ">=" prefix.
// '#' starts a comment.
std::vector<PsatConstraint> ParsePsat(std::string_view text);
std::string FormatPsat(std::span<const PsatConstraint> constraints);

// "letters: p q", optional "scale: N", then one "weight: true letters" line
// per world. '#' starts a comment.
std::string FormatAssignment(const ProbabilityAssignment& p);
ProbabilityAssignment ParseAssignment(std::string_view text);

struct Counterexample {
  ProbabilityAssignment assignment;
  std::size_t zero_index = 0;      // 1-based j with P(t_j & r) = 0
  RationalVector cell_fractions;   // u_1..u_{m+1}
  std::int64_t unit = 1;           // lcm of the denominators
  std::size_t num_worlds = 0;      // before merging equal assignments
};

// A scale-6(m+1) assignment satisfying every premise of the incompleteness
// instance under |~ while refuting one goal. Throws InputError for m < 6.
Counterexample CounterexampleAssignment(std::size_t m);

}  // namespace numsyl

#endif  // NUMSYL_PSAT_HPP_
