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

#ifndef NUMSYL_SYLLOGISM_HPP_
#define NUMSYL_SYLLOGISM_HPP_

// The numerical syllogism calculus: axioms
//   >=0 (L1 & L2)            <=C (L & !L)   for C >= 0
// rules
//   R1  <=C (L1 & L2), <=D (!L2 & L3)  =>  <=(C+D) (L1 & L3)
//   R2  >=C (L1 & L2), <=D (L2 & L3)   =>  >=(C-D) (L1 & !L3)
//   R3  <=C (L1 & L1), >=D (L1 & L2)   =>  <=(C-D) (L1 & !L2)
// and ex falso: from <=C (L1 & L2) and >=D (L1 & L2) with D > C, anything.
//
// Derivability is decided by saturating a table of best known bounds per
// literal pair. Each rule's conclusion is monotone in its premise subscripts,
// so keeping only the best bound per pair loses nothing.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "numsyl/linear_system.hpp"
#include "numsyl/logic.hpp"

namespace numsyl {

enum class Rule { kPremise, kAxiom, kR1, kR2, kR3, kExFalso };
std::string_view RuleName(Rule r);

// First unification of the rule's premise shapes with (a, b), in that order.
std::optional<CountingAtom> ApplyRule(Rule rule, const CountingAtom& a,
                                      const CountingAtom& b);
// Every conclusion over all literal-order unifications.
std::vector<CountingAtom> RuleConclusions(Rule rule, const CountingAtom& a,
                                          const CountingAtom& b);
// Instance of one of the two axiom schemas.
bool IsAxiom(const CountingAtom& a);

struct DerivationNode {
  CountingAtom conclusion;
  Rule rule = Rule::kPremise;
  // Two premises for R1-R3 and ex falso; none for leaves.
  std::vector<std::shared_ptr<const DerivationNode>> children;
};
using Derivation = std::shared_ptr<const DerivationNode>;

// Checks every node: leaves are premises of `phi` or axiom instances, rule
// nodes match RuleConclusions of their children, ex falso nodes have a
// contradictory pair of children.
bool ReplayDerivation(const Derivation& d, std::span<const CountingAtom> phi);
// Indented tree; a subtree already printed is referenced by its number.
std::string FormatDerivation(const Derivation& d);
// Inverse of FormatDerivation; shared subtrees are restored as shared nodes.
Derivation ParseDerivation(std::string_view text);
std::size_t DerivationSize(const Derivation& d);

struct SaturationOptions {
  std::size_t max_rounds = 100'000;
};

enum class SaturationStatus { kFixpoint, kContradiction, kBudget };
std::string_view SaturationStatusName(SaturationStatus s);

// Best derivable bounds per unordered literal pair.
class BoundTable {
 public:
  // Predicates of `phi` plus `extra_predicates` form the literal universe.
  // Throws InputError for relational atoms.
  BoundTable(std::span<const CountingAtom> phi,
             std::span<const std::string> extra_predicates = {});

  SaturationStatus Saturate(const SaturationOptions& options = {});
  SaturationStatus status() const { return status_; }
  bool contradictory() const { return status_ == SaturationStatus::kContradiction; }
  std::size_t rounds() const { return rounds_; }

  // Literal pair bounds (no contradiction shortcut). Upper is nullopt when no
  // at-most bound has been derived.
  std::optional<std::int64_t> upper(const Literal& a, const Literal& b) const;
  std::int64_t lower(const Literal& a, const Literal& b) const;

  // Whether the table shows `goal` derivable, with a derivation when so.
  // Predicates outside the universe are rejected with InputError.
  std::optional<Derivation> Derive(const CountingAtom& goal) const;

  const std::vector<std::string>& predicates() const { return predicates_; }

 private:
  struct Step {
    std::int64_t value;
    Rule rule;
    std::size_t premise_index;  // for kPremise
    // (pair, is_upper, value) of the two rule premises.
    std::size_t pair_a, pair_b;
    bool upper_a, upper_b;
    std::int64_t value_a, value_b;
  };
  struct Entry {
    std::optional<std::int64_t> upper;
    std::int64_t lower = 0;
    std::vector<Step> upper_history;
    std::vector<Step> lower_history;
  };

  std::size_t LiteralId(const Literal& l) const;
  Literal LiteralOf(std::size_t id) const;
  std::size_t PairIndex(std::size_t a, std::size_t b) const;
  CountingAtom PairAtom(std::size_t pair, bool upper, std::int64_t value) const;
  bool Improve(std::size_t pair, bool upper, const Step& step);
  void CheckContradiction(std::size_t pair);
  Derivation Build(std::size_t pair, bool upper, std::int64_t value,
                   std::map<std::tuple<std::size_t, bool, std::int64_t>, Derivation>& memo) const;
  Derivation Weaken(const Derivation& d, std::size_t pair, bool upper,
                    std::int64_t from, std::int64_t to) const;

  std::vector<CountingAtom> phi_;
  std::vector<std::string> predicates_;
  std::map<std::string, std::size_t> predicate_index_;
  std::size_t num_literals_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::pair<std::size_t, std::size_t>> pair_literals_;
  SaturationStatus status_ = SaturationStatus::kBudget;
  std::optional<std::size_t> contradiction_pair_;
  std::size_t rounds_ = 0;
  bool saturated_ = false;
};

enum class DeriveStatus { kDerivable, kNotDerivable, kNotShown };
std::string_view DeriveStatusName(DeriveStatus s);

struct DeriveResult {
  DeriveStatus status = DeriveStatus::kNotShown;
  std::optional<Derivation> derivation;
  SaturationStatus saturation = SaturationStatus::kBudget;
};

// kNotDerivable only when saturation reached a fixpoint; a budget stop gives
// kNotShown.
DeriveResult Derives(std::span<const CountingAtom> phi, const CountingAtom& goal,
                     const SaturationOptions& options = {});

struct ExplicitCounts {
  std::int64_t total = 0;
  std::map<std::string, std::int64_t> counts;
};

struct ExplicitnessResult {
  std::optional<ExplicitCounts> counts;
  std::string diagnostic;  // why not, when counts is empty
};

// Whether every predicate p of phi has a count C_p <= C, for a common C > 0,
// declared by the four atoms <=C_p p, >=C_p p, <=(C-C_p) !p, >=(C-C_p) !p.
ExplicitnessResult IsNumericallyExplicit(std::span<const CountingAtom> phi);

struct IncompletenessInstance {
  std::size_t m = 0;
  LinearSystem matrix;              // the unique-solution system
  std::vector<CountingAtom> phi1;   // structural part
  std::vector<CountingAtom> phi2;   // explicit counts
  std::vector<CountingAtom> phi;    // union without repeats, phi1 first
  std::vector<CountingAtom> goals;  // >=1 (t_j & r), j = 1..m+1
};

// Predicates t, t1..t{m+1}, s1..s{m}, r. phi1 forces |t_j & r| to solve the
// unique-solution system, so every goal follows; phi2 fixes the size of every
// predicate and its complement against a total of 6(m+1). Requires m >= 6.
IncompletenessInstance MakeIncompletenessInstance(std::size_t m);

}  // namespace numsyl

#endif  // NUMSYL_SYLLOGISM_HPP_
