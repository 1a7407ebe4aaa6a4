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

#ifndef NUMSYL_C1_SOLVER_HPP_
#define NUMSYL_C1_SOLVER_HPP_

// Satisfiability and entailment for one-variable formulas with counting
// quantifiers. A formula set is reduced to conjunctions of counting
// quantifiers over quantifier-free bodies, each conjunction becomes an integer
// system over 1-type cardinalities with every variable capped at the largest
// bound, and a solution is materialized as a finite model.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsyl/ilp.hpp"
#include "numsyl/linear_system.hpp"
#include "numsyl/logic.hpp"

namespace numsyl {

struct NormalConjunct {
  Comparison comparison = Comparison::kAtLeast;
  std::int64_t bound = 0;
  C1Formula body = C1Formula::Constant(true);  // quantifier-free
};

struct NormalC1 {
  std::vector<NormalConjunct> conjuncts;
  // Conjuncts rendered as one formula.
  C1Formula ToFormula() const;
};

struct NormalizeOptions {
  std::size_t max_depth = 24;
  std::size_t max_branches = 1 << 16;
};

// Deterministic expansion of the embedded-quantifier case split. Counting
// subformulas with quantifier-free bodies that sit inside other formulas are
// replaced, innermost and leftmost first, by true (adding the subformula as a
// conjunct) and then by false (adding its dual). Constant-false branches are
// dropped, so an empty result means unsatisfiable. Exactly-quantifiers are
// expanded into an at-least/at-most pair first.
std::vector<NormalC1> Normalize(std::span<const C1Formula> formulas,
                                const NormalizeOptions& options = {});

struct BuildOptions {
  std::size_t max_predicates = 62;
  std::size_t max_columns = std::size_t{1} << 21;
};

// Integer system over the live 1-types of one normal conjunction.
struct TypeSystem {
  std::vector<std::string> predicates;  // bit i of a mask = predicate i
  std::vector<std::uint64_t> columns;   // live 1-type masks, ascending
  LinearSystem system;                  // conjunct rows, then the totality row
  std::vector<std::size_t> row_origin;  // conjunct index; SIZE_MAX = totality
  std::int64_t cap = 1;                 // largest right-hand side
};

// a(i, j) = 1 iff 1-type j satisfies body i. Every 1-type satisfying the body
// of an at-most-0 conjunct is deleted along with those rows; the survivors are
// enumerated depth-first with three-valued pruning, so the full 2^l type space
// is never materialized. A final row requires at least one element.
TypeSystem BuildSystem(const NormalC1& normal, const BuildOptions& options = {});

enum class SatStatus { kSat, kUnsat, kUnknown };
std::string_view SatStatusName(SatStatus s);

struct SatCertificate {
  std::size_t branch = 0;
  std::vector<std::string> predicates;
  std::vector<std::uint64_t> types;  // 1-types with a nonzero count
  NaturalVector counts;
  // Text dump: predicate list, then one "mask count" line per type.
  std::string str() const;
};

struct SolverOptions {
  IlpOptions ilp;
  NormalizeOptions normalize;
  BuildOptions build;
  // Branches solved concurrently; the lowest-index satisfiable branch wins.
  std::size_t jobs = 1;
  // Reduce the certificate's support with the subset-exchange procedure.
  bool sparsify_certificate = true;
};

struct SatResult {
  SatStatus status = SatStatus::kUnknown;
  std::optional<FiniteStructure> witness;
  std::optional<SatCertificate> certificate;
  std::size_t branches = 0;
  std::uint64_t nodes = 0;
};

// Sat results carry a witness that has been model-checked against every input.
SatResult DecideSat(std::span<const C1Formula> formulas,
                    const SolverOptions& options = {});
// Unary atoms only; relational atoms raise InputError.
SatResult DecideSat(std::span<const CountingAtom> atoms,
                    const SolverOptions& options = {});

enum class EntailStatus { kValid, kInvalid, kUnknown };
std::string_view EntailStatusName(EntailStatus s);

struct EntailResult {
  EntailStatus status = EntailStatus::kUnknown;
  // Decision for premises plus the dual of the conclusion; a Sat witness is a
  // countermodel.
  SatResult check;
};

EntailResult Entails(std::span<const CountingAtom> premises,
                     const CountingAtom& conclusion,
                     const SolverOptions& options = {});
// Conclusion must be closed.
EntailResult Entails(std::span<const C1Formula> premises, const C1Formula& conclusion,
                     const SolverOptions& options = {});

}  // namespace numsyl

#endif  // NUMSYL_C1_SOLVER_HPP_
