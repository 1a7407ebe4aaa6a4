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

#ifndef NUMSYL_SPARSIFY_HPP_
#define NUMSYL_SPARSIFY_HPP_

// Support reduction for nonnegative solutions of equation systems.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "numsyl/linear_system.hpp"

namespace numsyl {

struct SparsifyStats {
  std::size_t steps = 0;
  std::size_t initial_support = 0;
  std::size_t final_support = 0;
};

// Given x >= 0 with A x = c, returns y >= 0 with A y = c whose support is a
// linearly independent column set (hence at most m entries) and is contained
// in the support of x. Each step moves along a kernel vector supported on the
// current support, taken from the first free column of the reduced row echelon
// form, by the smaller-magnitude of the two extremal steps (positive on ties).
// Throws InputError when x is not a nonnegative solution or a row is not an
// equation.
RationalVector SparsifyRational(const LinearSystem& sys,
                                std::span<const Rational> x,
                                SparsifyStats* stats = nullptr);

// ceil(m * log2(L + 1)), computed exactly.
std::size_t NaturalSupportBound(std::size_t m, std::size_t num_vars);

// Given a natural solution of a Boolean equation system, returns a natural
// solution with at most NaturalSupportBound(m, L) nonzero entries. While the
// support is too large, two distinct subsets I, I' of the support with equal
// column sums are found (identical columns first, then subsets in increasing
// size order via hashing); with J = I \ I' and J' = I' \ I, the entries on J
// are decremented and those on J' incremented until some entry of J reaches
// zero. Each exchange is re-checked exactly.
NaturalVector SparsifyNatural(const LinearSystem& sys,
                              std::span<const std::int64_t> x,
                              SparsifyStats* stats = nullptr);

// True iff x has at most (5/2) m log2(m) + 1 nonzero entries (m = row count;
// for m = 1 the bound is 1).
bool CheckProp2Bound(const LinearSystem& sys, std::span<const std::int64_t> x);

// A natural solution in the box [0, upper] with the fewest nonzero entries
// (lexicographically least among those), by exhaustive enumeration.
std::optional<NaturalVector> MinimalSupportSolution(
    const LinearSystem& sys, std::span<const std::int64_t> upper,
    std::uint64_t volume_cap = 10'000'000);

}  // namespace numsyl

#endif  // NUMSYL_SPARSIFY_HPP_
