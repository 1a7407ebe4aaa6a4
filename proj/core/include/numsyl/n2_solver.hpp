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

#ifndef NUMSYL_N2_SOLVER_HPP_
#define NUMSYL_N2_SOLVER_HPP_

// Finite-model tooling for unary and relational counting atoms: the cell
// shrink, its size bound, and an exhaustive finder for tiny instances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsyl/logic.hpp"

namespace numsyl {

// L * (C * |phi| + 1) with L = 2^l over the unary predicates of phi and C the
// largest bound (inner bounds included; 0 when phi is empty). Throws
// CapExceeded when the value does not fit in 64 bits.
std::uint64_t SizeBound(std::span<const CountingAtom> phi);

struct CellCount {
  std::uint64_t type = 0;  // over ShrinkReport::predicates
  std::size_t original = 0;
  std::size_t kept = 0;
};

struct ShrinkReport {
  std::size_t input_size = 0;
  FiniteStructure output;
  std::vector<std::string> predicates;
  std::vector<CellCount> cells;  // nonempty cells, by type
  std::int64_t cell_cap = 0;     // C * |phi| + 1
  // Original indices: retained[k] is output element k.
  std::vector<std::size_t> retained;
  // Witness elements kept for the at-least atoms, original indices, sorted.
  std::vector<std::size_t> witnesses;
};

// Requires s to satisfy every atom of phi (InputError otherwise). The
// output satisfies phi and has at most SizeBound(phi) elements.
ShrinkReport ShrinkModel(const FiniteStructure& s, std::span<const CountingAtom> phi);

enum class SearchStatus { kFound, kNoModel, kUnknown };
std::string_view SearchStatusName(SearchStatus s);

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  std::size_t min_domain = 1;
  std::size_t max_predicates = 16;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::optional<FiniteStructure> model;
  std::uint64_t nodes = 0;
};

// Smallest model with min_domain <= size <= domain_cap, or kNoModel when no
// such model exists. kUnknown when the node budget runs out first.
SearchResult BoundedSearch(std::span<const CountingAtom> phi, std::size_t domain_cap,
                           const SearchOptions& options = {});

}  // namespace numsyl

#endif  // NUMSYL_N2_SOLVER_HPP_
