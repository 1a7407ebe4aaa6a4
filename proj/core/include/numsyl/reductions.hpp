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

#ifndef NUMSYL_REDUCTIONS_HPP_
#define NUMSYL_REDUCTIONS_HPP_

// Instance generators with witnesses, decoders and brute-force oracles:
// graph 3-colouring into unary counting atoms, and exponential tiling into
// relational ones.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numsyl/logic.hpp"

namespace numsyl {

// Undirected simple graph on nodes 1..n; edges stored as (i, j), i < j,
// sorted and unique.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const Graph&, const Graph&) = default;
};

// Validates and normalizes. Throws InputError on loops or out-of-range nodes.
Graph MakeGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);
Graph CompleteGraph(std::size_t n);
Graph CycleGraph(std::size_t n);
// "k<n>", "c<n>" or "e<n>" (no edges).
Graph NamedGraph(std::string_view name);
// DIMACS-like: "p edge n m" then "e i j" lines; 'c' lines are comments.
Graph ParseGraph(std::string_view text);
std::string FormatGraph(const Graph& g);

// Colour (0, 1 or 2) of node i at index i-1.
using Colouring = std::vector<int>;

bool IsProperColouring(const Graph& g, const Colouring& c);
std::string ColourPredicate(std::size_t node, int colour);

// The atoms "at most 3 p", colour disjointness, cover and edge constraints.
std::vector<CountingAtom> Encode3Col(const Graph& g);
// Three elements, all p; node i has colour k at element (k + c(i)) mod 3.
FiniteStructure ColouringWitness(const Graph& g, const Colouring& c);
// Reads the colouring off the least p element. Throws InputError when s is
// not a model of Encode3Col(g).
Colouring Decode3Col(const FiniteStructure& s, const Graph& g);
// Exhaustive, first in lexicographic order. CapExceeded past 12 nodes.
std::optional<Colouring> Brute3Col(const Graph& g);

struct TilingSystem {
  std::vector<std::string> colours;
  std::set<std::pair<std::size_t, std::size_t>> horizontal;
  std::set<std::pair<std::size_t, std::size_t>> vertical;
};

// Lines "colours: a b c", "H: (a,b) (b,c)", "V: ..."; '#' comments.
TilingSystem ParseTilingSystem(std::string_view text);
std::string FormatTilingSystem(const TilingSystem& ts);

struct Tiling {
  std::size_t size = 0;
  std::vector<std::size_t> grid;  // colour index of (x, y) at y * size + x
  std::size_t at(std::size_t x, std::size_t y) const { return grid[y * size + x]; }
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

bool IsValidTiling(const TilingSystem& ts, const Tiling& t);
bool HasInitialRow(const Tiling& t, const std::vector<std::size_t>& init);

struct TilingEncoding {
  std::size_t exponent = 0;   // k, grid side 2^k
  std::size_t grid_size = 0;  // N
  std::size_t notebook = 0;   // s = 2(k^2 + k + 1)
  std::size_t colours = 0;    // M
  std::size_t clauses = 0;    // |Gamma|, one gadget each
  std::vector<CountingAtom> atoms;
  // Atoms contributed by each of the eight groups, in emission order.
  std::array<std::size_t, 8> group_sizes{};
  // M * N^2 + 2s: grid, notebook and dump.
  std::size_t witness_domain() const;
};

// Throws InputError when init is longer than 2^k, k is 0 or above 16, or
// init mentions an unknown colour.
TilingEncoding EncodeTiling(const TilingSystem& ts, const std::vector<std::size_t>& init,
                            std::size_t k);
// Throws InputError when t is invalid, of the wrong size, or disagrees with
// init.
FiniteStructure TilingWitness(const TilingSystem& ts, const Tiling& t,
                              const std::vector<std::size_t>& init, std::size_t k);
// Throws InputError when s is not a model of EncodeTiling(ts, init, k).
Tiling DecodeTiling(const FiniteStructure& s, const TilingSystem& ts,
                    const std::vector<std::size_t>& init, std::size_t k);

struct BruteTilingResult {
  std::optional<Tiling> tiling;
  bool exhausted = false;  // budget ran out before a verdict
  std::uint64_t nodes = 0;
};

BruteTilingResult BruteTiling(const TilingSystem& ts, std::size_t size,
                              const std::vector<std::size_t>& init,
                              std::uint64_t node_budget = 10'000'000);

}  // namespace numsyl

#endif  // NUMSYL_REDUCTIONS_HPP_
