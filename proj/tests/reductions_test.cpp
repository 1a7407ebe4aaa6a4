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


#include "numsyl/reductions.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "numsyl/c1_solver.hpp"
#include "numsyl/error.hpp"
#include "oracles.hpp"

namespace numsyl {
namespace {

std::string Slurp(const std::string& name) {
  std::ifstream in(std::string(NUMSYL_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TilingSystem FullSystem(std::size_t colours) {
  TilingSystem ts;
  for (std::size_t c = 0; c < colours; ++c) ts.colours.push_back("k" + std::to_string(c));
  for (std::size_t a = 0; a < colours; ++a) {
    for (std::size_t b = 0; b < colours; ++b) {
      ts.horizontal.insert({a, b});
      ts.vertical.insert({a, b});
    }
  }
  return ts;
}

TEST(GraphTest, NamedAndParsed) {
  EXPECT_EQ(NamedGraph("k4").edges.size(), 6U);
  EXPECT_EQ(NamedGraph("c5").edges.size(), 5U);
  EXPECT_TRUE(NamedGraph("e3").edges.empty());
  EXPECT_THROW(NamedGraph("x3"), InputError);
  const Graph g = CycleGraph(5);
  EXPECT_EQ(ParseGraph(FormatGraph(g)), g);
  EXPECT_THROW(ParseGraph("p edge 2 1\ne 1 1\n"), InputError);
  EXPECT_THROW(ParseGraph("e 1 2\n"), InputError);
}

TEST(ThreeColTest, TriangleEncodingSize) {
  EXPECT_EQ(Encode3Col(CompleteGraph(3)).size(), 1U + 9U + 9U + 9U);
}

TEST(ThreeColTest, ProofWitnessForTriangle) {
  const Graph k3 = CompleteGraph(3);
  const FiniteStructure w = ColouringWitness(k3, {0, 1, 2});
  EXPECT_EQ(w.domain_size(), 3U);
  for (const auto& a : Encode3Col(k3)) {
    EXPECT_TRUE(Evaluate(w, a)) << a.str();
    EXPECT_TRUE(testing::LoopEvaluate(w, a)) << a.str();
  }
  EXPECT_TRUE(IsProperColouring(k3, Decode3Col(w, k3)));
  EXPECT_THROW(ColouringWitness(k3, {0, 0, 1}), InputError);
}

TEST(ThreeColTest, DecodeRejectsNonModels) {
  const Graph k3 = CompleteGraph(3);
  FiniteStructure w(3);
  EXPECT_THROW(Decode3Col(w, k3), InputError);
}

TEST(ThreeColTest, SmallGraphVerdicts) {
  EXPECT_EQ(DecideSat(Encode3Col(CompleteGraph(4))).status, SatStatus::kUnsat);
  EXPECT_EQ(DecideSat(Encode3Col(MakeGraph(1, {}))).status, SatStatus::kSat);
  EXPECT_EQ(DecideSat(Encode3Col(CycleGraph(5))).status, SatStatus::kSat);
}

TEST(ThreeColTest, BruteForceOracle) {
  EXPECT_TRUE(Brute3Col(CompleteGraph(3)).has_value());
  EXPECT_FALSE(Brute3Col(CompleteGraph(4)).has_value());
  const auto empty = Brute3Col(MakeGraph(4, {}));
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(*empty, Colouring(4, 0));
  EXPECT_THROW(Brute3Col(MakeGraph(13, {})), CapExceeded);
  testing::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testing::RandomGraph(rng, static_cast<std::size_t>(testing::Uniform(rng, 1, 8)), 0.5);
    EXPECT_EQ(Brute3Col(g).has_value(), testing::BruteColourable(g.n, g.edges));
  }
}

TEST(ThreeColTest, RandomRoundTrips) {
  testing::Rng rng(52);
  for (int i = 0; i < 25; ++i) {
    const Graph g = testing::RandomGraph(rng, static_cast<std::size_t>(testing::Uniform(rng, 2, 7)), 0.45);
    const SatResult r = DecideSat(Encode3Col(g));
    ASSERT_EQ(r.status == SatStatus::kSat, testing::BruteColourable(g.n, g.edges));
    if (r.witness) EXPECT_TRUE(IsProperColouring(g, Decode3Col(*r.witness, g)));
  }
}

TEST(TilingTest, SystemFileRoundTrip) {
  const TilingSystem ts = ParseTilingSystem(Slurp("tiling-stripes.txt"));
  ASSERT_EQ(ts.colours.size(), 2U);
  EXPECT_EQ(ts.horizontal.size(), 2U);
  const TilingSystem again = ParseTilingSystem(FormatTilingSystem(ts));
  EXPECT_EQ(again.colours, ts.colours);
  EXPECT_EQ(again.horizontal, ts.horizontal);
  EXPECT_EQ(again.vertical, ts.vertical);
  EXPECT_THROW(ParseTilingSystem("colours: a\nH: (a,z)\n"), InputError);
}

TEST(TilingTest, EncodingSizesAtSmallestGrid) {
  const TilingSystem ts = FullSystem(2);
  const TilingEncoding enc = EncodeTiling(ts, {0}, 1);
  EXPECT_EQ(enc.grid_size, 2U);
  EXPECT_EQ(enc.notebook, 6U);
  EXPECT_EQ(enc.clauses, 4U);
  EXPECT_EQ(enc.witness_domain(), 2U * 4U + 2U * 6U);
  EXPECT_THROW(EncodeTiling(ts, {0, 1, 0}, 1), InputError);
  EXPECT_THROW(EncodeTiling(ts, {5}, 1), InputError);
}

TEST(TilingTest, WitnessModelChecks) {
  const TilingSystem ts = FullSystem(2);
  const Tiling t{2, {0, 1, 1, 0}};
  const FiniteStructure w = TilingWitness(ts, t, {0}, 1);
  EXPECT_EQ(w.domain_size(), 20U);
  for (const auto& a : EncodeTiling(ts, {0}, 1).atoms) {
    ASSERT_TRUE(testing::LoopEvaluate(w, a)) << a.str();
  }
  // Colours partition o.
  for (std::size_t e : w.unary("o").elements()) {
    int hits = 0;
    for (const auto& c : ts.colours) hits += w.unary("c_" + c).contains(e);
    EXPECT_EQ(hits, 1) << e;
  }
  // Horizontal successor is a permutation of the grid.
  std::set<std::size_t> targets;
  for (std::size_t e : w.unary("q").elements()) {
    const auto succ = (w.successors("h")[e] & w.unary("q")).elements();
    ASSERT_EQ(succ.size(), 1U);
    targets.insert(succ[0]);
  }
  EXPECT_EQ(targets.size(), 4U);
  EXPECT_EQ(DecodeTiling(w, ts, {0}, 1), t);
}

TEST(TilingTest, RejectsCollidingCoordinates) {
  const TilingSystem ts = FullSystem(1);
  const Tiling t{2, {0, 0, 0, 0}};
  FiniteStructure w = TilingWitness(ts, t, {0}, 1);
  const auto grid = w.unary("q").elements();
  // Copy every unary membership of one grid element onto another.
  FiniteStructure bad(w.domain_size());
  for (const auto& [name, set] : w.unary_extensions()) {
    bad.DeclareUnary(name);
    for (std::size_t e : set.elements()) {
      if (e != grid[1]) bad.AddToUnary(name, e);
    }
    if (set.contains(grid[0])) bad.AddToUnary(name, grid[1]);
  }
  for (const auto& [name, succ] : w.binary_extensions()) {
    bad.DeclareBinary(name);
    for (std::size_t e = 0; e < succ.size(); ++e) {
      for (std::size_t f : succ[e].elements()) bad.AddPair(name, e, f);
    }
  }
  EXPECT_THROW(DecodeTiling(bad, ts, {0}, 1), InputError);
}

TEST(TilingTest, PlantedTilingsRoundTrip) {
  testing::Rng rng(53);
  for (int i = 0; i < 10; ++i) {
    const auto [ts, t] = testing::PlantedTiling(rng, static_cast<std::size_t>(testing::Uniform(rng, 1, 3)), 2);
    ASSERT_TRUE(IsValidTiling(ts, t));
    const std::vector<std::size_t> init{t.at(0, 0)};
    const FiniteStructure w = TilingWitness(ts, t, init, 1);
    for (const auto& a : EncodeTiling(ts, init, 1).atoms) ASSERT_TRUE(Evaluate(w, a)) << a.str();
    EXPECT_EQ(DecodeTiling(w, ts, init, 1), t);
  }
}

TEST(BruteTilingTest, TrivialSystems) {
  const TilingSystem one = FullSystem(1);
  const auto r = BruteTiling(one, 2, {0});
  ASSERT_TRUE(r.tiling.has_value());
  EXPECT_EQ(r.tiling->grid, std::vector<std::size_t>(4, 0));
  TilingSystem none = one;
  none.horizontal.clear();
  EXPECT_FALSE(BruteTiling(none, 2, {0}).tiling.has_value());
  const TilingSystem stripes = ParseTilingSystem(Slurp("tiling-stripes.txt"));
  const auto s = BruteTiling(stripes, 2, {0});
  ASSERT_TRUE(s.tiling.has_value());
  EXPECT_TRUE(IsValidTiling(stripes, *s.tiling));
  EXPECT_TRUE(HasInitialRow(*s.tiling, {0}));
}

}  // namespace
}  // namespace numsyl
