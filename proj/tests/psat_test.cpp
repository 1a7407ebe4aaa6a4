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


#include "numsyl/psat.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "generators.hpp"
#include "numsyl/error.hpp"
#include "numsyl/parser.hpp"
#include "numsyl/syllogism.hpp"
#include "oracles.hpp"

namespace numsyl {
namespace {

Rational Q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

TEST(ProbabilityTest, FlatTwoWorlds) {
  const ProbabilityAssignment p({"p"}, {{0, Q(1, 2)}, {1, Q(1, 2)}});
  EXPECT_EQ(p.Prob(C1Formula::Atom("p")), Q(1, 2));
  const auto phi = ParseFormula("<=0 (p & q)").body();
  EXPECT_THROW(p.Prob(phi), InputError);  // q is not a letter
}

TEST(ProbabilityTest, ExcludedMiddleHasProbabilityOne) {
  testing::Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    std::vector<World> worlds;
    long total = 0;
    std::vector<long> w(4);
    for (auto& x : w) total += (x = static_cast<long>(testing::Uniform(rng, 1, 9)));
    for (std::uint64_t a = 0; a < 4; ++a) worlds.push_back({a, Q(w[a], total)});
    const ProbabilityAssignment p({"p", "q"}, worlds);
    const auto f = C1Formula::And({C1Formula::Atom("p"), C1Formula::Not(C1Formula::Atom("q"))});
    EXPECT_EQ(p.Prob(C1Formula::Or({f, C1Formula::Not(f)})), Rational(1));
    EXPECT_EQ(p.Prob({"p", true}, {"q", false}).raw(),
              testing::PairProbability(p, {"p", true}, {"q", false}));
  }
}

TEST(ProbabilityTest, WeightsMustSumToOne) {
  EXPECT_THROW(ProbabilityAssignment({"p"}, {{0, Q(1, 3)}, {1, Q(1, 3)}}), InputError);
  EXPECT_THROW(ProbabilityAssignment({"p"}, {{0, Q(3, 2)}, {1, Q(-1, 2)}}), InputError);
}

TEST(ApproxModelsTest, ThresholdAtScale) {
  const ProbabilityAssignment p({"t", "r"}, {{0b01, Q(1, 2)}, {0b10, Q(1, 2)}}, 10);
  EXPECT_FALSE(ApproxModels(p, ParseAtom(">=1 (t & r)")));
  EXPECT_TRUE(ApproxModels(p, ParseAtom(">=0 (t & r)")));
  EXPECT_TRUE(ApproxModels(p, ParseAtom(">=5 (t & t)")));
  EXPECT_FALSE(ApproxModels(p, ParseAtom("<=4 (t & t)")));
  EXPECT_THROW(ApproxModels(ProbabilityAssignment({"t"}, {{1, Rational(1)}}), ParseAtom(">=0 (t & t)")),
               InputError);
}

TEST(ApproxModelsTest, FlatAssignmentMatchesCounting) {
  testing::Rng rng(72);
  const std::vector<std::string> preds{"p", "q", "s"};
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(testing::Uniform(rng, 1, 12));
    const FiniteStructure s = testing::RandomStructure(rng, n, preds, {}, 0.5);
    const ProbabilityAssignment p = FlatAssignment(s, preds);
    const CountingAtom a = testing::RandomUnaryAtom(rng, preds, 6);
    EXPECT_EQ(ApproxModels(p, a), Evaluate(s, a)) << a.str();
  }
}

TEST(PsatTest, ContradictoryUnitConstraints) {
  const auto c = ParsePsat("p ; 1\n!p ; 1\n");
  EXPECT_FALSE(PsatDecide(c).satisfiable);
}

TEST(PsatTest, OverlapInstance) {
  const auto c = ParsePsat("p | q ; 1\np ; 1/2\nq ; 3/5\n");
  const PsatResult r = PsatDecide(c);
  ASSERT_TRUE(r.satisfiable);
  ASSERT_TRUE(r.assignment.has_value());
  EXPECT_TRUE(CheckPsat(*r.assignment, c));
  EXPECT_EQ(r.assignment->Prob({"p", true}, {"q", true}), Q(1, 10));
}

TEST(PsatTest, ZeroOneInstancesGetAPointMass) {
  const auto c = ParsePsat("p | q ; 1\n!p ; 1\nq | r ; 1\nr ; 0\n");
  const PsatResult r = PsatDecide(c);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_TRUE(CheckPsat(*r.assignment, c));
}

TEST(PsatTest, InequalitiesNeedOptIn) {
  const auto c = ParsePsat("p ; >=1/2\np | q ; <=1/3\n");
  EXPECT_THROW(PsatDecide(c), InputError);
  PsatOptions opts;
  opts.allow_inequalities = true;
  EXPECT_FALSE(PsatDecide(c, opts).satisfiable);
  const auto ok = ParsePsat("p ; >=1/2\nq ; <=1/3\n");
  const PsatResult r = PsatDecide(ok, opts);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_TRUE(CheckPsat(*r.assignment, ok));
}

TEST(PsatTest, TextRoundTrips) {
  const auto c = ParsePsat("# demo\np | !q ; 1/2\nr ; 0\n");
  ASSERT_EQ(c.size(), 2U);
  const auto again = ParsePsat(FormatPsat(c));
  ASSERT_EQ(again.size(), 2U);
  EXPECT_EQ(again[0].clause, c[0].clause);
  EXPECT_EQ(again[0].probability, c[0].probability);
  EXPECT_THROW(ParsePsat("p ; 3/2\n"), InputError);

  const ProbabilityAssignment p({"p", "q"}, {{0b01, Q(1, 3)}, {0b11, Q(2, 3)}}, 6);
  EXPECT_EQ(ParseAssignment(FormatAssignment(p)), p);
}

TEST(PsatTest, RandomPlantedInstances) {
  testing::Rng rng(73);
  const std::vector<std::string> letters{"p", "q", "r"};
  for (int i = 0; i < 50; ++i) {
    std::vector<World> worlds;
    long total = 0;
    std::vector<long> w(8);
    for (auto& x : w) total += (x = static_cast<long>(testing::Uniform(rng, 0, 4)));
    if (total == 0) w[3] = total = 1;
    for (std::uint64_t a = 0; a < 8; ++a) {
      if (w[a] != 0) worlds.push_back({a, Q(w[a], total)});
    }
    const ProbabilityAssignment planted(letters, worlds);
    std::vector<PsatConstraint> c;
    for (int k = 0; k < 4; ++k) {
      PsatConstraint pc;
      for (int j = 0; j < testing::Uniform(rng, 1, 2); ++j) pc.clause.push_back(testing::RandomLiteral(rng, letters));
      std::vector<C1Formula> lits;
      for (const auto& l : pc.clause) lits.push_back(C1Formula::Lit(l));
      pc.probability = planted.Prob(C1Formula::Or(lits));
      c.push_back(pc);
    }
    const PsatResult r = PsatDecide(c);
    ASSERT_TRUE(r.satisfiable);
    EXPECT_TRUE(CheckPsat(*r.assignment, c));
  }
}

TEST(CounterexampleTest, ClaimTwoAssignment) {
  const Counterexample ce = CounterexampleAssignment(6);
  const ProbabilityAssignment& p = ce.assignment;
  ASSERT_EQ(p.scale(), 42);
  EXPECT_EQ(ce.unit, 3);
  EXPECT_EQ(ce.num_worlds, 126U);
  EXPECT_EQ(p.Prob({"t", true}, {"t", true}), Q(1, 2));
  EXPECT_EQ(p.Prob({"r", true}, {"r", true}), Q(1, 2));
  for (int i = 1; i <= 6; ++i) {
    // |S_i & R| is 3u (4u for the last row) out of 42u worlds.
    EXPECT_EQ(p.Prob({"s" + std::to_string(i), true}, {"r", true}), Q(i < 6 ? 3 : 4, 42));
  }
  ASSERT_GE(ce.zero_index, 1U);
  const std::string tj = "t" + std::to_string(ce.zero_index);
  EXPECT_TRUE(p.Prob({tj, true}, {"r", true}).is_zero());
  EXPECT_FALSE(ApproxModels(p, CountingAtom::MakeUnary(Direction::kAtLeast, 1, {tj, true}, {"r", true})));
  const IncompletenessInstance inst = MakeIncompletenessInstance(6);
  for (const auto& a : inst.phi) {
    EXPECT_TRUE(ApproxModels(p, a)) << a.str();
    EXPECT_TRUE(testing::ThresholdHolds(p, 42, a)) << a.str();
  }
  // The cell fractions solve the unique-solution system over the rationals.
  EXPECT_TRUE(inst.matrix.IsSolution(ce.cell_fractions));
  EXPECT_TRUE(ce.cell_fractions[ce.zero_index - 1].is_zero());
}

TEST(CounterexampleTest, RejectsSmallM) {
  EXPECT_THROW(CounterexampleAssignment(5), InputError);
}

}  // namespace
}  // namespace numsyl
