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


#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "generators.hpp"
#include "numsyl/error.hpp"
#include "numsyl/ilp.hpp"
#include "numsyl/linear_system.hpp"
#include "numsyl/simplex.hpp"
#include "numsyl/sparsify.hpp"
#include "oracles.hpp"

namespace numsyl {
namespace {

LinearSystem Dense(const std::vector<std::vector<std::int64_t>>& a,
                   const std::vector<std::int64_t>& c, Relation rel = Relation::kEqual) {
  LinearSystem sys(a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const RationalVector row = ToRational(a[i]);
    sys.AddDenseRow(row, rel, Rational(c[i]));
  }
  return sys;
}

std::vector<mpq_class> Raw(const RationalVector& v) {
  std::vector<mpq_class> out;
  for (const auto& r : v) out.push_back(r.raw());
  return out;
}

TEST(LinearSystemTest, TextRoundTrip) {
  const LinearSystem sys = ParseLinearSystem("# demo\n2 3\n1 0 1/2 = 3\n0 -1 1 >= 0\n");
  EXPECT_EQ(sys.num_rows(), 2U);
  EXPECT_EQ(sys.coefficient(0, 2), Rational(BigInt(1), BigInt(2)));
  EXPECT_FALSE(sys.is_boolean());
  const LinearSystem again = ParseLinearSystem(FormatLinearSystem(sys));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(again.coefficient(i, j), sys.coefficient(i, j));
    EXPECT_EQ(again.row(i).relation, sys.row(i).relation);
    EXPECT_EQ(again.row(i).rhs, sys.row(i).rhs);
  }
  EXPECT_THROW(ParseLinearSystem("1 2\n1 1\n"), InputError);
}

TEST(LinearSystemTest, BooleanFlagMatchesEntries) {
  EXPECT_TRUE(Dense({{1, 0, 1}}, {2}).is_boolean());
  EXPECT_FALSE(Dense({{1, 2, 1}}, {2}).is_boolean());
  EXPECT_FALSE(Dense({{1, 1, 1}}, {-1}).is_boolean());
}

TEST(LpTest, FeasibleAndInfeasible) {
  const LinearSystem one = Dense({{1, 1}}, {1});
  const auto x = LpFeasible(one);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(one.IsSolution(*x));
  EXPECT_FALSE(LpFeasible(Dense({{1}, {1}}, {1, 2})).has_value());
  const LinearSystem lemma = ManyNonzerosInstance(6);
  const auto y = LpFeasible(lemma);
  ASSERT_TRUE(y.has_value());
  EXPECT_TRUE(lemma.IsSolution(*y));
  for (const auto& v : *y) EXPECT_GE(v.sign(), 0);
}

TEST(LpTest, AgreesWithIntegerBoxOnRandomSystems) {
  // A planted natural solution is also rational; LP must find a point.
  testing::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto ps = testing::RandomBooleanSystem(rng, static_cast<std::size_t>(testing::Uniform(rng, 1, 5)),
                                                 static_cast<std::size_t>(testing::Uniform(rng, 1, 8)), 3);
    const auto x = LpFeasible(ps.system);
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(testing::Resolves(ps.system, Raw(*x)));
  }
}

TEST(LemmaFourTest, MatrixShape) {
  const LinearSystem sys = ManyNonzerosInstance(6);
  ASSERT_EQ(sys.num_rows(), 6U);
  ASSERT_EQ(sys.num_vars(), 7U);
  const std::vector<int> first{1, 1, 1, 0, 0, 0, 0};
  const std::vector<int> last{1, 1, 0, 1, 0, 0, 1};
  for (std::size_t j = 0; j < 7; ++j) {
    EXPECT_EQ(sys.coefficient(0, j), Rational(first[j]));
    EXPECT_EQ(sys.coefficient(5, j), Rational(last[j]));
  }
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(sys.row(i).rhs, Rational(i < 5 ? 3 : 4));
  EXPECT_TRUE(sys.is_boolean());
  EXPECT_THROW(ManyNonzerosInstance(5), InputError);
}

TEST(LemmaFourTest, UniqueNaturalSolution) {
  for (std::size_t m : {6U, 7U}) {
    const LinearSystem sys = ManyNonzerosInstance(m);
    const std::vector<std::int64_t> upper(m + 1, 4);
    const auto sols = EnumerateSolutions(sys, upper);
    ASSERT_EQ(sols.size(), 1U);
    EXPECT_EQ(sols[0], NaturalVector(m + 1, 1));
    const IlpResult r = IlpSolve(sys, upper);
    ASSERT_EQ(r.status, SolveStatus::kFeasible);
    EXPECT_EQ(r.solution, NaturalVector(m + 1, 1));
  }
}

TEST(EnumerateTest, SmallBoxes) {
  const std::vector<std::int64_t> box{2, 2};
  const auto sols = EnumerateSolutions(Dense({{1, 1}}, {2}), box);
  EXPECT_EQ(sols, (std::vector<NaturalVector>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_TRUE(EnumerateSolutions(Dense({{1, 1}}, {5}), box).empty());
  const std::vector<std::int64_t> huge(10, 9);
  EXPECT_THROW(EnumerateSolutions(Dense({std::vector<std::int64_t>(10, 1)}, {3}), huge, 1000),
               CapExceeded);
}

TEST(EnumerateTest, AgreesWithBoxOracle) {
  testing::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const auto m = static_cast<std::size_t>(testing::Uniform(rng, 1, 3));
    const auto l = static_cast<std::size_t>(testing::Uniform(rng, 1, 4));
    const auto ps = testing::RandomBooleanSystem(rng, m, l, 2);
    std::vector<std::vector<std::int64_t>> dense(m, std::vector<std::int64_t>(l));
    std::vector<std::int64_t> c(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < l; ++j) dense[r][j] = ps.system.coefficient(r, j).to_int64();
      c[r] = ps.system.row(r).rhs.to_int64();
    }
    const std::vector<std::int64_t> upper(l, 3);
    EXPECT_EQ(EnumerateSolutions(ps.system, upper), testing::BoxSolutions(dense, c, 3));
  }
}

TEST(IlpTest, SmallCases) {
  const LinearSystem sys = Dense({{1, 1}, {1, -1}}, {3, 1});
  const std::vector<std::int64_t> upper{3, 3};
  const IlpResult r = IlpSolve(sys, upper);
  ASSERT_EQ(r.status, SolveStatus::kFeasible);
  EXPECT_EQ(r.solution, (NaturalVector{2, 1}));
  const IlpResult none = IlpSolve(Dense({{0, 0}}, {1}), upper);
  EXPECT_EQ(none.status, SolveStatus::kInfeasible);
  // 2x = 1 has rational but no integer solutions.
  const std::vector<std::int64_t> one{5};
  EXPECT_EQ(IlpSolve(Dense({{2}}, {1}), one).status, SolveStatus::kInfeasible);
}

TEST(IlpTest, PlantedSystemsAreFeasible) {
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto ps = testing::RandomBooleanSystem(rng, static_cast<std::size_t>(testing::Uniform(rng, 1, 6)),
                                                 static_cast<std::size_t>(testing::Uniform(rng, 1, 10)), 3);
    const std::vector<std::int64_t> upper(ps.solution.size(), 40);
    const IlpResult r = IlpSolve(ps.system, upper);
    ASSERT_EQ(r.status, SolveStatus::kFeasible);
    EXPECT_TRUE(ps.system.IsSolution(std::span<const std::int64_t>(r.solution)));
  }
}

TEST(SparsifyTest, RationalSingleRow) {
  const LinearSystem sys = Dense({{1, 1, 1}}, {3});
  const RationalVector x = ToRational(NaturalVector{1, 1, 1});
  const RationalVector y = SparsifyRational(sys, x);
  EXPECT_TRUE(sys.IsSolution(y));
  EXPECT_LE(CountNonzeros(y), 1U);
}

TEST(SparsifyTest, RationalAlreadySparseIsKept) {
  const LinearSystem sys = Dense({{1, 1, 1}, {0, 1, 1}}, {3, 1});
  const RationalVector x = ToRational(NaturalVector{2, 1, 0});
  SparsifyStats stats;
  const RationalVector y = SparsifyRational(sys, x, &stats);
  EXPECT_EQ(CountNonzeros(y), 2U);
  EXPECT_EQ(stats.steps, 0U);
}

TEST(SparsifyTest, RationalLemmaFourLeavesAZero) {
  const LinearSystem sys = ManyNonzerosInstance(6);
  const RationalVector y = SparsifyRational(sys, ToRational(NaturalVector(7, 1)));
  EXPECT_TRUE(sys.IsSolution(y));
  EXPECT_LE(CountNonzeros(y), 6U);
  EXPECT_TRUE(std::any_of(y.begin(), y.end(), [](const Rational& v) { return v.is_zero(); }));
}

TEST(SparsifyTest, NaturalBound) {
  EXPECT_EQ(NaturalSupportBound(1, 7), 3U);
  EXPECT_EQ(NaturalSupportBound(1, 1), 1U);
  EXPECT_EQ(NaturalSupportBound(2, 3), 4U);
  EXPECT_EQ(NaturalSupportBound(3, 12), 12U);  // 13^3 = 2197 <= 2^12
  const LinearSystem sys = Dense({std::vector<std::int64_t>(7, 1)}, {7});
  const NaturalVector y = SparsifyNatural(sys, NaturalVector(7, 1));
  EXPECT_TRUE(sys.IsSolution(std::span<const std::int64_t>(y)));
  EXPECT_LE(CountNonzeros(y), 3U);
  const NaturalVector sparse{7, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(SparsifyNatural(sys, sparse), sparse);
}

TEST(SparsifyTest, NaturalRejectsNonBoolean) {
  EXPECT_THROW(SparsifyNatural(Dense({{2, 1}}, {3}), NaturalVector{1, 1}), InputError);
}

TEST(SparsifyTest, PropTwoBound) {
  const LinearSystem one = Dense({{1, 1, 1}}, {3});
  EXPECT_TRUE(CheckProp2Bound(one, NaturalVector{3, 0, 0}));
  EXPECT_FALSE(CheckProp2Bound(one, NaturalVector{1, 1, 1}));
  testing::Rng rng(24);
  for (int i = 0; i < 30; ++i) {
    const auto ps = testing::RandomBooleanSystem(rng, 2, static_cast<std::size_t>(testing::Uniform(rng, 2, 8)), 2);
    const std::vector<std::int64_t> upper(ps.solution.size(), 4);
    const auto best = MinimalSupportSolution(ps.system, upper);
    ASSERT_TRUE(best.has_value());
    EXPECT_LE(CountNonzeros(*best), 6U);
    EXPECT_TRUE(CheckProp2Bound(ps.system, *best));
  }
}

TEST(SparsifyTest, RandomHarness) {
  testing::Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::size_t>(testing::Uniform(rng, 1, 6));
    const auto l = static_cast<std::size_t>(testing::Uniform(rng, 1, 12));
    const auto ps = testing::RandomBooleanSystem(rng, m, l, 3);
    const NaturalVector y = SparsifyNatural(ps.system, ps.solution);
    ASSERT_TRUE(ps.system.IsSolution(std::span<const std::int64_t>(y)));
    ASSERT_LE(CountNonzeros(y), NaturalSupportBound(m, l));
    const RationalVector z = SparsifyRational(ps.system, ToRational(ps.solution));
    ASSERT_TRUE(ps.system.IsSolution(z));
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (!z[j].is_zero()) support.push_back(j);
    }
    ASSERT_LE(support.size(), m);
    EXPECT_EQ(testing::ColumnRank(ps.system, support), support.size());
    if (m >= 6) EXPECT_TRUE(CheckProp2Bound(ps.system, y));
  }
}

}  // namespace
}  // namespace numsyl
