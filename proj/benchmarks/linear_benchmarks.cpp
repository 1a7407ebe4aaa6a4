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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "numsyl/ilp.hpp"
#include "numsyl/linear_system.hpp"
#include "numsyl/simplex.hpp"
#include "numsyl/sparsify.hpp"

namespace numsyl {
namespace {

struct Planted {
  LinearSystem system;
  NaturalVector solution;
};

// Random 0/1 rows with a planted natural solution.
Planted MakePlanted(std::size_t m, std::size_t l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<std::int64_t> val(0, 3);
  Planted p{LinearSystem(l), NaturalVector(l)};
  for (auto& x : p.solution) x = val(rng);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(l);
    std::int64_t rhs = 0;
    for (std::size_t j = 0; j < l; ++j) {
      const int b = bit(rng);
      row[j] = b;
      rhs += b * p.solution[j];
    }
    p.system.AddDenseRow(row, Relation::kEqual, rhs);
  }
  return p;
}

void BM_SparsifyNatural(benchmark::State& state) {
  const Planted p = MakePlanted(static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(SparsifyNatural(p.system, p.solution));
}
BENCHMARK(BM_SparsifyNatural)->Args({2, 12})->Args({4, 24})->Args({6, 48});

void BM_SparsifyRational(benchmark::State& state) {
  const Planted p = MakePlanted(static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(1)), 2);
  const RationalVector x = ToRational(p.solution);
  for (auto _ : state) benchmark::DoNotOptimize(SparsifyRational(p.system, x));
}
BENCHMARK(BM_SparsifyRational)->Args({2, 12})->Args({6, 48})->Args({12, 96});

void BM_LpFeasible(benchmark::State& state) {
  const Planted p = MakePlanted(static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(LpFeasible(p.system).has_value());
}
BENCHMARK(BM_LpFeasible)->Args({6, 48})->Args({20, 200});

void BM_IlpLemmaFour(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const LinearSystem sys = ManyNonzerosInstance(m);
  const std::vector<std::int64_t> upper(m + 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(IlpSolve(sys, upper).status);
}
BENCHMARK(BM_IlpLemmaFour)->Arg(6)->Arg(12)->Arg(24);

void BM_EnumerateLemmaFour(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const LinearSystem sys = ManyNonzerosInstance(m);
  const std::vector<std::int64_t> upper(m + 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateSolutions(sys, upper).size());
}
BENCHMARK(BM_EnumerateLemmaFour)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace numsyl

BENCHMARK_MAIN();
