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

#include <string>
#include <vector>

#include "numsyl/c1_solver.hpp"
#include "numsyl/n2_solver.hpp"
#include "numsyl/parser.hpp"
#include "numsyl/psat.hpp"
#include "numsyl/reductions.hpp"
#include "numsyl/syllogism.hpp"

namespace numsyl {
namespace {

void BM_ThreeColCycle(benchmark::State& state) {
  const auto atoms = Encode3Col(CycleGraph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(DecideSat(atoms).status);
  state.SetLabel(std::to_string(atoms.size()) + " atoms");
}
BENCHMARK(BM_ThreeColCycle)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ThreeColComplete(benchmark::State& state) {
  const auto atoms = Encode3Col(CompleteGraph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(DecideSat(atoms).status);
}
BENCHMARK(BM_ThreeColComplete)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClaimOneEntailment(benchmark::State& state) {
  const IncompletenessInstance inst = MakeIncompletenessInstance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& g : inst.goals) benchmark::DoNotOptimize(Entails(inst.phi, g).status);
  }
}
BENCHMARK(BM_ClaimOneEntailment)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SaturateIncompleteness(benchmark::State& state) {
  const IncompletenessInstance inst = MakeIncompletenessInstance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BoundTable table(inst.phi);
    benchmark::DoNotOptimize(table.Saturate());
  }
}
BENCHMARK(BM_SaturateIncompleteness)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ArgumentOneDerivation(benchmark::State& state) {
  const std::vector<CountingAtom> phi{ParseAtom(">=13 (artist & beekeeper)"),
                                      ParseAtom("<=3 (beekeeper & carpenter)"),
                                      ParseAtom("<=4 (dentist & !carpenter)")};
  const CountingAtom goal = ParseAtom(">=6 (artist & !dentist)");
  for (auto _ : state) benchmark::DoNotOptimize(Derives(phi, goal).status);
}
BENCHMARK(BM_ArgumentOneDerivation);

void BM_ShrinkChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FiniteStructure s(n);
  s.DeclareUnary("p");
  s.DeclareUnary("q");
  s.DeclareBinary("r");
  for (std::size_t e = 0; e < n; ++e) {
    s.AddToUnary("p", e);
    s.AddToUnary("q", e);
    s.AddPair("r", e, (e + 1) % n);
  }
  const std::vector<CountingAtom> phi{ParseAtom(">=1 p [r >=1 q]")};
  for (auto _ : state) benchmark::DoNotOptimize(ShrinkModel(s, phi).output.domain_size());
}
BENCHMARK(BM_ShrinkChain)->Arg(100)->Arg(1000);

void BM_BoundedSearchNoModel(benchmark::State& state) {
  const std::vector<CountingAtom> phi{ParseAtom(">=2 p [r >=1 q]"), ParseAtom("<=1 (p & p)"),
                                      ParseAtom("<=0 (q & q)")};
  const auto cap = SizeBound(phi);
  for (auto _ : state) benchmark::DoNotOptimize(BoundedSearch(phi, cap).status);
}
BENCHMARK(BM_BoundedSearchNoModel);

void BM_CounterexampleAssignment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(CounterexampleAssignment(static_cast<std::size_t>(state.range(0))).zero_index);
  }
}
BENCHMARK(BM_CounterexampleAssignment)->Arg(6)->Arg(10);

void BM_PsatChain(benchmark::State& state) {
  // p1 = 1/2, and each p_{i+1} | !p_i holds surely.
  std::string text = "p0 ; 1/2\n";
  for (int i = 0; i + 1 < state.range(0); ++i) {
    text += "p" + std::to_string(i + 1) + " | !p" + std::to_string(i) + " ; 1\n";
  }
  const auto constraints = ParsePsat(text);
  for (auto _ : state) benchmark::DoNotOptimize(PsatDecide(constraints).satisfiable);
}
BENCHMARK(BM_PsatChain)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace numsyl
