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

// Acceptance run: one PASS/FAIL line per criterion, each under its own
// wall-clock limit. Exits nonzero when any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "generators.hpp"
#include "numsyl/c1_solver.hpp"
#include "numsyl/linear_system.hpp"
#include "numsyl/n2_solver.hpp"
#include "numsyl/parser.hpp"
#include "numsyl/psat.hpp"
#include "numsyl/reductions.hpp"
#include "numsyl/sparsify.hpp"
#include "numsyl/syllogism.hpp"
#include "oracles.hpp"

namespace {

using namespace numsyl;
using namespace numsyl::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run so the detail is useful.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome Finish(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) +
                       " checks failed; first: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

const std::filesystem::path kData = NUMSYL_DATA_DIR;

std::filesystem::path Scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "numsyl-acceptance" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// 1 ------------------------------------------------------------------------
Outcome ArgumentOne() {
  Tally t;
  cli::Options opts;
  opts.lexicon = (kData / "artists.lex").string();
  opts.out_dir = Scratch("arg1").string();
  const cli::Verdict valid = cli::Solve((kData / "argument1.txt").string(), opts);
  t.Expect(valid.status == cli::Status::kValid, "argument is not reported valid");
  t.Expect(!valid.certificates.empty(), "validity verdict cites no certificate");
  for (const auto& cert : valid.certificates) {
    if (cert.ends_with(".sys")) {
      cli::CheckParams p;
      p.system = cert;
      t.Expect(cli::Check(p, opts).status == cli::Status::kUnsat, "certificate system is feasible");
    }
  }

  opts.out_dir = Scratch("arg1-premises").string();
  const cli::Verdict sat = cli::Solve((kData / "argument1-premises.txt").string(), opts);
  t.Expect(sat.status == cli::Status::kSat, "premises are not reported satisfiable");
  const Lexicon lex = ParseLexicon("nouns: artist, beekeeper, carpenter, dentist\n");
  const ArgumentFile premises = ParseEnglish(
      "At least 13 artists are beekeepers\nAt most 3 beekeepers are carpenters\n"
      "At most 4 dentists are not carpenters\n",
      lex);
  bool witness_found = false;
  for (const auto& cert : sat.certificates) {
    if (!cert.ends_with(".struct")) continue;
    witness_found = true;
    std::ifstream in(cert);
    std::stringstream buf;
    buf << in.rdbuf();
    const FiniteStructure w = ParseStructure(buf.str());
    for (const auto& a : premises.premises) t.Expect(LoopEvaluate(w, a), "witness fails " + a.str());
  }
  t.Expect(witness_found, "no witness file");
  return t.Finish("Valid; premises Sat with a witness that re-checks");
}

// 2 ------------------------------------------------------------------------
// The m = 6 premise set written out from the displays, independently of the
// library's generator.
std::vector<std::vector<int>> LemmaFourMatrix(int m) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m + 1), 0));
  for (int i = 0; i + 1 < m; ++i) {
    for (int k = 0; k < 3; ++k) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = 1;
  }
  for (int j : {0, 1, 3, 6}) a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] = 1;
  return a;
}

std::set<CountingAtom> PhiOracle(int m, std::size_t* phi1_size) {
  const auto ge = Direction::kAtLeast;
  const auto le = Direction::kAtMost;
  auto lit = [](const std::string& p, bool pos = true) { return Literal{p, pos}; };
  auto tj = [](int j) { return "t" + std::to_string(j); };
  auto si = [](int i) { return "s" + std::to_string(i); };
  std::vector<CountingAtom> phi1;
  auto exactly = [&](std::vector<CountingAtom>& out, std::int64_t c, Literal a, Literal b) {
    out.push_back(CountingAtom::MakeUnary(le, c, a, b));
    out.push_back(CountingAtom::MakeUnary(ge, c, a, b));
  };
  phi1.push_back(CountingAtom::MakeCount(le, 3 * (m + 1), lit("t")));
  for (int j = 1; j <= m + 1; ++j) phi1.push_back(CountingAtom::MakeCount(ge, 3, lit(tj(j))));
  for (int j = 1; j <= m + 1; ++j) phi1.push_back(CountingAtom::MakeUnary(le, 0, lit(tj(j)), lit("t", false)));
  for (int j = 1; j <= m + 1; ++j) {
    for (int k = j + 1; k <= m + 1; ++k) phi1.push_back(CountingAtom::MakeUnary(le, 0, lit(tj(j)), lit(tj(k))));
  }
  for (int i = 1; i <= m; ++i) phi1.push_back(CountingAtom::MakeUnary(le, 0, lit(si(i)), lit("t", false)));
  const auto a = LemmaFourMatrix(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m + 1; ++j) {
      const bool one = a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == 1;
      phi1.push_back(CountingAtom::MakeUnary(le, 0, lit(tj(j)), lit(si(i), !one)));
    }
  }
  for (int i = 1; i < m; ++i) exactly(phi1, 3, lit(si(i)), lit("r"));
  exactly(phi1, 4, lit(si(m)), lit("r"));
  *phi1_size = phi1.size();

  std::vector<CountingAtom> phi2;
  auto both = [&](const std::string& p, std::int64_t in, std::int64_t out) {
    exactly(phi2, in, lit(p), lit(p));
    exactly(phi2, out, lit(p, false), lit(p, false));
  };
  both("t", 3 * (m + 1), 3 * (m + 1));
  for (int j = 1; j <= m + 1; ++j) both(tj(j), 3, 6 * m + 3);
  for (int i = 1; i < m; ++i) both(si(i), 9, 6 * m - 3);
  both(si(m), 12, 6 * m - 6);
  both("r", 3 * (m + 1), 3 * (m + 1));
  std::set<CountingAtom> phi(phi1.begin(), phi1.end());
  phi.insert(phi2.begin(), phi2.end());
  return phi;
}

Outcome ClaimOne() {
  Tally t;
  const IncompletenessInstance inst = MakeIncompletenessInstance(6);
  std::size_t phi1_size = 0;
  const std::set<CountingAtom> oracle = PhiOracle(6, &phi1_size);
  t.Expect(phi1_size == 96, "structural part has " + std::to_string(phi1_size) + " atoms");
  t.Expect(std::set<CountingAtom>(inst.phi.begin(), inst.phi.end()) == oracle,
           "generated premise set differs from the written-out one");
  t.Expect(inst.phi.size() == 148, "premise set size " + std::to_string(inst.phi.size()));
  for (std::size_t j = 0; j < inst.goals.size(); ++j) {
    const EntailResult r = Entails(inst.phi, inst.goals[j]);
    t.Expect(r.status == EntailStatus::kValid, "goal " + std::to_string(j + 1) + " not entailed");
  }
  t.Expect(inst.goals.size() == 7, "expected seven goals");
  return t.Finish("all 7 goals entailed");
}

// 3 ------------------------------------------------------------------------
Outcome ClaimTwo() {
  Tally t;
  const std::int64_t n = 42;
  const IncompletenessInstance inst = MakeIncompletenessInstance(6);
  const Counterexample ce = CounterexampleAssignment(6);
  const ProbabilityAssignment& p = ce.assignment;
  t.Expect(p.scale() == n, "scale is not 6(m+1)");
  for (const auto& a : inst.phi) {
    t.Expect(ThresholdHolds(p, n, a), "assignment violates " + a.str());
    t.Expect(ApproxModels(p, a), "library threshold check rejects " + a.str());
  }
  const std::size_t j = ce.zero_index;
  t.Expect(j >= 1 && j <= 7, "zero index out of range");
  const std::string tj = "t" + std::to_string(j);
  t.Expect(PairProbability(p, {tj, true}, {"r", true}) == 0, "P(t_j & r) is not 0");
  t.Expect(!ThresholdHolds(p, n, inst.goals[j - 1]), "goal holds under the assignment");
  t.Expect(PairProbability(p, {"t", true}, {"t", true}) == mpq_class(1, 2), "P(t) != 1/2");
  for (int i = 1; i <= 6; ++i) {
    mpq_class want(i < 6 ? 3 : 4, n);
    want.canonicalize();
    t.Expect(PairProbability(p, {"s" + std::to_string(i), true}, {"r", true}) == want,
             "P(s_i & r) mismatch at i=" + std::to_string(i));
  }
  const DeriveResult d = Derives(inst.phi, inst.goals[j - 1]);
  t.Expect(d.status == DeriveStatus::kNotDerivable, "goal is not reported underivable");
  t.Expect(d.saturation == SaturationStatus::kFixpoint, "saturation did not reach a fixpoint");
  std::ostringstream s;
  s << "goal " << j << " underivable; countermodel over " << p.worlds().size() << " worlds";
  return t.Finish(s.str());
}

// 4 ------------------------------------------------------------------------
Outcome LemmaFour() {
  Tally t;
  for (int m : {6, 7, 8}) {
    const LinearSystem sys = ManyNonzerosInstance(static_cast<std::size_t>(m));
    const auto a = LemmaFourMatrix(m);
    std::vector<std::vector<std::int64_t>> dense;
    std::vector<std::int64_t> c;
    for (int i = 0; i < m; ++i) {
      std::vector<std::int64_t> row;
      for (int j = 0; j <= m; ++j) {
        const int want = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        row.push_back(want);
        t.Expect(sys.coefficient(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == Rational(want),
                 "matrix entry differs at m=" + std::to_string(m));
      }
      dense.push_back(row);
      c.push_back(i + 1 < m ? 3 : 4);
      t.Expect(sys.row(static_cast<std::size_t>(i)).rhs == Rational(c.back()), "rhs differs");
    }
    const std::vector<std::int64_t> upper(static_cast<std::size_t>(m + 1), 4);
    const auto sols = EnumerateSolutions(sys, upper);
    const std::vector<std::int64_t> ones(static_cast<std::size_t>(m + 1), 1);
    t.Expect(sols.size() == 1 && sols.front() == ones, "enumeration is not exactly all-ones at m=" + std::to_string(m));
    const auto brute = BoxSolutions(dense, c, 4);
    t.Expect(brute.size() == 1 && brute.front() == ones, "oracle disagrees at m=" + std::to_string(m));
  }
  return t.Finish("unique solution (1,...,1) for m = 6, 7, 8");
}

// 5 ------------------------------------------------------------------------
std::size_t CeilLogBound(std::size_t m, std::size_t num_vars) {
  // Smallest k with 2^k >= (L+1)^m.
  mpz_class power = 1;
  for (std::size_t i = 0; i < m; ++i) power *= static_cast<unsigned long>(num_vars + 1);
  std::size_t k = 0;
  mpz_class two = 1;
  while (two < power) {
    two *= 2;
    ++k;
  }
  return k;
}

Outcome Sparsify() {
  Tally t;
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(Uniform(rng, 1, 6));
    const auto l = static_cast<std::size_t>(Uniform(rng, 1, 12));
    const PlantedSystem ps = RandomBooleanSystem(rng, m, l, 3);
    const std::string tag = " (trial " + std::to_string(trial) + ")";

    const NaturalVector y = SparsifyNatural(ps.system, ps.solution);
    std::vector<mpq_class> yq;
    bool natural = y.size() == l;
    for (auto v : y) {
      natural = natural && v >= 0;
      yq.emplace_back(static_cast<long>(v));
    }
    t.Expect(natural && Resolves(ps.system, yq), "natural output does not solve" + tag);
    t.Expect(CountNonzeros(y) <= CeilLogBound(m, l), "natural support above the bound" + tag);

    const RationalVector x = ToRational(ps.solution);
    const RationalVector z = SparsifyRational(ps.system, x);
    std::vector<mpq_class> zq;
    std::vector<std::size_t> support;
    bool nonneg = z.size() == l;
    for (std::size_t j = 0; j < z.size(); ++j) {
      nonneg = nonneg && z[j].sign() >= 0;
      zq.push_back(z[j].raw());
      if (!z[j].is_zero()) support.push_back(j);
    }
    t.Expect(nonneg && Resolves(ps.system, zq), "rational output does not solve" + tag);
    t.Expect(support.size() <= m, "rational support above m" + tag);
    t.Expect(ColumnRank(ps.system, support) == support.size(), "rational support is dependent" + tag);
  }
  return t.Finish("200 planted systems");
}

// 6 ------------------------------------------------------------------------
Outcome ThreeColouring() {
  Tally t;
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K3", CompleteGraph(3)}, {"K4", CompleteGraph(4)}, {"C5", CycleGraph(5)}};
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(Uniform(rng, 1, 8));
    const double density = 0.2 + 0.1 * static_cast<double>(Uniform(rng, 0, 6));
    graphs.emplace_back("random " + std::to_string(i), RandomGraph(rng, n, density));
  }
  std::size_t colourable = 0;
  for (const auto& [name, g] : graphs) {
    const bool oracle = BruteColourable(g.n, g.edges);
    colourable += oracle;
    const auto atoms = Encode3Col(g);
    const SatResult r = DecideSat(atoms);
    t.Expect(r.status != SatStatus::kUnknown, name + ": solver gave up");
    t.Expect((r.status == SatStatus::kSat) == oracle, name + ": verdict disagrees with brute force");
    if (r.status == SatStatus::kSat) {
      const Colouring c = Decode3Col(*r.witness, g);
      bool proper = c.size() == g.n;
      for (const auto& [a, b] : g.edges) proper = proper && c[a - 1] != c[b - 1];
      for (int col : c) proper = proper && col >= 0 && col < 3;
      t.Expect(proper, name + ": decoded colouring is not proper");
    }
  }
  t.Expect(BruteColourable(3, CompleteGraph(3).edges) && !BruteColourable(4, CompleteGraph(4).edges),
           "oracle sanity");
  return t.Finish(std::to_string(graphs.size()) + " graphs, " + std::to_string(colourable) +
                  " colourable");
}

// 7 ------------------------------------------------------------------------
Outcome TilingRoundTrip() {
  Tally t;
  Rng rng(7);
  const std::size_t k = 1;
  const std::size_t n = 2;
  const std::size_t s = 2 * (k * k + k + 1);
  for (int i = 0; i < 10; ++i) {
    const auto colours = static_cast<std::size_t>(Uniform(rng, 1, 2));
    const auto [ts, tiling] = PlantedTiling(rng, colours, n);
    const std::vector<std::size_t> init{tiling.at(0, 0)};
    const std::string tag = " (tiling " + std::to_string(i) + ")";
    const TilingEncoding enc = EncodeTiling(ts, init, k);
    t.Expect(enc.notebook == s, "notebook size" + tag);
    const FiniteStructure w = TilingWitness(ts, tiling, init, k);
    t.Expect(w.domain_size() == colours * n * n + 2 * s, "witness domain size" + tag);
    std::size_t failed = 0;
    for (const auto& a : enc.atoms) failed += !LoopEvaluate(w, a);
    t.Expect(failed == 0, std::to_string(failed) + " atoms fail on the witness" + tag);
    t.Expect(DecodeTiling(w, ts, init, k) == tiling, "decode does not invert the witness" + tag);
  }
  return t.Finish("10 planted tilings at k=1");
}

// 8 ------------------------------------------------------------------------
Outcome SolverVersusBrute() {
  Tally t;
  Rng rng(8);
  std::size_t sat = 0;
  for (int i = 0; i < 300; ++i) {
    const auto formulas = RandomFormulaSet(rng, 3, 3);
    const auto oracle = BruteUnarySat(formulas);
    const SatResult r = DecideSat(formulas);
    std::ostringstream tag;
    tag << " (instance " << i << ":";
    for (const auto& f : formulas) tag << " " << f.str();
    tag << ")";
    t.Expect(r.status != SatStatus::kUnknown, "solver gave up" + tag.str());
    t.Expect((r.status == SatStatus::kSat) == oracle.has_value(), "verdict disagrees" + tag.str());
    if (r.status == SatStatus::kSat) {
      ++sat;
      for (const auto& f : formulas) t.Expect(Evaluate(*r.witness, f), "witness fails" + tag.str());
    }
  }
  return t.Finish("300 instances, " + std::to_string(sat) + " satisfiable");
}

// 9 ------------------------------------------------------------------------
Outcome ShrinkCorrectness() {
  Tally t;
  Rng rng(9);
  const std::vector<std::string> nouns{"p", "q", "s"};
  const std::vector<std::string> verbs{"likes"};
  for (int i = 0; i < 50; ++i) {
    const auto domain = static_cast<std::size_t>(Uniform(rng, 1, 40));
    const double density = 0.05 * static_cast<double>(Uniform(rng, 1, 6));
    const FiniteStructure s = RandomStructure(rng, domain, nouns, verbs, density);
    const auto want = Uniform(rng, 1, 4);
    std::vector<CountingAtom> phi;
    for (int attempt = 0; attempt < 400 && static_cast<std::int64_t>(phi.size()) < want; ++attempt) {
      const CountingAtom a = Coin(rng) ? RandomRelationalAtom(rng, nouns, verbs, 2)
                                       : RandomUnaryAtom(rng, nouns, 2);
      if (LoopEvaluate(s, a)) phi.push_back(a);
    }
    const std::string tag = " (pair " + std::to_string(i) + ")";
    t.Expect(!phi.empty(), "no true atoms found" + tag);
    const ShrinkReport r = ShrinkModel(s, phi);
    for (const auto& a : phi) t.Expect(LoopEvaluate(r.output, a), "output fails " + a.str() + tag);
    std::set<std::string> unary;
    std::int64_t c = 0;
    for (const auto& a : phi) {
      for (const auto& p : a.unary_predicates()) unary.insert(p);
      c = std::max(c, a.bound());
      if (!a.is_unary()) c = std::max(c, a.relational().inner_bound);
    }
    const std::uint64_t bound =
        (std::uint64_t{1} << unary.size()) * static_cast<std::uint64_t>(c * static_cast<std::int64_t>(phi.size()) + 1);
    t.Expect(r.output.domain_size() <= bound, "output above the size bound" + tag);
    t.Expect(r.output.domain_size() <= s.domain_size(), "output larger than input" + tag);
  }
  return t.Finish("50 random model/atom-set pairs");
}

// 10 -----------------------------------------------------------------------
// A premise about the literal pair (a, b) that is true when the pair has
// measure v (count or scaled probability).
CountingAtom TrueAtom(Rng& rng, const Literal& a, const Literal& b, const mpq_class& v) {
  if (Coin(rng)) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    const std::int64_t hi = fl.get_si();
    return CountingAtom::MakeUnary(Direction::kAtLeast, hi - Uniform(rng, 0, 2), a, b);
  }
  mpz_class cl;
  mpz_cdiv_q(cl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return CountingAtom::MakeUnary(Direction::kAtMost, cl.get_si() + Uniform(rng, 0, 2), a, b);
}

// Runs the rule, axiom and saturation checks against a semantics given as
// a measure of literal pairs.
void SoundnessTrial(Rng& rng, const std::function<mpq_class(const Literal&, const Literal&)>& measure,
                    const std::string& tag, Tally& t) {
  const std::vector<std::string> preds{"a", "b", "c"};
  auto holds = [&](const CountingAtom& x) {
    const mpq_class v = measure(x.unary().first, x.unary().second);
    return x.direction() == Direction::kAtLeast ? v >= x.bound() : v <= x.bound();
  };
  std::vector<CountingAtom> phi;
  const auto n = Uniform(rng, 2, 5);
  for (std::int64_t i = 0; i < n; ++i) {
    const Literal a = RandomLiteral(rng, preds);
    const Literal b = RandomLiteral(rng, preds);
    phi.push_back(TrueAtom(rng, a, b, measure(a, b)));
  }
  for (const auto& x : phi) {
    for (const auto& y : phi) {
      for (Rule rule : {Rule::kR1, Rule::kR2, Rule::kR3}) {
        for (const auto& z : RuleConclusions(rule, x, y)) {
          t.Expect(holds(z), tag + ": " + std::string(RuleName(rule)) + " from " + x.str() + ", " +
                                 y.str() + " gives false " + z.str());
        }
      }
    }
  }
  const Literal l = RandomLiteral(rng, preds);
  const CountingAtom axiom = CountingAtom::MakeUnary(Direction::kAtMost, Uniform(rng, 0, 3), l, l.opposite());
  t.Expect(IsAxiom(axiom) && holds(axiom), tag + ": axiom instance fails");
  const CountingAtom goal = CountingAtom::MakeUnary(Coin(rng) ? Direction::kAtLeast : Direction::kAtMost,
                                                    Uniform(rng, 0, 6), RandomLiteral(rng, preds),
                                                    RandomLiteral(rng, preds));
  const DeriveResult d = Derives(phi, goal);
  if (d.status == DeriveStatus::kDerivable) {
    t.Expect(holds(goal), tag + ": derived a false goal " + goal.str());
    t.Expect(ReplayDerivation(*d.derivation, phi), tag + ": derivation does not replay");
  }
  t.Expect(d.saturation != SaturationStatus::kContradiction, tag + ": true premises saturate to a contradiction");
}

Outcome Soundness() {
  Tally t;
  Rng rng(10);
  const std::vector<std::string> preds{"a", "b", "c"};
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::uint64_t> counts(8);
    for (auto& c : counts) c = static_cast<std::uint64_t>(Uniform(rng, 0, 4));
    const FiniteStructure s = StructureFromCounts(preds, counts);
    SoundnessTrial(rng, [&](const Literal& a, const Literal& b) {
      std::int64_t n = 0;
      for (std::size_t e = 0; e < s.domain_size(); ++e) {
        auto in = [&](const Literal& l) { return s.unary(l.predicate).contains(e) == l.positive; };
        n += in(a) && in(b);
      }
      return mpq_class(n);
    }, "standard " + std::to_string(i), t);
  }
  for (int i = 0; i < 1000; ++i) {
    std::vector<World> worlds;
    std::int64_t total = 0;
    std::vector<std::int64_t> w(8);
    for (auto& x : w) total += (x = Uniform(rng, 0, 5));
    if (total == 0) w[0] = total = 1;
    for (std::uint64_t a = 0; a < 8; ++a) {
      worlds.push_back({a, Rational(BigInt(w[a]), BigInt(total))});
    }
    const std::int64_t scale = Uniform(rng, 1, 12);
    const ProbabilityAssignment p(preds, worlds, scale);
    SoundnessTrial(rng, [&](const Literal& a, const Literal& b) {
      return mpq_class(PairProbability(p, a, b) * scale);
    }, "threshold " + std::to_string(i), t);
  }

  // Parser round trips and duality.
  const Lexicon lex = ParseLexicon("nouns: artist, beekeeper, carpenter, dentist, ox\nverbs: admire, see\nplural: oxen=ox\n");
  const std::vector<std::string> nouns{"artist", "beekeeper", "carpenter", "dentist", "ox"};
  const std::vector<std::string> verbs{"admire", "see"};
  for (int i = 0; i < 1000; ++i) {
    const CountingAtom a = Coin(rng, 0.7) ? RandomUnaryAtom(rng, nouns, 20)
                                          : RandomRelationalAtom(rng, nouns, verbs, 20);
    const std::string tag = " (" + a.str() + ")";
    const std::string english = RenderEnglish(a, lex);
    const ArgumentFile e = ParseEnglish(english, lex);
    t.Expect(e.premises.size() == 1 && e.premises.front() == a, "English round trip" + tag + " via '" + english + "'");
    t.Expect(ParseAtom(RenderSymbolic(a)) == a, "symbolic round trip" + tag);
    t.Expect(NegateAtom(NegateAtom(a)) == a, "double negation" + tag);
    const FiniteStructure s = RandomStructure(rng, static_cast<std::size_t>(Uniform(rng, 0, 6)), nouns, verbs, 0.4);
    t.Expect(LoopEvaluate(s, NegateAtom(a)) != LoopEvaluate(s, a), "dual is not the negation" + tag);
  }
  const Lexicon pq = ParseLexicon("nouns: p, q\n");
  t.Expect(ParseEnglish("Some p are q", pq).premises == ParseEnglish("At least 1 p is a q", pq).premises,
           "Some desugaring");
  return t.Finish("1000 standard, 1000 threshold, 1000 parser instances");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Argument (1) validity", 1, ArgumentOne},
      {2, "Claim 1 entailments", 60, ClaimOne},
      {3, "Claim 2 counterexample", 30, ClaimTwo},
      {4, "Lemma 4 uniqueness", 10, LemmaFour},
      {5, "sparse-solution bounds", 30, Sparsify},
      {6, "3-colouring oracle equivalence", 60, ThreeColouring},
      {7, "tiling encoder round trip", 30, TilingRoundTrip},
      {8, "C1 solver vs brute force", 120, SolverVersusBrute},
      {9, "shrink correctness", 60, ShrinkCorrectness},
      {10, "soundness and parser properties", 60, Soundness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name
              << "  [" << std::fixed << std::setprecision(2) << secs << " s / " << c.limit_seconds
              << " s]  " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
