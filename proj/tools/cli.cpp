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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "numsyl/c1_solver.hpp"
#include "numsyl/error.hpp"
#include "numsyl/ilp.hpp"
#include "numsyl/linear_system.hpp"
#include "numsyl/logic.hpp"
#include "numsyl/n2_solver.hpp"
#include "numsyl/parser.hpp"
#include "numsyl/psat.hpp"
#include "numsyl/reductions.hpp"
#include "numsyl/simplex.hpp"
#include "numsyl/syllogism.hpp"

namespace numsyl::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kValid: return "Valid";
    case Status::kInvalid: return "Invalid";
    case Status::kSat: return "Sat";
    case Status::kUnsat: return "Unsat";
    case Status::kDerivable: return "Derivable";
    case Status::kNotDerivable: return "NotDerivable";
    case Status::kUnknown: return "Unknown";
    case Status::kTrue: return "True";
    case Status::kFalse: return "False";
    case Status::kDone: return "Done";
    case Status::kError: return "Error";
  }
  return "?";
}

int ExitCode(Status s) {
  if (s == Status::kError) return 1;
  if (s == Status::kUnknown) return 2;
  return 0;
}

json ToJson(const Verdict& v) {
  return json{{"tool", "numsyl"},
              {"command", v.command},
              {"status", StatusName(v.status)},
              {"exit_code", ExitCode(v.status)},
              {"certificates", v.certificates},
              {"seconds", v.seconds},
              {"details", v.details}};
}

std::string ToText(const Verdict& v) {
  std::ostringstream out;
  out << v.command << ": " << StatusName(v.status) << "\n";
  out << v.report;
  if (!v.report.empty() && v.report.back() != '\n') out << "\n";
  for (const auto& c : v.certificates) out << "certificate: " << c << "\n";
  out << "time: " << v.seconds << " s\n";
  return out.str();
}

std::uint64_t EffectiveBudget(const Options& options, std::uint64_t fallback) {
  if (options.budget > 0) return options.budget;
  if (const char* env = std::getenv("NUMSYL_BUDGET"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw InputError("NUMSYL_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    }
    return v;
  }
  return fallback;
}

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string WriteFile(const Options& options, const std::string& name,
                      const std::string& content) {
  const fs::path dir(options.out_dir.empty() ? "." : options.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError("cannot write '" + path.string() + "'");
  return path.string();
}

ArgumentFile LoadArgument(const std::string& path, const Options& options) {
  const std::string text = ReadFile(path);
  const bool english = options.format == "english" ||
                       (options.format == "auto" && !options.lexicon.empty());
  if (options.format != "auto" && options.format != "english" &&
      options.format != "symbolic") {
    throw InputError("unknown format '" + options.format + "'");
  }
  try {
    if (!english) return ParseSymbolic(text);
    if (options.lexicon.empty()) throw InputError("English input needs --lexicon");
    return ParseEnglish(text, ParseLexicon(ReadFile(options.lexicon)));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string AtomLines(std::span<const CountingAtom> atoms) {
  std::string out;
  for (const auto& a : atoms) out += RenderSymbolic(a) + "\n";
  return out;
}

constexpr std::size_t kInlineModelLimit = 40;

// ---------------------------------------------------------------------------
// solve

void SolveUnary(const ArgumentFile& file, const Options& options, Verdict& v) {
  SolverOptions so;
  so.jobs = std::max<std::size_t>(1, options.jobs);
  so.ilp.node_limit = EffectiveBudget(options, so.ilp.node_limit);
  so.ilp.time_limit_seconds = options.timeout_seconds;
  const std::vector<C1Formula> premises = file.PremiseFormulas();
  const std::optional<C1Formula> conclusion = file.ConclusionFormula();
  SatResult check;
  if (conclusion) {
    EntailResult r = Entails(premises, *conclusion, so);
    check = std::move(r.check);
  } else {
    check = DecideSat(premises, so);
  }
  v.details["engine"] = "c1";
  v.details["branches"] = check.branches;
  v.details["nodes"] = check.nodes;

  // The formulas whose joint satisfiability was decided.
  std::vector<C1Formula> decided = premises;
  if (conclusion) decided.push_back(C1Formula::Not(*conclusion));

  std::ostringstream report;
  switch (check.status) {
    case SatStatus::kUnknown:
      v.status = Status::kUnknown;
      report << "search limit reached before a verdict\n";
      break;
    case SatStatus::kSat: {
      v.status = conclusion ? Status::kInvalid : Status::kSat;
      const FiniteStructure& w = *check.witness;
      const bool ok = std::all_of(decided.begin(), decided.end(),
                                  [&](const C1Formula& f) { return Evaluate(w, f); });
      v.details["witness_checked"] = ok;
      v.details["witness_size"] = w.domain_size();
      const std::string text = FormatStructure(w);
      v.certificates.push_back(
          WriteFile(options, conclusion ? "countermodel.struct" : "model.struct", text));
      if (check.certificate) {
        v.certificates.push_back(WriteFile(options, "solution.txt", check.certificate->str()));
        v.details["support"] = check.certificate->types.size();
      }
      report << (conclusion ? "countermodel" : "model") << " with " << w.domain_size()
             << " element(s), checked: " << (ok ? "yes" : "NO") << "\n";
      if (options.explain || w.domain_size() <= kInlineModelLimit) report << text;
      break;
    }
    case SatStatus::kUnsat: {
      v.status = conclusion ? Status::kValid : Status::kUnsat;
      const auto branches = Normalize(decided, so.normalize);
      if (branches.empty()) {
        v.certificates.push_back(WriteFile(
            options, "infeasible.txt",
            "# every branch of the quantifier case split is constant false\n"));
      }
      std::size_t total_columns = 0;
      for (std::size_t i = 0; i < branches.size(); ++i) {
        const TypeSystem ts = BuildSystem(branches[i], so.build);
        std::ostringstream dump;
        dump << "# infeasible over the naturals with every variable at most " << ts.cap
             << "\n# predicates:";
        for (const auto& p : ts.predicates) dump << " " << p;
        dump << "\n# columns (1-type masks):";
        for (auto c : ts.columns) dump << " " << c;
        dump << "\n" << FormatLinearSystem(ts.system);
        total_columns += ts.columns.size();
        v.certificates.push_back(
            WriteFile(options, "branch-" + std::to_string(i) + ".sys", dump.str()));
      }
      v.details["live_columns"] = total_columns;
      report << (conclusion ? "no countermodel: " : "no model: ") << branches.size()
             << " branch system(s), " << total_columns << " live column(s), all infeasible\n";
      break;
    }
  }
  v.report = report.str();
}

void SolveRelational(const ArgumentFile& file, const Options& options, Verdict& v) {
  if (!file.atomic()) {
    throw InputError("relational argument files take single counting atoms only");
  }
  std::vector<CountingAtom> phi = file.premises;
  if (file.conclusion) phi.push_back(NegateAtom(*file.conclusion));
  std::optional<std::uint64_t> bound;
  try {
    bound = SizeBound(phi);
  } catch (const CapExceeded&) {
  }
  std::size_t cap = options.domain_cap;
  if (cap == 0) {
    if (!bound) throw CapExceeded("size bound overflows; pass --domain-cap");
    cap = static_cast<std::size_t>(*bound);
  }
  SearchOptions so;
  so.node_budget = EffectiveBudget(options, so.node_budget);
  const SearchResult r = BoundedSearch(phi, cap, so);
  v.details["engine"] = "n2-search";
  v.details["domain_cap"] = cap;
  v.details["size_bound"] = bound ? json(*bound) : json(nullptr);
  v.details["nodes"] = r.nodes;
  const bool is_entailment = file.conclusion.has_value();
  std::ostringstream report;
  if (r.status == SearchStatus::kFound) {
    v.status = is_entailment ? Status::kInvalid : Status::kSat;
    const FiniteStructure& m = *r.model;
    const bool ok = std::all_of(phi.begin(), phi.end(),
                                [&](const CountingAtom& a) { return Evaluate(m, a); });
    v.details["witness_checked"] = ok;
    v.details["witness_size"] = m.domain_size();
    const std::string text = FormatStructure(m);
    v.certificates.push_back(
        WriteFile(options, is_entailment ? "countermodel.struct" : "model.struct", text));
    report << (is_entailment ? "countermodel" : "model") << " with " << m.domain_size()
           << " element(s), checked: " << (ok ? "yes" : "NO") << "\n";
    if (options.explain || m.domain_size() <= kInlineModelLimit) report << text;
  } else if (r.status == SearchStatus::kNoModel && bound && cap >= *bound) {
    v.status = is_entailment ? Status::kValid : Status::kUnsat;
    std::ostringstream cert;
    cert << "# exhaustive search found no model of the atoms below with at most " << cap
         << " elements;\n# every model can be shrunk to at most " << *bound
         << " elements, so none exists\n# nodes: " << r.nodes << "\n"
         << AtomLines(phi);
    v.certificates.push_back(WriteFile(options, "search.txt", cert.str()));
    report << "no " << (is_entailment ? "countermodel" : "model") << " up to the size bound "
           << *bound << "\n";
  } else {
    v.status = Status::kUnknown;
    report << (r.status == SearchStatus::kNoModel
                   ? "no model up to the domain cap, which is below the size bound\n"
                   : "node budget exhausted\n");
  }
  v.report = report.str();
}

// ---------------------------------------------------------------------------
// generate helpers

Tiling RandomTiling(std::size_t colours, std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, colours - 1);
  Tiling t;
  t.size = size;
  t.grid.resize(size * size);
  for (auto& c : t.grid) c = pick(rng);
  return t;
}

// Exactly the adjacencies occurring in t, so t is valid.
TilingSystem SystemOf(const Tiling& t, std::size_t colours) {
  TilingSystem ts;
  for (std::size_t c = 0; c < colours; ++c) ts.colours.push_back("col" + std::to_string(c));
  const std::size_t n = t.size;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      ts.horizontal.insert({t.at(x, y), t.at((x + 1) % n, y)});
      ts.vertical.insert({t.at(x, y), t.at(x, (y + 1) % n)});
    }
  }
  return ts;
}

std::string FormatTiling(const TilingSystem& ts, const Tiling& t) {
  std::ostringstream out;
  for (std::size_t y = 0; y < t.size; ++y) {
    for (std::size_t x = 0; x < t.size; ++x) out << (x ? " " : "") << ts.colours[t.at(x, y)];
    out << "\n";
  }
  return out.str();
}

json AtomResults(const std::vector<std::pair<std::string, bool>>& rows, std::ostringstream& report) {
  json out = json::array();
  for (const auto& [text, holds] : rows) {
    out.push_back({{"formula", text}, {"holds", holds}});
    report << (holds ? "true   " : "false  ") << text << "\n";
  }
  return out;
}

}  // namespace

Verdict Solve(const std::string& argument_path, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "solve";
  const ArgumentFile file = LoadArgument(argument_path, options);
  if (file.premises.empty() && file.formulas.empty() && !file.has_conclusion()) {
    throw InputError(argument_path + ": no premises and no conclusion");
  }
  v.details["input"] = argument_path;
  v.details["premises"] = file.premises.size() + file.formulas.size();
  v.details["has_conclusion"] = file.has_conclusion();
  if (file.has_relational()) {
    SolveRelational(file, options, v);
  } else {
    SolveUnary(file, options, v);
  }
  v.seconds = timer.seconds();
  return v;
}

Verdict Derive(const std::string& argument_path, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "derive";
  const ArgumentFile file = LoadArgument(argument_path, options);
  if (!file.atomic() || !file.conclusion) {
    throw InputError(argument_path +
                     ": derive needs single-atom premises and a single-atom conclusion");
  }
  if (file.has_relational()) {
    throw InputError(argument_path + ": the calculus covers unary atoms only");
  }
  SaturationOptions so;
  so.max_rounds = EffectiveBudget(options, so.max_rounds);
  const DeriveResult r = Derives(file.premises, *file.conclusion, so);
  v.details["input"] = argument_path;
  v.details["saturation"] = SaturationStatusName(r.saturation);
  v.details["numerically_explicit"] = IsNumericallyExplicit(file.premises).counts.has_value();
  std::ostringstream report;
  switch (r.status) {
    case DeriveStatus::kDerivable: {
      v.status = Status::kDerivable;
      const bool replayed = ReplayDerivation(*r.derivation, file.premises);
      const std::string text = FormatDerivation(*r.derivation);
      v.details["replayed"] = replayed;
      v.details["derivation_size"] = DerivationSize(*r.derivation);
      v.certificates.push_back(WriteFile(options, "derivation.txt", text));
      report << "derivation with " << DerivationSize(*r.derivation)
             << " distinct step(s), replayed: " << (replayed ? "yes" : "NO") << "\n";
      if (options.explain) report << text;
      break;
    }
    case DeriveStatus::kNotDerivable:
      v.status = Status::kNotDerivable;
      report << "saturation reached a fixpoint without the goal\n";
      break;
    case DeriveStatus::kNotShown:
      v.status = Status::kUnknown;
      report << "saturation stopped at the round budget\n";
      break;
  }
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict GenerateThreeCol(const ThreeColParams& params, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "generate";
  const int sources = !params.graph.empty() + !params.graph_file.empty() +
                      (params.random_nodes > 0);
  if (sources != 1) {
    throw InputError("give exactly one of --graph, --graph-file or --random");
  }
  Graph g;
  if (!params.graph.empty()) {
    g = NamedGraph(params.graph);
  } else if (!params.graph_file.empty()) {
    g = ParseGraph(ReadFile(params.graph_file));
  } else {
    if (params.density < 0 || params.density > 1) throw InputError("--density must lie in [0,1]");
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution edge(params.density);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= params.random_nodes; ++i) {
      for (std::size_t j = i + 1; j <= params.random_nodes; ++j) {
        if (edge(rng)) edges.emplace_back(i, j);
      }
    }
    g = MakeGraph(params.random_nodes, std::move(edges));
  }
  const std::vector<CountingAtom> atoms = Encode3Col(g);
  v.details["kind"] = "3col";
  v.details["nodes"] = g.n;
  v.details["edges"] = g.edges.size();
  v.details["atoms"] = atoms.size();
  v.certificates.push_back(WriteFile(options, "graph.col", FormatGraph(g)));
  v.certificates.push_back(WriteFile(options, "formulas.txt", AtomLines(atoms)));
  std::ostringstream report;
  report << g.n << " node(s), " << g.edges.size() << " edge(s), " << atoms.size()
         << " atom(s)\n";
  std::optional<Colouring> colouring;
  bool oracle_ran = true;
  try {
    colouring = Brute3Col(g);
  } catch (const CapExceeded&) {
    oracle_ran = false;
  }
  std::string expected = !oracle_ran ? "Unknown" : colouring ? "Sat" : "Unsat";
  v.details["expected"] = expected;
  std::ostringstream exp;
  exp << expected << "\n";
  if (colouring) {
    exp << "colouring:";
    for (int c : *colouring) exp << " " << c;
    exp << "\n";
    v.details["colouring"] = *colouring;
    const FiniteStructure w = ColouringWitness(g, *colouring);
    const bool ok = std::all_of(atoms.begin(), atoms.end(),
                                [&](const CountingAtom& a) { return Evaluate(w, a); });
    v.details["witness_checked"] = ok;
    v.certificates.push_back(WriteFile(options, "witness.struct", FormatStructure(w)));
  }
  v.certificates.push_back(WriteFile(options, "expected.txt", exp.str()));
  report << "expected verdict: " << expected << "\n";
  v.status = Status::kDone;
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict GenerateTiling(const TilingParams& params, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "generate";
  if (params.k == 0 || params.k > 4) throw InputError("--k must lie in 1..4");
  const std::size_t n = std::size_t{1} << params.k;
  if (params.init_length > n) throw InputError("--init is longer than the grid side");
  TilingSystem ts;
  std::optional<Tiling> tiling;
  std::vector<std::size_t> init;
  if (!params.system_file.empty()) {
    ts = ParseTilingSystem(ReadFile(params.system_file));
    const BruteTilingResult brute = BruteTiling(ts, n, {}, EffectiveBudget(options, 10'000'000));
    if (brute.exhausted) throw CapExceeded("tiling search exhausted its budget");
    tiling = brute.tiling;
    if (ts.colours.empty()) throw InputError("tiling system has no colours");
    // Without a tiling any initial row will do; the encoding has no model.
    init.assign(params.init_length, 0);
    if (tiling) {
      for (std::size_t i = 0; i < params.init_length; ++i) init[i] = tiling->at(i, 0);
    }
  } else {
    if (params.colours == 0) throw InputError("--colours must be positive");
    std::mt19937_64 rng(options.seed);
    tiling = RandomTiling(params.colours, n, rng);
    ts = SystemOf(*tiling, params.colours);
    for (std::size_t i = 0; i < params.init_length; ++i) init.push_back(tiling->at(i, 0));
  }
  const TilingEncoding enc = EncodeTiling(ts, init, params.k);
  v.details["kind"] = "tiling";
  v.details["k"] = params.k;
  v.details["grid"] = n;
  v.details["colours"] = ts.colours.size();
  v.details["atoms"] = enc.atoms.size();
  v.details["group_sizes"] = enc.group_sizes;
  v.details["witness_domain"] = enc.witness_domain();
  v.certificates.push_back(WriteFile(options, "tiling-system.txt", FormatTilingSystem(ts)));
  v.certificates.push_back(WriteFile(options, "theta.txt", AtomLines(enc.atoms)));
  std::ostringstream report;
  report << "grid " << n << "x" << n << ", " << ts.colours.size() << " colour(s), "
         << enc.atoms.size() << " atom(s)\n";
  std::ostringstream exp;
  if (tiling) {
    const FiniteStructure w = TilingWitness(ts, *tiling, init, params.k);
    const bool ok = std::all_of(enc.atoms.begin(), enc.atoms.end(),
                                [&](const CountingAtom& a) { return Evaluate(w, a); });
    const bool round_trip = ok && DecodeTiling(w, ts, init, params.k) == *tiling;
    v.details["witness_checked"] = ok;
    v.details["decode_round_trip"] = round_trip;
    v.details["expected"] = "Sat";
    v.certificates.push_back(WriteFile(options, "witness.struct", FormatStructure(w)));
    v.certificates.push_back(WriteFile(options, "tiling.txt", FormatTiling(ts, *tiling)));
    exp << "Sat\n";
    report << "witness with " << w.domain_size() << " element(s), checked: "
           << (ok ? "yes" : "NO") << ", decodes back: " << (round_trip ? "yes" : "NO") << "\n";
  } else {
    v.details["expected"] = "Unsat";
    exp << "Unsat\n";
    report << "the system admits no tiling of this size\n";
  }
  v.certificates.push_back(WriteFile(options, "expected.txt", exp.str()));
  v.status = Status::kDone;
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict GenerateIncompleteness(std::size_t m, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "generate";
  const IncompletenessInstance inst = MakeIncompletenessInstance(m);
  const Counterexample ce = CounterexampleAssignment(m);
  v.details["kind"] = "incompleteness";
  v.details["m"] = m;
  v.details["atoms"] = inst.phi.size();
  v.details["goals"] = inst.goals.size();
  v.details["underivable_goal"] = ce.zero_index;
  v.details["counterexample_worlds"] = ce.assignment.worlds().size();
  v.certificates.push_back(WriteFile(options, "phi.txt", AtomLines(inst.phi)));
  v.certificates.push_back(WriteFile(options, "goals.txt", AtomLines(inst.goals)));
  v.certificates.push_back(WriteFile(options, "matrix.sys", FormatLinearSystem(inst.matrix)));
  for (std::size_t j = 0; j < inst.goals.size(); ++j) {
    const std::string arg =
        AtomLines(inst.phi) + "Therefore:\n" + RenderSymbolic(inst.goals[j]) + "\n";
    v.certificates.push_back(
        WriteFile(options, "goal-" + std::to_string(j + 1) + ".txt", arg));
  }
  v.certificates.push_back(
      WriteFile(options, "counterexample.txt", FormatAssignment(ce.assignment)));
  std::ostringstream exp;
  exp << "every goal: Valid\n"
      << "goal " << ce.zero_index << ": NotDerivable (counterexample.txt)\n";
  v.certificates.push_back(WriteFile(options, "expected.txt", exp.str()));
  std::ostringstream report;
  report << inst.phi.size() << " atom(s), " << inst.goals.size()
         << " goal(s); goal " << ce.zero_index
         << " has a probabilistic countermodel with " << ce.assignment.worlds().size()
         << " world(s)\n";
  v.status = Status::kDone;
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict Psat(const std::string& instance_path, bool inequalities, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "psat";
  std::vector<PsatConstraint> constraints;
  try {
    constraints = ParsePsat(ReadFile(instance_path));
  } catch (const InputError& e) {
    throw InputError(instance_path + ": " + e.what());
  }
  PsatOptions po;
  po.allow_inequalities = inequalities;
  const PsatResult r = PsatDecide(constraints, po);
  v.details["input"] = instance_path;
  v.details["constraints"] = constraints.size();
  v.details["columns"] = r.columns;
  std::ostringstream report;
  if (r.satisfiable) {
    v.status = Status::kSat;
    const bool ok = CheckPsat(*r.assignment, constraints);
    v.details["assignment_checked"] = ok;
    v.details["worlds"] = r.assignment->worlds().size();
    const std::string text = FormatAssignment(*r.assignment);
    v.certificates.push_back(WriteFile(options, "assignment.txt", text));
    report << "assignment with " << r.assignment->worlds().size()
           << " world(s), checked: " << (ok ? "yes" : "NO") << "\n";
    if (options.explain || r.assignment->worlds().size() <= kInlineModelLimit) report << text;
  } else {
    v.status = Status::kUnsat;
    v.certificates.push_back(WriteFile(
        options, "psat-system.sys",
        "# rational infeasible; one column per class of truth assignments\n" +
            FormatLinearSystem(r.system)));
    report << "no probability assignment; the " << r.columns << "-column LP is infeasible\n";
  }
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict Check(const CheckParams& params, const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "check";
  std::ostringstream report;
  if (!params.system.empty()) {
    const LinearSystem sys = ParseLinearSystem(ReadFile(params.system));
    v.details["mode"] = params.rational ? "system-rational" : "system-natural";
    if (params.rational) {
      v.status = LpFeasible(sys) ? Status::kSat : Status::kUnsat;
    } else {
      // Natural solutions capped at the largest right-hand side.
      Rational cap(1);
      for (const auto& row : sys.rows()) {
        const Rational a = row.rhs.sign() < 0 ? -row.rhs : row.rhs;
        if (a > cap) cap = a;
      }
      const std::int64_t c = Rational(cap.ceil()).to_int64();
      v.details["cap"] = c;
      IlpOptions io;
      io.node_limit = EffectiveBudget(options, io.node_limit);
      io.time_limit_seconds = options.timeout_seconds;
      const std::vector<std::int64_t> upper(sys.num_vars(), c);
      const IlpResult r = IlpSolve(sys, upper, io);
      v.status = r.status == SolveStatus::kFeasible     ? Status::kSat
                 : r.status == SolveStatus::kInfeasible ? Status::kUnsat
                                                        : Status::kUnknown;
    }
    report << sys.num_rows() << " row(s), " << sys.num_vars() << " column(s)\n";
  } else if (!params.derivation.empty()) {
    if (params.formulas.empty()) throw InputError("--derivation needs --formulas");
    const Derivation d = ParseDerivation(ReadFile(params.derivation));
    const ArgumentFile file = LoadArgument(params.formulas, options);
    const bool replayed = ReplayDerivation(d, file.premises);
    const bool matches = !file.conclusion || d->conclusion == *file.conclusion;
    v.details["mode"] = "derivation";
    v.details["replayed"] = replayed;
    v.details["conclusion_matches"] = matches;
    v.status = replayed && matches ? Status::kTrue : Status::kFalse;
    report << "replayed: " << (replayed ? "yes" : "no") << ", proves the conclusion: "
           << (matches ? "yes" : "no") << "\n";
  } else if (!params.assignment.empty()) {
    const ProbabilityAssignment p = ParseAssignment(ReadFile(params.assignment));
    if (!params.psat.empty()) {
      const auto constraints = ParsePsat(ReadFile(params.psat));
      v.details["mode"] = "psat";
      v.status = CheckPsat(p, constraints) ? Status::kTrue : Status::kFalse;
    } else if (!params.formulas.empty()) {
      const ArgumentFile file = LoadArgument(params.formulas, options);
      if (!file.atomic()) throw InputError("the threshold semantics covers single atoms only");
      std::vector<std::pair<std::string, bool>> rows;
      bool all = true;
      for (const auto& a : file.premises) {
        rows.emplace_back(RenderSymbolic(a), ApproxModels(p, a));
        all = all && rows.back().second;
      }
      v.details["mode"] = "threshold";
      v.details["premises"] = AtomResults(rows, report);
      if (file.conclusion) {
        const bool c = ApproxModels(p, *file.conclusion);
        v.details["conclusion"] = c;
        report << "conclusion " << (c ? "holds" : "fails") << ": "
               << RenderSymbolic(*file.conclusion) << "\n";
      }
      v.status = all ? Status::kTrue : Status::kFalse;
    } else {
      throw InputError("--assignment needs --psat or --formulas");
    }
  } else if (!params.structure.empty() && !params.formulas.empty()) {
    const FiniteStructure s = ParseStructure(ReadFile(params.structure));
    const ArgumentFile file = LoadArgument(params.formulas, options);
    std::vector<std::pair<std::string, bool>> rows;
    for (const auto& a : file.premises) rows.emplace_back(RenderSymbolic(a), Evaluate(s, a));
    for (const auto& f : file.formulas) rows.emplace_back(f.str(), Evaluate(s, f));
    const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.second; });
    v.details["mode"] = "structure";
    v.details["domain"] = s.domain_size();
    v.details["premises"] = AtomResults(rows, report);
    if (file.has_conclusion()) {
      const bool c = file.conclusion ? Evaluate(s, *file.conclusion)
                                     : Evaluate(s, *file.conclusion_formula);
      v.details["conclusion"] = c;
      report << "conclusion " << (c ? "holds" : "fails") << "\n";
    }
    v.status = all ? Status::kTrue : Status::kFalse;
  } else {
    throw InputError(
        "check needs STRUCTURE FORMULAS, --system, --derivation or --assignment");
  }
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

Verdict Shrink(const std::string& structure_path, const std::string& formulas_path,
               const Options& options) {
  Timer timer;
  Verdict v;
  v.command = "shrink";
  const FiniteStructure s = ParseStructure(ReadFile(structure_path));
  const ArgumentFile file = LoadArgument(formulas_path, options);
  if (!file.atomic() || file.has_conclusion()) {
    throw InputError("shrink takes a set of single atoms without a conclusion");
  }
  const ShrinkReport r = ShrinkModel(s, file.premises);
  const bool ok = std::all_of(file.premises.begin(), file.premises.end(),
                              [&](const CountingAtom& a) { return Evaluate(r.output, a); });
  const std::uint64_t bound = SizeBound(file.premises);
  v.details["input_size"] = r.input_size;
  v.details["output_size"] = r.output.domain_size();
  v.details["size_bound"] = bound;
  v.details["cell_cap"] = r.cell_cap;
  v.details["witnesses"] = r.witnesses;
  v.details["output_checked"] = ok;
  json cells = json::array();
  for (const auto& c : r.cells) {
    cells.push_back({{"type", c.type}, {"original", c.original}, {"kept", c.kept}});
  }
  v.details["cells"] = cells;
  v.certificates.push_back(WriteFile(options, "shrunk.struct", FormatStructure(r.output)));
  std::ostringstream report;
  report << r.input_size << " -> " << r.output.domain_size() << " element(s) (bound "
         << bound << "), checked: " << (ok ? "yes" : "NO") << "\n";
  v.status = Status::kDone;
  v.report = report.str();
  v.seconds = timer.seconds();
  return v;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reasoning with counting quantifiers", "numsyl"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_flag("--json", options.json, "Print a JSON verdict envelope");
  app.add_option("--out", options.out_dir, "Directory for certificates and generated files")
      ->capture_default_str();
  app.add_option("--budget", options.budget,
                 "Work limit (search nodes or saturation rounds); default from NUMSYL_BUDGET");
  app.add_option("--timeout", options.timeout_seconds, "Wall-clock limit in seconds (0: none)");
  app.add_option("--seed", options.seed, "Seed for randomized generators")->capture_default_str();
  app.add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--explain", options.explain, "Print models and derivations in full");
  app.add_option("--lexicon", options.lexicon, "Lexicon file; selects English input")
      ->check(CLI::ExistingFile);
  app.add_option("--format", options.format, "Input syntax")
      ->check(CLI::IsMember({"auto", "english", "symbolic"}))
      ->capture_default_str();

  std::string input;
  auto* solve = app.add_subcommand("solve", "Decide satisfiability or validity of an argument");
  solve->add_option("file", input, "Argument file")->required()->check(CLI::ExistingFile);
  solve->add_option("--domain-cap", options.domain_cap,
                    "Largest domain for the relational search (default: the size bound)");

  auto* derive = app.add_subcommand("derive", "Search for a derivation in the syllogism calculus");
  derive->add_option("file", input, "Argument file")->required()->check(CLI::ExistingFile);

  auto* generate = app.add_subcommand("generate", "Emit reduction instances with expected answers");
  generate->require_subcommand(1);
  ThreeColParams col;
  auto* gen_col = generate->add_subcommand("3col", "Graph 3-colouring instance");
  gen_col->add_option("--graph", col.graph, "Named graph: k<n>, c<n> or e<n>");
  gen_col->add_option("--graph-file", col.graph_file, "Graph file")->check(CLI::ExistingFile);
  gen_col->add_option("--random", col.random_nodes, "Random graph on this many nodes");
  gen_col->add_option("--density", col.density, "Edge probability of random graphs")
      ->capture_default_str();
  TilingParams tile;
  auto* gen_tile = generate->add_subcommand("tiling", "Exponential tiling instance");
  gen_tile->add_option("--k", tile.k, "Grid side 2^k")->capture_default_str();
  gen_tile->add_option("--colours", tile.colours, "Colours of a random system")
      ->capture_default_str();
  gen_tile->add_option("--init", tile.init_length, "Length of the initial row")
      ->capture_default_str();
  gen_tile->add_option("--system", tile.system_file, "Tiling system file")
      ->check(CLI::ExistingFile);
  std::size_t m = 6;
  auto* gen_inc = generate->add_subcommand("incompleteness", "Calculus incompleteness instance");
  gen_inc->add_option("--m", m, "Rows of the unique-solution system (>= 6)")
      ->capture_default_str();

  bool inequalities = false;
  auto* psat = app.add_subcommand("psat", "Probabilistic satisfiability");
  psat->add_option("file", input, "Constraint file")->required()->check(CLI::ExistingFile);
  psat->add_flag("--inequalities", inequalities, "Accept <= and >= constraints");

  CheckParams chk;
  auto* check = app.add_subcommand("check", "Re-check models, systems and derivations");
  check->add_option("structure", chk.structure, "Structure file")->check(CLI::ExistingFile);
  check->add_option("formulas,--formulas", chk.formulas, "Formula or argument file")
      ->check(CLI::ExistingFile);
  check->add_option("--system", chk.system, "Linear system to re-solve")
      ->check(CLI::ExistingFile);
  check->add_flag("--rational", chk.rational, "Solve the system over the rationals");
  check->add_option("--derivation", chk.derivation, "Derivation to replay")
      ->check(CLI::ExistingFile);
  check->add_option("--assignment", chk.assignment, "Probability assignment")
      ->check(CLI::ExistingFile);
  check->add_option("--psat", chk.psat, "PSAT constraints for --assignment")
      ->check(CLI::ExistingFile);

  std::string shrink_structure;
  std::string shrink_formulas;
  auto* shrink = app.add_subcommand("shrink", "Shrink a model of relational atoms");
  shrink->add_option("structure", shrink_structure, "Structure file")
      ->required()
      ->check(CLI::ExistingFile);
  shrink->add_option("formulas", shrink_formulas, "Atom file")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Verdict v;
  try {
    if (*solve) {
      v = Solve(input, options);
    } else if (*derive) {
      v = Derive(input, options);
    } else if (*gen_col) {
      v = GenerateThreeCol(col, options);
    } else if (*gen_tile) {
      v = GenerateTiling(tile, options);
    } else if (*gen_inc) {
      v = GenerateIncompleteness(m, options);
    } else if (*psat) {
      v = Psat(input, inequalities, options);
    } else if (*check) {
      // One positional is taken as the formula file for the other modes.
      if (chk.formulas.empty() && !chk.structure.empty() && chk.system.empty() &&
          (!chk.derivation.empty() || !chk.assignment.empty())) {
        std::swap(chk.structure, chk.formulas);
      }
      v = Check(chk, options);
    } else if (*shrink) {
      v = Shrink(shrink_structure, shrink_formulas, options);
    }
  } catch (const InputError& e) {
    v = Verdict{};
    v.command = app.get_subcommands().front()->get_name();
    v.status = Status::kError;
    v.details["error"] = e.what();
  } catch (const CapExceeded& e) {
    v = Verdict{};
    v.command = app.get_subcommands().front()->get_name();
    v.status = Status::kUnknown;
    v.details["error"] = e.what();
    v.report = std::string("size limit: ") + e.what() + "\n";
  }
  if (options.json) {
    out << ToJson(v).dump(2) << "\n";
  } else if (v.status == Status::kError) {
    err << "error: " << v.details["error"].get<std::string>() << "\n";
  } else {
    out << ToText(v);
  }
  return ExitCode(v.status);
}

}  // namespace numsyl::cli
