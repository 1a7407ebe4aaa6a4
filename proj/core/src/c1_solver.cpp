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

#include "numsyl/c1_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "numsyl/error.hpp"
#include "numsyl/sparsify.hpp"

namespace numsyl {

std::string_view SatStatusName(SatStatus s) {
  switch (s) {
    case SatStatus::kSat:
      return "sat";
    case SatStatus::kUnsat:
      return "unsat";
    case SatStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string_view EntailStatusName(EntailStatus s) {
  switch (s) {
    case EntailStatus::kValid:
      return "valid";
    case EntailStatus::kInvalid:
      return "invalid";
    case EntailStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

C1Formula NormalC1::ToFormula() const {
  std::vector<C1Formula> parts;
  for (const auto& c : conjuncts) {
    parts.push_back(C1Formula::Count(c.comparison, c.bound, c.body));
  }
  return C1Formula::And(std::move(parts));
}

std::string SatCertificate::str() const {
  std::ostringstream out;
  out << "branch " << branch << "\npredicates";
  for (const auto& p : predicates) out << " " << p;
  out << "\n";
  for (std::size_t i = 0; i < types.size(); ++i) {
    out << types[i] << " " << counts[i] << "\n";
  }
  return out.str();
}

namespace {

using K = C1Formula::Kind;

// ---------------------------------------------------------------------------
// Normalization

C1Formula ExpandExactly(const C1Formula& f) {
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
    case K::kAtom:
      return f;
    case K::kNot:
      return C1Formula::Not(ExpandExactly(f.body()));
    case K::kAnd:
    case K::kOr: {
      std::vector<C1Formula> kids;
      for (const auto& c : f.children()) kids.push_back(ExpandExactly(c));
      return f.kind() == K::kAnd ? C1Formula::And(std::move(kids))
                                 : C1Formula::Or(std::move(kids));
    }
    case K::kCount: {
      C1Formula body = ExpandExactly(f.body());
      if (f.comparison() != Comparison::kExactly) {
        return C1Formula::Count(f.comparison(), f.bound(), body);
      }
      return C1Formula::And({C1Formula::Count(Comparison::kAtLeast, f.bound(), body),
                             C1Formula::Count(Comparison::kAtMost, f.bound(), body)});
    }
  }
  return f;
}

// The single counting quantifier equivalent to the negation of `count`
// (at-least/at-most only), or a constant.
C1Formula DualCount(const C1Formula& count) {
  if (count.comparison() == Comparison::kAtLeast) {
    if (count.bound() == 0) return C1Formula::Constant(false);
    return C1Formula::Count(Comparison::kAtMost, count.bound() - 1, count.body());
  }
  return C1Formula::Count(Comparison::kAtLeast, count.bound() + 1, count.body());
}

C1Formula Simplify(const C1Formula& f) {
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
    case K::kAtom:
      return f;
    case K::kNot: {
      const C1Formula b = Simplify(f.body());
      if (b.kind() == K::kTrue) return C1Formula::Constant(false);
      if (b.kind() == K::kFalse) return C1Formula::Constant(true);
      if (b.kind() == K::kNot) return b.body();
      if (b.kind() == K::kCount) return Simplify(DualCount(b));
      return C1Formula::Not(b);
    }
    case K::kAnd:
    case K::kOr: {
      const bool is_and = f.kind() == K::kAnd;
      const K absorbing = is_and ? K::kFalse : K::kTrue;
      const K neutral = is_and ? K::kTrue : K::kFalse;
      std::vector<C1Formula> kids;
      for (const auto& c : f.children()) {
        C1Formula s = Simplify(c);
        if (s.kind() == absorbing) return s;
        if (s.kind() == neutral) continue;
        if (s.kind() == f.kind()) {
          kids.insert(kids.end(), s.children().begin(), s.children().end());
        } else {
          kids.push_back(s);
        }
      }
      return is_and ? C1Formula::And(std::move(kids)) : C1Formula::Or(std::move(kids));
    }
    case K::kCount: {
      const C1Formula b = Simplify(f.body());
      const bool at_least = f.comparison() == Comparison::kAtLeast;
      if (at_least && f.bound() == 0) return C1Formula::Constant(true);
      if (b.kind() == K::kFalse) return C1Formula::Constant(!at_least || f.bound() == 0);
      return C1Formula::Count(f.comparison(), f.bound(), b);
    }
  }
  return f;
}

// Leftmost counting subformula with a quantifier-free body, not counting
// `f` itself when it is already normal.
const C1Formula* FindEmbedded(const C1Formula& f, bool top) {
  if (f.kind() == K::kCount && f.body().quantifier_free()) {
    return top ? nullptr : &f;
  }
  for (const auto& c : f.children()) {
    if (const C1Formula* hit = FindEmbedded(c, false)) return hit;
  }
  return nullptr;
}

C1Formula Replace(const C1Formula& f, const C1Formula& target, bool value) {
  if (f.kind() == K::kCount && f == target) return C1Formula::Constant(value);
  switch (f.kind()) {
    case K::kNot:
      return C1Formula::Not(Replace(f.body(), target, value));
    case K::kAnd:
    case K::kOr: {
      std::vector<C1Formula> kids;
      for (const auto& c : f.children()) kids.push_back(Replace(c, target, value));
      return f.kind() == K::kAnd ? C1Formula::And(std::move(kids))
                                 : C1Formula::Or(std::move(kids));
    }
    case K::kCount:
      return C1Formula::Count(f.comparison(), f.bound(),
                              Replace(f.body(), target, value));
    default:
      return f;
  }
}

class Normalizer {
 public:
  explicit Normalizer(const NormalizeOptions& options) : options_(options) {}

  std::vector<NormalC1> Run(std::vector<C1Formula> conjuncts) {
    Expand(std::move(conjuncts), 0);
    return std::move(out_);
  }

 private:
  // Simplifies and splits top-level conjunctions; false when some conjunct is
  // constant false.
  static bool Flatten(std::vector<C1Formula>& conjuncts) {
    std::vector<C1Formula> flat;
    std::vector<C1Formula> stack(conjuncts.rbegin(), conjuncts.rend());
    while (!stack.empty()) {
      C1Formula f = Simplify(stack.back());
      stack.pop_back();
      if (f.kind() == K::kFalse) return false;
      if (f.kind() == K::kTrue) continue;
      if (f.kind() == K::kAnd) {
        for (auto it = f.children().rbegin(); it != f.children().rend(); ++it) {
          stack.push_back(*it);
        }
        continue;
      }
      if (std::find(flat.begin(), flat.end(), f) == flat.end()) flat.push_back(f);
    }
    conjuncts = std::move(flat);
    return true;
  }

  void Expand(std::vector<C1Formula> conjuncts, std::size_t depth) {
    if (!Flatten(conjuncts)) return;
    const C1Formula* psi = nullptr;
    for (const auto& c : conjuncts) {
      if (c.kind() != K::kCount && c.quantifier_free()) {
        throw InputError("formula is not closed: " + c.str());
      }
      if ((psi = FindEmbedded(c, true)) != nullptr) break;
    }
    if (psi == nullptr) {
      NormalC1 normal;
      for (const auto& c : conjuncts) {
        normal.conjuncts.push_back({c.comparison(), c.bound(), c.body()});
      }
      if (out_.size() >= options_.max_branches) {
        throw CapExceeded("normalization produced more than " +
                          std::to_string(options_.max_branches) + " branches");
      }
      out_.push_back(std::move(normal));
      return;
    }
    if (depth >= options_.max_depth) {
      throw CapExceeded("quantifier case split deeper than " +
                        std::to_string(options_.max_depth));
    }
    const C1Formula target = *psi;
    for (bool value : {true, false}) {
      std::vector<C1Formula> next;
      next.reserve(conjuncts.size() + 1);
      for (const auto& c : conjuncts) next.push_back(Replace(c, target, value));
      next.push_back(value ? target : DualCount(target));
      Expand(std::move(next), depth + 1);
    }
  }

  NormalizeOptions options_;
  std::vector<NormalC1> out_;
};

// ---------------------------------------------------------------------------
// Quantifier-free bodies compiled against a predicate index.

class Compiled {
 public:
  Compiled(const C1Formula& f, const std::vector<std::string>& predicates) {
    Emit(f, predicates);
  }

  bool Eval(std::uint64_t mask) const {
    std::size_t pc = 0;
    return EvalAt(pc, mask);
  }

  // Kleene value under a partial assignment: 0 false, 1 true, 2 unknown.
  int Kleene(std::uint64_t assigned, std::uint64_t values) const {
    std::size_t pc = 0;
    return KleeneAt(pc, assigned, values);
  }

  std::uint64_t support() const { return support_; }

 private:
  enum Op : std::uint8_t { kConstFalse, kConstTrue, kVar, kNot, kAnd, kOr };
  struct Instr {
    Op op;
    std::uint32_t arg;  // variable index or child count
  };

  void Emit(const C1Formula& f, const std::vector<std::string>& predicates) {
    switch (f.kind()) {
      case K::kTrue:
        code_.push_back({kConstTrue, 0});
        return;
      case K::kFalse:
        code_.push_back({kConstFalse, 0});
        return;
      case K::kAtom: {
        const auto it = std::find(predicates.begin(), predicates.end(), f.predicate());
        const auto idx = static_cast<std::uint32_t>(it - predicates.begin());
        support_ |= std::uint64_t{1} << idx;
        code_.push_back({kVar, idx});
        return;
      }
      case K::kNot:
        code_.push_back({kNot, 1});
        Emit(f.body(), predicates);
        return;
      case K::kAnd:
      case K::kOr:
        code_.push_back({f.kind() == K::kAnd ? kAnd : kOr,
                         static_cast<std::uint32_t>(f.children().size())});
        for (const auto& c : f.children()) Emit(c, predicates);
        return;
      case K::kCount:
        throw std::logic_error("counting quantifier in a quantifier-free body");
    }
  }

  void Skip(std::size_t& pc) const {
    const Instr in = code_[pc++];
    if (in.op == kNot || in.op == kAnd || in.op == kOr) {
      for (std::uint32_t i = 0; i < in.arg; ++i) Skip(pc);
    }
  }

  bool EvalAt(std::size_t& pc, std::uint64_t mask) const {
    const Instr in = code_[pc++];
    switch (in.op) {
      case kConstFalse:
        return false;
      case kConstTrue:
        return true;
      case kVar:
        return ((mask >> in.arg) & 1U) != 0;
      case kNot:
        return !EvalAt(pc, mask);
      case kAnd:
      case kOr: {
        const bool absorbing = in.op == kOr;
        for (std::uint32_t i = 0; i < in.arg; ++i) {
          if (EvalAt(pc, mask) == absorbing) {
            for (std::uint32_t k = i + 1; k < in.arg; ++k) Skip(pc);
            return absorbing;
          }
        }
        return !absorbing;
      }
    }
    return false;
  }

  int KleeneAt(std::size_t& pc, std::uint64_t assigned, std::uint64_t values) const {
    const Instr in = code_[pc++];
    switch (in.op) {
      case kConstFalse:
        return 0;
      case kConstTrue:
        return 1;
      case kVar:
        if (((assigned >> in.arg) & 1U) == 0) return 2;
        return static_cast<int>((values >> in.arg) & 1U);
      case kNot: {
        const int v = KleeneAt(pc, assigned, values);
        return v == 2 ? 2 : 1 - v;
      }
      case kAnd:
      case kOr: {
        const int absorbing = in.op == kOr ? 1 : 0;
        bool unknown = false;
        for (std::uint32_t i = 0; i < in.arg; ++i) {
          const int v = KleeneAt(pc, assigned, values);
          if (v == absorbing) {
            for (std::uint32_t k = i + 1; k < in.arg; ++k) Skip(pc);
            return absorbing;
          }
          if (v == 2) unknown = true;
        }
        return unknown ? 2 : 1 - absorbing;
      }
    }
    return 2;
  }

  std::vector<Instr> code_;
  std::uint64_t support_ = 0;
};

struct RowSpec {
  Relation relation;
  std::int64_t bound;
  std::size_t conjunct;
};

// Live 1-types: depth-first over predicates from the highest bit down, so
// leaves appear in ascending mask order.
class LiveTypes {
 public:
  LiveTypes(std::size_t num_predicates, const std::vector<const Compiled*>& zero_rows,
            std::size_t max_columns)
      : l_(num_predicates), max_columns_(max_columns), by_var_(num_predicates) {
    for (const Compiled* c : zero_rows) {
      // A row is rechecked whenever one of its variables gets assigned.
      if (c->support() == 0) {
        constant_rows_.push_back(c);
      } else {
        for (std::size_t v = 0; v < l_; ++v) {
          if ((c->support() >> v) & 1U) by_var_[v].push_back(c);
        }
      }
    }
  }

  std::vector<std::uint64_t> Run() {
    for (const Compiled* c : constant_rows_) {
      if (c->Eval(0)) return {};
    }
    if (l_ == 0) return {0};
    Recurse(l_, 0, 0);
    return std::move(out_);
  }

 private:
  void Recurse(std::size_t remaining, std::uint64_t assigned, std::uint64_t values) {
    if (remaining == 0) {
      if (out_.size() >= max_columns_) {
        throw CapExceeded("more than " + std::to_string(max_columns_) +
                          " live 1-types");
      }
      out_.push_back(values);
      return;
    }
    const std::size_t var = remaining - 1;
    const std::uint64_t bit = std::uint64_t{1} << var;
    for (std::uint64_t v : {std::uint64_t{0}, bit}) {
      const std::uint64_t a = assigned | bit;
      const std::uint64_t vals = values | v;
      bool dead = false;
      for (const Compiled* c : by_var_[var]) {
        if (c->Kleene(a, vals) == 1) {
          dead = true;
          break;
        }
      }
      if (!dead) Recurse(remaining - 1, a, vals);
    }
  }

  std::size_t l_;
  std::size_t max_columns_;
  std::vector<std::vector<const Compiled*>> by_var_;
  std::vector<const Compiled*> constant_rows_;
  std::vector<std::uint64_t> out_;
};

}  // namespace

std::vector<NormalC1> Normalize(std::span<const C1Formula> formulas,
                                const NormalizeOptions& options) {
  std::vector<C1Formula> conjuncts;
  for (const auto& f : formulas) conjuncts.push_back(ExpandExactly(f));
  return Normalizer(options).Run(std::move(conjuncts));
}

TypeSystem BuildSystem(const NormalC1& normal, const BuildOptions& options) {
  TypeSystem ts;
  for (const auto& c : normal.conjuncts) {
    if (!c.body.quantifier_free()) {
      throw InputError("normal conjunct with a quantified body");
    }
    if (c.bound < 0) throw InputError("normal conjunct with a negative bound");
    c.body.CollectPredicates(ts.predicates);
  }
  if (ts.predicates.size() > options.max_predicates) {
    throw CapExceeded(std::to_string(ts.predicates.size()) +
                      " predicates exceed the cap of " +
                      std::to_string(options.max_predicates));
  }
  std::vector<Compiled> bodies;
  bodies.reserve(normal.conjuncts.size());
  for (const auto& c : normal.conjuncts) bodies.emplace_back(c.body, ts.predicates);

  std::vector<const Compiled*> zero_rows;
  std::vector<RowSpec> rows;
  for (std::size_t i = 0; i < normal.conjuncts.size(); ++i) {
    const auto& c = normal.conjuncts[i];
    const bool has_le = c.comparison != Comparison::kAtLeast;
    const bool has_ge = c.comparison != Comparison::kAtMost;
    if (has_ge && c.bound > 0) rows.push_back({Relation::kGreaterEqual, c.bound, i});
    if (has_le) {
      if (c.bound == 0) {
        zero_rows.push_back(&bodies[i]);
      } else {
        rows.push_back({Relation::kLessEqual, c.bound, i});
      }
    }
  }
  ts.columns = LiveTypes(ts.predicates.size(), zero_rows, options.max_columns).Run();

  ts.system = LinearSystem(ts.columns.size());
  for (const RowSpec& spec : rows) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    const Compiled& body = bodies[spec.conjunct];
    for (std::size_t j = 0; j < ts.columns.size(); ++j) {
      if (body.Eval(ts.columns[j])) terms.emplace_back(j, 1);
    }
    ts.system.AddSparseRow(std::move(terms), spec.relation, spec.bound);
    ts.row_origin.push_back(spec.conjunct);
    ts.cap = std::max(ts.cap, spec.bound);
  }
  std::vector<std::pair<std::size_t, Rational>> all;
  for (std::size_t j = 0; j < ts.columns.size(); ++j) all.emplace_back(j, 1);
  ts.system.AddSparseRow(std::move(all), Relation::kGreaterEqual, 1);
  ts.row_origin.push_back(SIZE_MAX);
  return ts;
}

namespace {

// Column indices kept after removing dominated columns. Column a dominates b
// when a has every >=-row that b has and no <=-row that b lacks; moving b's
// mass onto a and recapping keeps any solution feasible.
std::vector<std::size_t> UndominatedColumns(const LinearSystem& sys) {
  const std::size_t n = sys.num_vars();
  const std::size_t words = (sys.num_rows() + 63) / 64;
  std::vector<std::uint64_t> ge(n * words, 0);
  std::vector<std::uint64_t> le(n * words, 0);
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    const auto& row = sys.row(i);
    auto& target = row.relation == Relation::kLessEqual ? le : ge;
    for (const auto& t : row.terms) {
      target[t.first * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  auto pop = [&](const std::vector<std::uint64_t>& v, std::size_t j) {
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) c += std::popcount(v[j * words + w]);
    return c;
  };
  std::vector<std::size_t> order(n);
  std::vector<int> ge_count(n);
  std::vector<int> le_count(n);
  for (std::size_t j = 0; j < n; ++j) {
    order[j] = j;
    ge_count[j] = pop(ge, j);
    le_count[j] = pop(le, j);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ge_count[a] != ge_count[b]) return ge_count[a] > ge_count[b];
    return le_count[a] < le_count[b];
  });
  std::vector<std::size_t> kept;
  for (std::size_t b : order) {
    bool dominated = false;
    for (std::size_t a : kept) {
      bool ok = true;
      for (std::size_t w = 0; w < words && ok; ++w) {
        ok = (ge[b * words + w] & ~ge[a * words + w]) == 0 &&
             (le[a * words + w] & ~le[b * words + w]) == 0;
      }
      if (ok) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(b);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct BranchOutcome {
  SatStatus status = SatStatus::kUnknown;
  TypeSystem types;
  std::vector<std::size_t> columns;  // indices into types.columns
  NaturalVector counts;
  std::uint64_t nodes = 0;
};

BranchOutcome SolveBranch(const NormalC1& normal, const SolverOptions& options,
                          const std::atomic<bool>* cancel) {
  BranchOutcome out;
  out.types = BuildSystem(normal, options.build);
  const std::vector<std::size_t> kept = UndominatedColumns(out.types.system);
  const LinearSystem reduced = out.types.system.SelectColumns(kept);
  const NaturalVector upper(kept.size(), out.types.cap);
  IlpOptions ilp = options.ilp;
  if (cancel != nullptr) ilp.cancel = cancel;
  IlpResult r = IlpSolve(reduced, upper, ilp);
  out.nodes = r.nodes;
  if (r.status == SolveStatus::kInfeasible) {
    out.status = SatStatus::kUnsat;
    return out;
  }
  if (r.status == SolveStatus::kUnknown) return out;
  NaturalVector alpha = std::move(r.solution);
  if (options.sparsify_certificate) {
    LinearSystem eq(reduced.num_vars());
    for (std::size_t i = 0; i < reduced.num_rows(); ++i) {
      const Rational activity =
          reduced.RowValue(i, ToRational(std::span<const std::int64_t>(alpha)));
      eq.AddSparseRow(reduced.row(i).terms, Relation::kEqual, activity);
    }
    try {
      alpha = SparsifyNatural(eq, alpha);
    } catch (const CapExceeded&) {
      // Keep the unreduced solution.
    }
    for (auto& v : alpha) v = std::min(v, out.types.cap);
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (alpha[k] > 0) {
      out.columns.push_back(kept[k]);
      out.counts.push_back(alpha[k]);
    }
  }
  out.status = SatStatus::kSat;
  return out;
}

FiniteStructure Materialize(const TypeSystem& types,
                            const std::vector<std::size_t>& columns,
                            const NaturalVector& counts,
                            const std::vector<std::string>& all_predicates) {
  std::size_t n = 0;
  for (auto c : counts) n += static_cast<std::size_t>(c);
  FiniteStructure s(n);
  for (const auto& p : all_predicates) s.DeclareUnary(p);
  for (const auto& p : types.predicates) s.DeclareUnary(p);
  std::size_t next = 0;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const std::uint64_t mask = types.columns[columns[k]];
    for (std::int64_t e = 0; e < counts[k]; ++e, ++next) {
      for (std::size_t i = 0; i < types.predicates.size(); ++i) {
        if ((mask >> i) & 1U) s.AddToUnary(types.predicates[i], next);
      }
    }
  }
  return s;
}

SatResult DecideSatImpl(std::span<const C1Formula> formulas,
                        const std::vector<std::string>& all_predicates,
                        const SolverOptions& options) {
  SatResult result;
  const std::vector<NormalC1> branches = Normalize(formulas, options.normalize);
  result.branches = branches.size();
  const std::size_t nb = branches.size();
  std::vector<std::optional<BranchOutcome>> outcomes(nb);
  std::vector<std::atomic<bool>> cancel(nb);
  for (auto& c : cancel) c.store(false);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_sat{SIZE_MAX};
  std::mutex error_mu;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= nb) return;
      if (i > best_sat.load()) continue;
      try {
        BranchOutcome o = SolveBranch(branches[i], options, &cancel[i]);
        if (o.status == SatStatus::kSat) {
          std::size_t cur = best_sat.load();
          while (i < cur && !best_sat.compare_exchange_weak(cur, i)) {
          }
          for (std::size_t k = i + 1; k < nb; ++k) cancel[k].store(true);
        }
        outcomes[i] = std::move(o);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        for (auto& c : cancel) c.store(true);
        next.store(nb);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, nb));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  bool unknown = false;
  for (std::size_t i = 0; i < nb; ++i) {
    if (!outcomes[i]) {
      // Skipped only because a lower branch was satisfiable.
      continue;
    }
    result.nodes += outcomes[i]->nodes;
    if (outcomes[i]->status == SatStatus::kSat && i == best_sat.load()) {
      BranchOutcome& o = *outcomes[i];
      FiniteStructure w = Materialize(o.types, o.columns, o.counts, all_predicates);
      for (const auto& f : formulas) {
        if (!Evaluate(w, f)) {
          throw std::logic_error("constructed witness fails " + f.str());
        }
      }
      SatCertificate cert;
      cert.branch = i;
      cert.predicates = o.types.predicates;
      for (std::size_t k = 0; k < o.columns.size(); ++k) {
        cert.types.push_back(o.types.columns[o.columns[k]]);
      }
      cert.counts = o.counts;
      result.status = SatStatus::kSat;
      result.witness = std::move(w);
      result.certificate = std::move(cert);
      return result;
    }
    if (i < best_sat.load() && outcomes[i]->status == SatStatus::kUnknown) {
      unknown = true;
    }
  }
  result.status = unknown ? SatStatus::kUnknown : SatStatus::kUnsat;
  return result;
}

}  // namespace

SatResult DecideSat(std::span<const C1Formula> formulas,
                    const SolverOptions& options) {
  std::vector<std::string> preds;
  for (const auto& f : formulas) f.CollectPredicates(preds);
  return DecideSatImpl(formulas, preds, options);
}

SatResult DecideSat(std::span<const CountingAtom> atoms,
                    const SolverOptions& options) {
  std::vector<C1Formula> formulas;
  std::vector<std::string> preds;
  for (const auto& a : atoms) {
    formulas.push_back(ToC1(a));
    for (auto& p : a.unary_predicates()) {
      if (std::find(preds.begin(), preds.end(), p) == preds.end()) preds.push_back(p);
    }
  }
  return DecideSatImpl(formulas, preds, options);
}

namespace {

EntailResult FromCheck(SatResult check) {
  EntailResult r;
  r.check = std::move(check);
  switch (r.check.status) {
    case SatStatus::kUnsat:
      r.status = EntailStatus::kValid;
      break;
    case SatStatus::kSat:
      r.status = EntailStatus::kInvalid;
      break;
    case SatStatus::kUnknown:
      r.status = EntailStatus::kUnknown;
      break;
  }
  return r;
}

}  // namespace

EntailResult Entails(std::span<const CountingAtom> premises,
                     const CountingAtom& conclusion,
                     const SolverOptions& options) {
  std::vector<CountingAtom> atoms(premises.begin(), premises.end());
  atoms.push_back(NegateAtom(conclusion));
  return FromCheck(DecideSat(std::span<const CountingAtom>(atoms), options));
}

EntailResult Entails(std::span<const C1Formula> premises, const C1Formula& conclusion,
                     const SolverOptions& options) {
  std::vector<C1Formula> formulas(premises.begin(), premises.end());
  formulas.push_back(C1Formula::Not(conclusion));
  return FromCheck(DecideSat(std::span<const C1Formula>(formulas), options));
}

}  // namespace numsyl
