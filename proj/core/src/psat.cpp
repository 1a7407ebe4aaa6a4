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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "numsyl/error.hpp"
#include "numsyl/simplex.hpp"
#include "numsyl/sparsify.hpp"
#include "numsyl/syllogism.hpp"

namespace numsyl {

ProbabilityAssignment::ProbabilityAssignment(std::vector<std::string> letters,
                                             std::vector<World> worlds,
                                             std::optional<std::int64_t> scale)
    : letters_(std::move(letters)) {
  if (letters_.size() > kMaxLetters) {
    throw InputError("at most 64 proposition letters are supported");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!index_.emplace(letters_[i], i).second) {
      throw InputError("repeated letter '" + letters_[i] + "'");
    }
  }
  const std::uint64_t mask = letters_.size() == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << letters_.size()) - 1;
  std::map<std::uint64_t, Rational> merged;
  Rational total;
  for (const World& w : worlds) {
    if (w.weight.sign() < 0) throw InputError("negative world weight");
    if ((w.assignment & ~mask) != 0) {
      throw InputError("world assigns a letter outside the signature");
    }
    total += w.weight;
    if (!w.weight.is_zero()) merged[w.assignment] += w.weight;
  }
  if (total != Rational(1)) {
    throw InputError("world weights sum to " + total.str() + ", not 1");
  }
  for (auto& [a, wt] : merged) worlds_.push_back(World{a, wt});
  set_scale(scale);
}

void ProbabilityAssignment::set_scale(std::optional<std::int64_t> scale) {
  if (scale && *scale <= 0) throw InputError("scale must be positive");
  scale_ = scale;
}

std::size_t ProbabilityAssignment::Index(const std::string& letter) const {
  auto it = index_.find(letter);
  if (it == index_.end()) throw InputError("unknown letter '" + letter + "'");
  return it->second;
}

bool ProbabilityAssignment::Satisfies(std::uint64_t assignment,
                                      const C1Formula& f) const {
  using Kind = C1Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAtom:
      return ((assignment >> Index(f.predicate())) & 1U) != 0;
    case Kind::kNot:
      return !Satisfies(assignment, f.body());
    case Kind::kAnd:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const C1Formula& c) { return Satisfies(assignment, c); });
    case Kind::kOr:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const C1Formula& c) { return Satisfies(assignment, c); });
    case Kind::kCount:
      break;
  }
  throw InputError("probabilities are defined for quantifier-free formulas only");
}

Rational ProbabilityAssignment::Prob(const C1Formula& f) const {
  // Resolve letters up front so unknown ones fail even with no worlds.
  std::vector<std::string> preds;
  f.CollectPredicates(preds);
  for (const auto& p : preds) Index(p);
  Rational sum;
  for (const World& w : worlds_) {
    if (Satisfies(w.assignment, f)) sum += w.weight;
  }
  return sum;
}

Rational ProbabilityAssignment::Prob(const Literal& a, const Literal& b) const {
  return Prob(C1Formula::And({C1Formula::Lit(a), C1Formula::Lit(b)}));
}

bool ApproxModels(const ProbabilityAssignment& p, const CountingAtom& atom) {
  if (!p.scale()) throw InputError("the assignment carries no scale");
  if (!atom.is_unary()) {
    throw InputError("threshold semantics covers unary atoms only: " + atom.str());
  }
  const Rational prob = p.Prob(atom.unary().first, atom.unary().second);
  const Rational threshold(BigInt(atom.bound()), BigInt(*p.scale()));
  return atom.direction() == Direction::kAtLeast ? prob >= threshold
                                                 : prob <= threshold;
}

ProbabilityAssignment FlatAssignment(const FiniteStructure& s,
                                     std::vector<std::string> letters) {
  const std::size_t n = s.domain_size();
  if (n == 0) throw InputError("empty domain has no flat assignment");
  if (letters.size() > ProbabilityAssignment::kMaxLetters) {
    throw InputError("at most 64 proposition letters are supported");
  }
  std::vector<World> worlds(n, World{0, Rational(BigInt(1), BigInt(n))});
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!s.interprets_unary(letters[i])) continue;
    for (std::size_t e : s.unary(letters[i]).elements()) {
      worlds[e].assignment |= std::uint64_t{1} << i;
    }
  }
  return ProbabilityAssignment(std::move(letters), std::move(worlds),
                               static_cast<std::int64_t>(n));
}

// ---------------------------------------------------------------------------
// PSAT

namespace {

bool Holds(const Rational& value, Relation rel, const Rational& q) {
  switch (rel) {
    case Relation::kLessEqual:
      return value <= q;
    case Relation::kGreaterEqual:
      return value >= q;
    case Relation::kEqual:
      return value == q;
  }
  return false;
}

C1Formula ClauseFormula(const std::vector<Literal>& clause) {
  if (clause.empty()) return C1Formula::Constant(false);
  std::vector<C1Formula> lits;
  for (const auto& l : clause) lits.push_back(C1Formula::Lit(l));
  return C1Formula::Or(std::move(lits));
}

}  // namespace

bool CheckPsat(const ProbabilityAssignment& p,
               std::span<const PsatConstraint> constraints) {
  for (const auto& c : constraints) {
    if (!Holds(p.Prob(ClauseFormula(c.clause)), c.relation, c.probability)) {
      return false;
    }
  }
  return true;
}

PsatResult PsatDecide(std::span<const PsatConstraint> constraints,
                      const PsatOptions& options) {
  std::vector<std::string> letters;
  for (const auto& c : constraints) {
    if (c.relation != Relation::kEqual && !options.allow_inequalities) {
      throw InputError("inequality constraints need the inequality extension");
    }
    if (c.probability.sign() < 0 || c.probability > Rational(1)) {
      throw InputError("probability " + c.probability.str() + " is outside [0,1]");
    }
    for (const auto& l : c.clause) {
      if (std::find(letters.begin(), letters.end(), l.predicate) == letters.end()) {
        letters.push_back(l.predicate);
      }
    }
  }
  if (letters.size() > options.max_letters) {
    throw CapExceeded("PSAT instance has " + std::to_string(letters.size()) +
                      " letters; the cap is " + std::to_string(options.max_letters));
  }
  // Clause i as (positive mask, negative mask) over letter bits.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const auto& c : constraints) {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    for (const auto& l : c.clause) {
      const auto bit = std::uint64_t{1} << static_cast<std::size_t>(
                           std::find(letters.begin(), letters.end(), l.predicate) -
                           letters.begin());
      (l.positive ? pos : neg) |= bit;
    }
    masks.emplace_back(pos, neg);
  }
  // Atoms that satisfy the same clauses are interchangeable; keep one each.
  std::map<std::vector<bool>, std::uint64_t> groups;
  const std::uint64_t num_atoms = std::uint64_t{1} << letters.size();
  for (std::uint64_t a = 0; a < num_atoms; ++a) {
    std::vector<bool> sig(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      sig[i] = (a & masks[i].first) != 0 || (~a & masks[i].second) != 0;
    }
    groups.emplace(std::move(sig), a);
  }
  std::vector<std::vector<bool>> sigs;
  std::vector<std::uint64_t> reps;
  for (auto& [sig, rep] : groups) {
    sigs.push_back(sig);
    reps.push_back(rep);
  }
  const std::size_t cols = reps.size();
  auto build = [&](std::span<const Relation> rels, std::span<const Rational> rhs) {
    LinearSystem sys(cols);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (std::size_t c = 0; c < cols; ++c) {
        if (sigs[c][i]) terms.emplace_back(c, Rational(1));
      }
      sys.AddSparseRow(std::move(terms), rels[i], rhs[i]);
    }
    std::vector<std::pair<std::size_t, Rational>> all;
    for (std::size_t c = 0; c < cols; ++c) all.emplace_back(c, Rational(1));
    sys.AddSparseRow(std::move(all), Relation::kEqual, Rational(1));
    return sys;
  };
  std::vector<Relation> rels;
  RationalVector rhs;
  for (const auto& c : constraints) {
    rels.push_back(c.relation);
    rhs.push_back(c.probability);
  }
  PsatResult result;
  result.columns = cols;
  const LinearSystem lp = build(rels, rhs);
  result.system = lp;
  const auto x = LpFeasible(lp);
  if (!x) return result;
  // Pin inequality rows at their achieved values so support reduction
  // applies to a pure equation system.
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i] != Relation::kEqual) {
      rhs[i] = lp.RowValue(i, *x);
      rels[i] = Relation::kEqual;
    }
  }
  const RationalVector y = SparsifyRational(build(rels, rhs), *x);
  std::vector<World> worlds;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!y[c].is_zero()) worlds.push_back(World{reps[c], y[c]});
  }
  ProbabilityAssignment p(letters, std::move(worlds));
  if (!CheckPsat(p, constraints) || p.worlds().size() > constraints.size() + 1) {
    throw std::logic_error("PSAT assignment failed verification");
  }
  result.satisfiable = true;
  result.assignment = std::move(p);
  return result;
}

std::vector<PsatConstraint> ParsePsat(std::string_view text) {
  std::vector<PsatConstraint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw InputError(where + "expected 'clause ; value'");
    PsatConstraint c;
    std::string clause = trim(line.substr(0, semi));
    std::string value = trim(line.substr(semi + 1));
    if (value.rfind("<=", 0) == 0) {
      c.relation = Relation::kLessEqual;
      value = trim(value.substr(2));
    } else if (value.rfind(">=", 0) == 0) {
      c.relation = Relation::kGreaterEqual;
      value = trim(value.substr(2));
    } else if (value.rfind("=", 0) == 0) {
      value = trim(value.substr(1));
    }
    try {
      c.probability = Rational::Parse(value);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (c.probability.sign() < 0 || c.probability > Rational(1)) {
      throw InputError(where + "probability " + c.probability.str() + " is outside [0,1]");
    }
    if (clause != "false") {
      std::istringstream parts(clause);
      std::string lit;
      while (std::getline(parts, lit, '|')) {
        lit = trim(lit);
        bool positive = true;
        if (!lit.empty() && (lit[0] == '!' || lit[0] == '~')) {
          positive = false;
          lit = trim(lit.substr(1));
        }
        if (!IsIdentifier(lit)) throw InputError(where + "bad letter '" + lit + "'");
        c.clause.push_back(Literal{lit, positive});
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string FormatPsat(std::span<const PsatConstraint> constraints) {
  std::ostringstream out;
  for (const auto& c : constraints) {
    if (c.clause.empty()) out << "false";
    for (std::size_t i = 0; i < c.clause.size(); ++i) {
      out << (i ? " | " : "") << c.clause[i].str();
    }
    out << " ; ";
    if (c.relation != Relation::kEqual) out << RelationSymbol(c.relation) << " ";
    out << c.probability << "\n";
  }
  return out.str();
}

std::string FormatAssignment(const ProbabilityAssignment& p) {
  std::ostringstream out;
  out << "letters:";
  for (const auto& l : p.letters()) out << " " << l;
  out << "\n";
  if (p.scale()) out << "scale: " << *p.scale() << "\n";
  for (const auto& w : p.worlds()) {
    out << w.weight << ":";
    for (std::size_t i = 0; i < p.letters().size(); ++i) {
      if ((w.assignment >> i) & 1U) out << " " << p.letters()[i];
    }
    out << "\n";
  }
  return out.str();
}

ProbabilityAssignment ParseAssignment(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::vector<std::string>> letters;
  std::optional<std::int64_t> scale;
  std::vector<World> worlds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError(where + "expected 'key: values'");
    std::istringstream key_in(line.substr(0, colon));
    std::string key;
    key_in >> key;
    std::istringstream rest(line.substr(colon + 1));
    if (key == "letters") {
      if (letters) throw InputError(where + "repeated letters line");
      letters.emplace();
      for (std::string w; rest >> w;) {
        if (!IsIdentifier(w)) throw InputError(where + "bad letter '" + w + "'");
        letters->push_back(w);
      }
      if (letters->size() > ProbabilityAssignment::kMaxLetters) {
        throw InputError(where + "too many letters");
      }
    } else if (key == "scale") {
      std::int64_t n = 0;
      if (!(rest >> n) || n <= 0) throw InputError(where + "scale must be a positive integer");
      scale = n;
    } else {
      if (!letters) throw InputError(where + "'letters:' must come before the worlds");
      World w;
      try {
        w.weight = Rational::Parse(key);
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      }
      for (std::string name; rest >> name;) {
        const auto it = std::find(letters->begin(), letters->end(), name);
        if (it == letters->end()) throw InputError(where + "unknown letter '" + name + "'");
        w.assignment |= std::uint64_t{1} << static_cast<std::size_t>(it - letters->begin());
      }
      worlds.push_back(std::move(w));
    }
  }
  if (!letters) throw InputError("missing 'letters:' line");
  return ProbabilityAssignment(std::move(*letters), std::move(worlds), scale);
}

// ---------------------------------------------------------------------------
// Counterexample assignment

Counterexample CounterexampleAssignment(std::size_t m) {
  if (m < 6) throw InputError("the counterexample needs m >= 6");
  const IncompletenessInstance inst = MakeIncompletenessInstance(m);
  const LinearSystem& a = inst.matrix;
  const RationalVector ones(m + 1, Rational(1));
  const RationalVector u = SparsifyRational(a, ones);

  BigInt unit = 1;
  std::size_t zero = 0;
  for (std::size_t j = 0; j <= m; ++j) {
    if (u[j].sign() < 0 || u[j] > Rational(3)) {
      throw std::logic_error("cell fraction outside [0,3]");
    }
    if (u[j].is_zero() && zero == 0) zero = j + 1;
    unit = Lcm(unit, u[j].denominator());
  }
  if (zero == 0) throw std::logic_error("sparse solution has no zero entry");

  const std::int64_t un = Rational(unit).to_int64();
  const std::size_t cell = static_cast<std::size_t>(3 * un);
  const std::size_t half = cell * (m + 1);
  const std::size_t num_worlds = 2 * half;

  // Letters: t, r, t1..t_{m+1}, s1..s_m.
  std::vector<std::string> letters{"t", "r"};
  for (std::size_t j = 1; j <= m + 1; ++j) letters.push_back("t" + std::to_string(j));
  for (std::size_t i = 1; i <= m; ++i) letters.push_back("s" + std::to_string(i));
  const auto bit = [](std::size_t i) { return std::uint64_t{1} << i; };

  std::vector<std::uint64_t> theta(num_worlds, 0);
  std::size_t in_r = 0;
  for (std::size_t j = 0; j <= m; ++j) {
    const std::size_t r_j = static_cast<std::size_t>((u[j] * Rational(unit)).to_int64());
    for (std::size_t k = 0; k < cell; ++k) {
      std::uint64_t& w = theta[j * cell + k];
      w |= bit(0) | bit(2 + j);
      if (k < r_j) {
        w |= bit(1);
        ++in_r;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (a.coefficient(i, j) == Rational(1)) w |= bit(m + 3 + i);
      }
    }
  }
  // Pad R outside T up to half the worlds.
  for (std::size_t w = half; in_r < half; ++w, ++in_r) theta[w] |= bit(1);

  const Rational weight(BigInt(1), BigInt(num_worlds));
  std::vector<World> worlds;
  for (std::uint64_t t : theta) worlds.push_back(World{t, weight});
  ProbabilityAssignment p(std::move(letters), std::move(worlds),
                          static_cast<std::int64_t>(6 * (m + 1)));

  for (const auto& atom : inst.phi) {
    if (!ApproxModels(p, atom)) {
      throw std::logic_error("counterexample misses premise " + atom.str());
    }
  }
  if (ApproxModels(p, inst.goals[zero - 1])) {
    throw std::logic_error("counterexample satisfies the goal it should refute");
  }
  return Counterexample{std::move(p), zero, u, un, num_worlds};
}

}  // namespace numsyl
