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

#include "numsyl/syllogism.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "numsyl/error.hpp"
#include "numsyl/parser.hpp"

namespace numsyl {

std::string_view RuleName(Rule r) {
  switch (r) {
    case Rule::kPremise:
      return "premise";
    case Rule::kAxiom:
      return "axiom";
    case Rule::kR1:
      return "R1";
    case Rule::kR2:
      return "R2";
    case Rule::kR3:
      return "R3";
    case Rule::kExFalso:
      return "ex-falso";
  }
  return "?";
}

std::string_view SaturationStatusName(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::kFixpoint:
      return "fixpoint";
    case SaturationStatus::kContradiction:
      return "contradiction";
    case SaturationStatus::kBudget:
      return "budget";
  }
  return "?";
}

std::string_view DeriveStatusName(DeriveStatus s) {
  switch (s) {
    case DeriveStatus::kDerivable:
      return "derivable";
    case DeriveStatus::kNotDerivable:
      return "not-derivable";
    case DeriveStatus::kNotShown:
      return "not-shown";
  }
  return "?";
}

namespace {

using Lits = std::pair<Literal, Literal>;

std::vector<Lits> Orders(const CountingAtom& a) {
  const auto& u = a.unary();
  if (u.first == u.second) return {{u.first, u.second}};
  return {{u.first, u.second}, {u.second, u.first}};
}

}  // namespace

std::vector<CountingAtom> RuleConclusions(Rule rule, const CountingAtom& a,
                                          const CountingAtom& b) {
  std::vector<CountingAtom> out;
  if (!a.is_unary() || !b.is_unary()) return out;
  auto add = [&](CountingAtom c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  const std::int64_t c = a.bound();
  const std::int64_t d = b.bound();
  switch (rule) {
    case Rule::kR1:
      if (a.direction() != Direction::kAtMost || b.direction() != Direction::kAtMost) break;
      for (const auto& [l1, l2] : Orders(a)) {
        for (const auto& [m1, m2] : Orders(b)) {
          if (m1 == l2.opposite()) {
            add(CountingAtom::MakeUnary(Direction::kAtMost, c + d, l1, m2));
          }
        }
      }
      break;
    case Rule::kR2:
      if (a.direction() != Direction::kAtLeast || b.direction() != Direction::kAtMost) break;
      for (const auto& [l1, l2] : Orders(a)) {
        for (const auto& [m1, m2] : Orders(b)) {
          if (m1 == l2) {
            add(CountingAtom::MakeUnary(Direction::kAtLeast, c - d, l1, m2.opposite()));
          }
        }
      }
      break;
    case Rule::kR3: {
      if (a.direction() != Direction::kAtMost || b.direction() != Direction::kAtLeast) break;
      const auto& u = a.unary();
      if (u.first != u.second) break;
      for (const auto& [m1, m2] : Orders(b)) {
        if (m1 == u.first) {
          add(CountingAtom::MakeUnary(Direction::kAtMost, c - d, u.first, m2.opposite()));
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

std::optional<CountingAtom> ApplyRule(Rule rule, const CountingAtom& a,
                                      const CountingAtom& b) {
  auto all = RuleConclusions(rule, a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool IsAxiom(const CountingAtom& a) {
  if (!a.is_unary()) return false;
  if (a.direction() == Direction::kAtLeast) return a.bound() == 0;
  return a.bound() >= 0 && a.unary().first == a.unary().second.opposite();
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

bool IsExFalsoPair(const CountingAtom& le, const CountingAtom& ge) {
  return le.is_unary() && ge.is_unary() && le.direction() == Direction::kAtMost &&
         ge.direction() == Direction::kAtLeast && le.unary() == ge.unary() &&
         ge.bound() > le.bound();
}

bool ReplayNode(const DerivationNode& n, std::span<const CountingAtom> phi,
                std::set<const DerivationNode*>& verified) {
  if (verified.count(&n) != 0) return true;
  bool ok = false;
  switch (n.rule) {
    case Rule::kPremise:
      ok = n.children.empty() &&
           std::find(phi.begin(), phi.end(), n.conclusion) != phi.end();
      break;
    case Rule::kAxiom:
      ok = n.children.empty() && IsAxiom(n.conclusion);
      break;
    case Rule::kR1:
    case Rule::kR2:
    case Rule::kR3: {
      if (n.children.size() != 2) break;
      const auto all = RuleConclusions(n.rule, n.children[0]->conclusion,
                                       n.children[1]->conclusion);
      ok = std::find(all.begin(), all.end(), n.conclusion) != all.end();
      break;
    }
    case Rule::kExFalso:
      ok = n.children.size() == 2 &&
           IsExFalsoPair(n.children[0]->conclusion, n.children[1]->conclusion);
      break;
  }
  if (!ok) return false;
  for (const auto& c : n.children) {
    if (!ReplayNode(*c, phi, verified)) return false;
  }
  verified.insert(&n);
  return true;
}

}  // namespace

bool ReplayDerivation(const Derivation& d, std::span<const CountingAtom> phi) {
  if (!d) return false;
  std::set<const DerivationNode*> verified;
  return ReplayNode(*d, phi, verified);
}

std::size_t DerivationSize(const Derivation& d) {
  std::set<const DerivationNode*> seen;
  std::vector<const DerivationNode*> stack{d.get()};
  while (!stack.empty()) {
    const DerivationNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& c : n->children) stack.push_back(c.get());
  }
  return seen.size();
}

namespace {

std::string Arithmetic(const DerivationNode& n) {
  if (n.children.size() != 2) return std::string(RuleName(n.rule));
  const std::int64_t c = n.children[0]->conclusion.bound();
  const std::int64_t d = n.children[1]->conclusion.bound();
  std::ostringstream out;
  out << RuleName(n.rule) << ": ";
  switch (n.rule) {
    case Rule::kR1:
      out << c << " + " << d << " = " << n.conclusion.bound();
      break;
    case Rule::kR2:
    case Rule::kR3:
      out << c << " - " << d << " = " << n.conclusion.bound();
      break;
    case Rule::kExFalso:
      out << d << " > " << c;
      break;
    default:
      break;
  }
  return out.str();
}

void FormatNode(const DerivationNode& n, int depth,
                std::unordered_map<const DerivationNode*, std::size_t>& ids,
                std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (auto it = ids.find(&n); it != ids.end()) {
    out << indent << "[" << it->second << "] " << n.conclusion.str()
        << "  (see above)\n";
    return;
  }
  const std::size_t id = ids.size() + 1;
  ids.emplace(&n, id);
  out << indent << "[" << id << "] " << n.conclusion.str() << "  " << Arithmetic(n)
      << "\n";
  for (const auto& c : n.children) FormatNode(*c, depth + 1, ids, out);
}

}  // namespace

std::string FormatDerivation(const Derivation& d) {
  std::ostringstream out;
  std::unordered_map<const DerivationNode*, std::size_t> ids;
  FormatNode(*d, 0, ids, out);
  return out.str();
}

Derivation ParseDerivation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::size_t, std::shared_ptr<DerivationNode>> by_id;
  // Open nodes by depth.
  std::vector<std::shared_ptr<DerivationNode>> path;
  std::shared_ptr<DerivationNode> root;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "derivation line " + std::to_string(line_no) + ": ";
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::size_t indent = line.find_first_not_of(' ');
    if (indent % 2 != 0 || line[indent] != '[') throw InputError(where + "bad indentation");
    const std::size_t depth = indent / 2;
    const std::size_t close = line.find("] ", indent);
    if (close == std::string::npos) throw InputError(where + "expected '[k] '");
    std::size_t id = 0;
    try {
      id = std::stoul(line.substr(indent + 1, close - indent - 1));
    } catch (const std::exception&) {
      throw InputError(where + "bad node number");
    }
    std::string rest = line.substr(close + 2);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.pop_back();
    const std::size_t gap = rest.find("  ");
    if (gap == std::string::npos) throw InputError(where + "missing justification");
    const CountingAtom atom = ParseAtom(rest.substr(0, gap));
    const std::string why = rest.substr(gap + 2);
    std::shared_ptr<DerivationNode> node;
    if (why == "(see above)") {
      auto it = by_id.find(id);
      if (it == by_id.end() || !(it->second->conclusion == atom)) {
        throw InputError(where + "dangling reference [" + std::to_string(id) + "]");
      }
      node = it->second;
    } else {
      const std::string name = why.substr(0, why.find(':'));
      std::optional<Rule> rule;
      for (Rule r : {Rule::kPremise, Rule::kAxiom, Rule::kR1, Rule::kR2, Rule::kR3,
                     Rule::kExFalso}) {
        if (RuleName(r) == name) rule = r;
      }
      if (!rule) throw InputError(where + "unknown rule '" + name + "'");
      if (by_id.count(id)) throw InputError(where + "repeated node number");
      node = std::make_shared<DerivationNode>(DerivationNode{atom, *rule, {}});
      by_id[id] = node;
    }
    if (depth == 0) {
      if (root) throw InputError(where + "more than one root");
      root = node;
    } else {
      if (depth > path.size()) throw InputError(where + "indentation skips a level");
      path[depth - 1]->children.push_back(node);
    }
    path.resize(depth);
    path.push_back(node);
  }
  if (!root) throw InputError("empty derivation");
  return root;
}

// ---------------------------------------------------------------------------
// BoundTable

BoundTable::BoundTable(std::span<const CountingAtom> phi,
                       std::span<const std::string> extra_predicates)
    : phi_(phi.begin(), phi.end()) {
  std::set<std::string> preds(extra_predicates.begin(), extra_predicates.end());
  for (const auto& a : phi_) {
    if (!a.is_unary()) {
      throw InputError("the syllogism calculus covers unary atoms only: " + a.str());
    }
    preds.insert(a.unary().first.predicate);
    preds.insert(a.unary().second.predicate);
  }
  predicates_.assign(preds.begin(), preds.end());
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    predicate_index_[predicates_[i]] = i;
  }
  num_literals_ = 2 * predicates_.size();
  entries_.resize(num_literals_ * num_literals_);
  pair_literals_.resize(entries_.size());
  for (std::size_t a = 0; a < num_literals_; ++a) {
    for (std::size_t b = 0; b < num_literals_; ++b) {
      pair_literals_[a * num_literals_ + b] = {std::min(a, b), std::max(a, b)};
    }
  }
  Step axiom{0, Rule::kAxiom, 0, 0, 0, false, false, 0, 0};
  for (std::size_t a = 0; a < num_literals_; ++a) {
    for (std::size_t b = a; b < num_literals_; ++b) {
      entries_[PairIndex(a, b)].lower_history.push_back(axiom);
    }
    if (a % 2 == 0) Improve(PairIndex(a, a ^ 1), true, axiom);
  }
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    const auto& u = phi_[i].unary();
    const std::size_t pair = PairIndex(LiteralId(u.first), LiteralId(u.second));
    Step step{phi_[i].bound(), Rule::kPremise, i, 0, 0, false, false, 0, 0};
    Improve(pair, phi_[i].direction() == Direction::kAtMost, step);
  }
  for (std::size_t p = 0; p < entries_.size() && !contradiction_pair_; ++p) {
    CheckContradiction(p);
  }
  if (contradiction_pair_) status_ = SaturationStatus::kContradiction;
}

std::size_t BoundTable::LiteralId(const Literal& l) const {
  auto it = predicate_index_.find(l.predicate);
  if (it == predicate_index_.end()) {
    throw InputError("predicate '" + l.predicate + "' is not in the premise set");
  }
  return 2 * it->second + (l.positive ? 0 : 1);
}

Literal BoundTable::LiteralOf(std::size_t id) const {
  return Literal{predicates_[id / 2], id % 2 == 0};
}

std::size_t BoundTable::PairIndex(std::size_t a, std::size_t b) const {
  return std::min(a, b) * num_literals_ + std::max(a, b);
}

CountingAtom BoundTable::PairAtom(std::size_t pair, bool upper,
                                  std::int64_t value) const {
  const auto [a, b] = pair_literals_[pair];
  return CountingAtom::MakeUnary(upper ? Direction::kAtMost : Direction::kAtLeast,
                                 value, LiteralOf(a), LiteralOf(b));
}

bool BoundTable::Improve(std::size_t pair, bool upper, const Step& step) {
  Entry& e = entries_[pair];
  if (upper) {
    if (e.upper && step.value >= *e.upper) return false;
    e.upper = step.value;
    e.upper_history.push_back(step);
  } else {
    if (step.value <= e.lower) return false;
    e.lower = step.value;
    e.lower_history.push_back(step);
  }
  return true;
}

void BoundTable::CheckContradiction(std::size_t pair) {
  const Entry& e = entries_[pair];
  if (!contradiction_pair_ && e.upper && e.lower > *e.upper) {
    contradiction_pair_ = pair;
  }
}

SaturationStatus BoundTable::Saturate(const SaturationOptions& options) {
  if (contradiction_pair_) return status_ = SaturationStatus::kContradiction;
  const std::size_t n = num_literals_;
  auto improve = [&](std::size_t pair, bool upper, const Step& s) {
    if (!Improve(pair, upper, s)) return false;
    CheckContradiction(pair);
    return true;
  };
  while (rounds_ < options.max_rounds) {
    ++rounds_;
    bool changed = false;
    for (std::size_t l1 = 0; l1 < n && !contradiction_pair_; ++l1) {
      for (std::size_t l2 = 0; l2 < n && !contradiction_pair_; ++l2) {
        const std::size_t p12 = PairIndex(l1, l2);
        // R1 and R2 take (L1 & L2) as the first premise.
        for (std::size_t l3 = 0; l3 < n && !contradiction_pair_; ++l3) {
          const Entry& e12 = entries_[p12];
          if (e12.upper) {
            const std::size_t pb = PairIndex(l2 ^ 1, l3);
            const Entry& eb = entries_[pb];
            if (eb.upper) {
              const std::int64_t c = *e12.upper;
              const std::int64_t d = *eb.upper;
              Step s{c + d, Rule::kR1, 0, p12, pb, true, true, c, d};
              changed |= improve(PairIndex(l1, l3), true, s);
            }
          }
          if (e12.lower > 0) {
            const std::size_t pb = PairIndex(l2, l3);
            const Entry& eb = entries_[pb];
            if (eb.upper) {
              const std::int64_t c = e12.lower;
              const std::int64_t d = *eb.upper;
              Step s{c - d, Rule::kR2, 0, p12, pb, false, true, c, d};
              changed |= improve(PairIndex(l1, l3 ^ 1), false, s);
            }
          }
        }
        // R3: <=C (L1 & L1), >=D (L1 & L2).
        const std::size_t p11 = PairIndex(l1, l1);
        const Entry& e11 = entries_[p11];
        const Entry& e12 = entries_[p12];
        if (e11.upper && e12.lower > 0) {
          const std::int64_t c = *e11.upper;
          const std::int64_t d = e12.lower;
          Step s{c - d, Rule::kR3, 0, p11, p12, true, false, c, d};
          changed |= improve(PairIndex(l1, l2 ^ 1), true, s);
        }
      }
    }
    if (contradiction_pair_) return status_ = SaturationStatus::kContradiction;
    if (!changed) {
      saturated_ = true;
      return status_ = SaturationStatus::kFixpoint;
    }
  }
  return status_ = SaturationStatus::kBudget;
}

std::optional<std::int64_t> BoundTable::upper(const Literal& a,
                                              const Literal& b) const {
  return entries_[PairIndex(LiteralId(a), LiteralId(b))].upper;
}

std::int64_t BoundTable::lower(const Literal& a, const Literal& b) const {
  return entries_[PairIndex(LiteralId(a), LiteralId(b))].lower;
}

Derivation BoundTable::Build(
    std::size_t pair, bool upper, std::int64_t value,
    std::map<std::tuple<std::size_t, bool, std::int64_t>, Derivation>& memo) const {
  const auto key = std::make_tuple(pair, upper, value);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto& history =
      upper ? entries_[pair].upper_history : entries_[pair].lower_history;
  const auto step = std::find_if(history.begin(), history.end(),
                                 [&](const Step& s) { return s.value == value; });
  if (step == history.end()) throw std::logic_error("missing derivation step");
  auto node = std::make_shared<DerivationNode>(
      DerivationNode{PairAtom(pair, upper, value), step->rule, {}});
  if (step->rule == Rule::kPremise) {
    node->conclusion = phi_[step->premise_index];
  } else if (step->rule != Rule::kAxiom) {
    node->children.push_back(Build(step->pair_a, step->upper_a, step->value_a, memo));
    node->children.push_back(Build(step->pair_b, step->upper_b, step->value_b, memo));
  }
  memo.emplace(key, node);
  return node;
}

Derivation BoundTable::Weaken(const Derivation& d, std::size_t pair, bool upper,
                              std::int64_t from, std::int64_t to) const {
  if (from == to) return d;
  const Literal l2 = LiteralOf(pair_literals_[pair].second);
  // <=(to-from) (!L2 & L2) through R1, or >=from minus <=(from-to) (L2 & !L2)
  // through R2; both leave the literal pair unchanged.
  const std::int64_t gap = upper ? to - from : from - to;
  auto axiom = std::make_shared<DerivationNode>(DerivationNode{
      CountingAtom::MakeUnary(Direction::kAtMost, gap, l2, l2.opposite()),
      Rule::kAxiom, {}});
  return std::make_shared<DerivationNode>(DerivationNode{
      PairAtom(pair, upper, to), upper ? Rule::kR1 : Rule::kR2, {d, axiom}});
}

std::optional<Derivation> BoundTable::Derive(const CountingAtom& goal) const {
  if (!goal.is_unary()) {
    throw InputError("the syllogism calculus covers unary atoms only: " + goal.str());
  }
  const std::size_t pair =
      PairIndex(LiteralId(goal.unary().first), LiteralId(goal.unary().second));
  std::map<std::tuple<std::size_t, bool, std::int64_t>, Derivation> memo;
  const Entry& e = entries_[pair];
  if (goal.direction() == Direction::kAtLeast && e.lower >= goal.bound()) {
    return Weaken(Build(pair, false, e.lower, memo), pair, false, e.lower,
                  goal.bound());
  }
  if (goal.direction() == Direction::kAtMost && e.upper && *e.upper <= goal.bound()) {
    return Weaken(Build(pair, true, *e.upper, memo), pair, true, *e.upper,
                  goal.bound());
  }
  if (contradiction_pair_) {
    const Entry& c = entries_[*contradiction_pair_];
    Derivation le = Build(*contradiction_pair_, true, *c.upper, memo);
    Derivation ge = Build(*contradiction_pair_, false, c.lower, memo);
    return std::make_shared<DerivationNode>(
        DerivationNode{goal, Rule::kExFalso, {le, ge}});
  }
  return std::nullopt;
}

DeriveResult Derives(std::span<const CountingAtom> phi, const CountingAtom& goal,
                     const SaturationOptions& options) {
  if (!goal.is_unary()) {
    throw InputError("the syllogism calculus covers unary atoms only: " + goal.str());
  }
  const std::vector<std::string> extra{goal.unary().first.predicate,
                                       goal.unary().second.predicate};
  BoundTable table(phi, extra);
  DeriveResult r;
  r.saturation = table.Saturate(options);
  r.derivation = table.Derive(goal);
  if (r.derivation) {
    r.status = DeriveStatus::kDerivable;
  } else {
    r.status = r.saturation == SaturationStatus::kFixpoint ? DeriveStatus::kNotDerivable
                                                           : DeriveStatus::kNotShown;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Numerically explicit premise sets

ExplicitnessResult IsNumericallyExplicit(std::span<const CountingAtom> phi) {
  ExplicitnessResult r;
  std::set<std::string> preds;
  std::set<CountingAtom> atoms;
  for (const auto& a : phi) {
    if (!a.is_unary()) {
      r.diagnostic = "relational atom " + a.str();
      return r;
    }
    preds.insert(a.unary().first.predicate);
    preds.insert(a.unary().second.predicate);
    atoms.insert(a);
  }
  if (preds.empty()) {
    r.diagnostic = "no predicates";
    return r;
  }
  // Values v with both <=v and >=v declared for the repeated literal.
  auto exact_counts = [&](const Literal& l) {
    std::set<std::int64_t> out;
    for (const auto& a : atoms) {
      if (a.direction() != Direction::kAtMost) continue;
      if (a.unary().first != l || a.unary().second != l) continue;
      if (atoms.count(CountingAtom::MakeCount(Direction::kAtLeast, a.bound(), l))) {
        out.insert(a.bound());
      }
    }
    return out;
  };
  std::map<std::string, std::pair<std::set<std::int64_t>, std::set<std::int64_t>>> sets;
  for (const auto& p : preds) {
    auto pos = exact_counts(Literal{p, true});
    auto neg = exact_counts(Literal{p, false});
    if (pos.size() > 1 || neg.size() > 1) {
      r.diagnostic = "predicate '" + p + "' has more than one declared count";
      return r;
    }
    if (pos.empty() || neg.empty()) {
      r.diagnostic = "predicate '" + p + "' lacks a declared count for it or its complement";
      return r;
    }
    sets[p] = {pos, neg};
  }
  ExplicitCounts counts;
  counts.total = -1;
  for (const auto& [p, s] : sets) {
    const std::int64_t cp = *s.first.begin();
    const std::int64_t total = cp + *s.second.begin();
    if (counts.total >= 0 && total != counts.total) {
      r.diagnostic = "predicate '" + p + "' implies total " + std::to_string(total) +
                     " but another implies " + std::to_string(counts.total);
      return r;
    }
    if (cp < 0 || *s.second.begin() < 0) {
      r.diagnostic = "predicate '" + p + "' has a negative count";
      return r;
    }
    counts.total = total;
    counts.counts[p] = cp;
  }
  if (counts.total <= 0) {
    r.diagnostic = "total must be positive";
    return r;
  }
  r.counts = std::move(counts);
  return r;
}

// ---------------------------------------------------------------------------
// Incompleteness instance

IncompletenessInstance MakeIncompletenessInstance(std::size_t m) {
  IncompletenessInstance inst;
  inst.m = m;
  inst.matrix = ManyNonzerosInstance(m);
  const auto mm = static_cast<std::int64_t>(m);
  const Literal t{"t", true};
  const Literal r{"r", true};
  auto tj = [](std::size_t j) { return Literal{"t" + std::to_string(j), true}; };
  auto si = [](std::size_t i) { return Literal{"s" + std::to_string(i), true}; };
  auto at_most = [](std::int64_t c, Literal a, Literal b) {
    return CountingAtom::MakeUnary(Direction::kAtMost, c, std::move(a), std::move(b));
  };
  auto at_least = [](std::int64_t c, Literal a, Literal b) {
    return CountingAtom::MakeUnary(Direction::kAtLeast, c, std::move(a), std::move(b));
  };
  auto exactly = [&](std::vector<CountingAtom>& out, std::int64_t c, Literal a,
                     Literal b) {
    out.push_back(at_most(c, a, b));
    out.push_back(at_least(c, a, b));
  };

  auto& p1 = inst.phi1;
  p1.push_back(at_most(3 * (mm + 1), t, t));
  for (std::size_t j = 1; j <= m + 1; ++j) p1.push_back(at_least(3, tj(j), tj(j)));
  for (std::size_t j = 1; j <= m + 1; ++j) p1.push_back(at_most(0, tj(j), t.opposite()));
  for (std::size_t j = 1; j <= m + 1; ++j) {
    for (std::size_t k = j + 1; k <= m + 1; ++k) p1.push_back(at_most(0, tj(j), tj(k)));
  }
  for (std::size_t i = 1; i <= m; ++i) p1.push_back(at_most(0, si(i), t.opposite()));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m + 1; ++j) {
      if (inst.matrix.coefficient(i - 1, j - 1) == Rational(1)) {
        p1.push_back(at_most(0, tj(j), si(i).opposite()));
      }
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m + 1; ++j) {
      if (inst.matrix.coefficient(i - 1, j - 1).is_zero()) {
        p1.push_back(at_most(0, tj(j), si(i)));
      }
    }
  }
  for (std::size_t i = 1; i < m; ++i) exactly(p1, 3, si(i), r);
  exactly(p1, 4, si(m), r);

  auto& p2 = inst.phi2;
  const std::int64_t half = 3 * (mm + 1);
  exactly(p2, half, t, t);
  exactly(p2, half, t.opposite(), t.opposite());
  for (std::size_t j = 1; j <= m + 1; ++j) {
    exactly(p2, 3, tj(j), tj(j));
    exactly(p2, 6 * mm + 3, tj(j).opposite(), tj(j).opposite());
  }
  for (std::size_t i = 1; i < m; ++i) {
    exactly(p2, 9, si(i), si(i));
    exactly(p2, 6 * mm - 3, si(i).opposite(), si(i).opposite());
  }
  exactly(p2, 12, si(m), si(m));
  exactly(p2, 6 * mm - 6, si(m).opposite(), si(m).opposite());
  exactly(p2, half, r, r);
  exactly(p2, half, r.opposite(), r.opposite());

  for (const auto* part : {&inst.phi1, &inst.phi2}) {
    for (const auto& a : *part) {
      if (std::find(inst.phi.begin(), inst.phi.end(), a) == inst.phi.end()) {
        inst.phi.push_back(a);
      }
    }
  }
  for (std::size_t j = 1; j <= m + 1; ++j) inst.goals.push_back(at_least(1, tj(j), r));
  return inst;
}

}  // namespace numsyl
