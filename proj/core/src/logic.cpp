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

#include "numsyl/logic.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "numsyl/error.hpp"

namespace numsyl {

std::string_view DirectionSymbol(Direction d) {
  return d == Direction::kAtLeast ? ">=" : "<=";
}

std::string_view ComparisonSymbol(Comparison c) {
  switch (c) {
    case Comparison::kAtLeast:
      return ">=";
    case Comparison::kAtMost:
      return "<=";
    case Comparison::kExactly:
      return "=";
  }
  return "?";
}

bool IsIdentifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

std::string Literal::str() const {
  return positive ? predicate : "!" + predicate;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  // Positive sorts first.
  return b.positive <=> a.positive;
}

namespace {

void RequireIdentifier(const std::string& name) {
  if (!IsIdentifier(name)) {
    throw InputError("invalid predicate name '" + name + "'");
  }
}

}  // namespace

CountingAtom CountingAtom::MakeUnary(Direction direction, std::int64_t bound,
                                     Literal a, Literal b) {
  RequireIdentifier(a.predicate);
  RequireIdentifier(b.predicate);
  if (b < a) std::swap(a, b);
  return CountingAtom(direction, bound, Unary{std::move(a), std::move(b)});
}

CountingAtom CountingAtom::MakeRelational(Direction direction,
                                          std::int64_t bound,
                                          std::string subject, std::string verb,
                                          Direction inner_direction,
                                          std::int64_t inner_bound,
                                          std::string object) {
  RequireIdentifier(subject);
  RequireIdentifier(verb);
  RequireIdentifier(object);
  return CountingAtom(direction, bound,
                      Relational{std::move(subject), std::move(verb),
                                 inner_direction, inner_bound,
                                 std::move(object)});
}

CountingAtom CountingAtom::with_bound(std::int64_t bound) const {
  CountingAtom copy = *this;
  copy.bound_ = bound;
  return copy;
}

std::string CountingAtom::str() const {
  std::string out = std::string(DirectionSymbol(direction_)) + std::to_string(bound_);
  if (is_unary()) {
    return out + " (" + unary().first.str() + " & " + unary().second.str() + ")";
  }
  const auto& r = relational();
  return out + " " + r.subject + " [" + r.verb + " " +
         std::string(DirectionSymbol(r.inner_direction)) +
         std::to_string(r.inner_bound) + " " + r.object + "]";
}

std::vector<std::string> CountingAtom::unary_predicates() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (is_unary()) {
    add(unary().first.predicate);
    add(unary().second.predicate);
  } else {
    add(relational().subject);
    add(relational().object);
  }
  return out;
}

bool operator<(const CountingAtom& a, const CountingAtom& b) {
  if (a.is_unary() != b.is_unary()) return a.is_unary();
  if (a.is_unary()) {
    if (a.unary() != b.unary()) return a.unary() < b.unary();
  } else if (a.relational() != b.relational()) {
    return a.relational() < b.relational();
  }
  if (a.direction_ != b.direction_) return a.direction_ < b.direction_;
  return a.bound_ < b.bound_;
}

CountingAtom NegateAtom(const CountingAtom& atom) {
  const bool at_least = atom.direction() == Direction::kAtLeast;
  const Direction flipped = at_least ? Direction::kAtMost : Direction::kAtLeast;
  const std::int64_t bound = at_least ? atom.bound() - 1 : atom.bound() + 1;
  if (atom.is_unary()) {
    return CountingAtom::MakeUnary(flipped, bound, atom.unary().first,
                                   atom.unary().second);
  }
  const auto& r = atom.relational();
  return CountingAtom::MakeRelational(flipped, bound, r.subject, r.verb,
                                      r.inner_direction, r.inner_bound,
                                      r.object);
}

// ---------------------------------------------------------------------------
// C1Formula

C1Formula C1Formula::Constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::kTrue : Kind::kFalse;
  return C1Formula(std::move(n));
}

C1Formula C1Formula::Atom(std::string predicate) {
  RequireIdentifier(predicate);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->predicate = std::move(predicate);
  return C1Formula(std::move(n));
}

C1Formula C1Formula::Lit(const Literal& literal) {
  C1Formula a = Atom(literal.predicate);
  return literal.positive ? a : Not(a);
}

C1Formula C1Formula::Not(C1Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->children.push_back(std::move(body));
  return C1Formula(std::move(n));
}

C1Formula C1Formula::And(std::vector<C1Formula> children) {
  if (children.empty()) return Constant(true);
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->children = std::move(children);
  return C1Formula(std::move(n));
}

C1Formula C1Formula::Or(std::vector<C1Formula> children) {
  if (children.empty()) return Constant(false);
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->children = std::move(children);
  return C1Formula(std::move(n));
}

C1Formula C1Formula::Count(Comparison comparison, std::int64_t bound,
                           C1Formula body) {
  if (bound < 0) throw InputError("counting quantifier with negative bound");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCount;
  n->comparison = comparison;
  n->bound = bound;
  n->children.push_back(std::move(body));
  return C1Formula(std::move(n));
}

bool C1Formula::quantifier_free() const {
  if (kind() == Kind::kCount) return false;
  return std::all_of(children().begin(), children().end(),
                     [](const C1Formula& c) { return c.quantifier_free(); });
}

std::size_t C1Formula::quantifier_depth() const {
  std::size_t depth = 0;
  for (const auto& c : children()) depth = std::max(depth, c.quantifier_depth());
  return depth + (kind() == Kind::kCount ? 1 : 0);
}

void C1Formula::CollectPredicates(std::vector<std::string>& out) const {
  if (kind() == Kind::kAtom &&
      std::find(out.begin(), out.end(), predicate()) == out.end()) {
    out.push_back(predicate());
  }
  for (const auto& c : children()) c.CollectPredicates(out);
}

std::string C1Formula::str() const {
  switch (kind()) {
    case Kind::kTrue:
      return "true";
    case Kind::kFalse:
      return "false";
    case Kind::kAtom:
      return predicate();
    case Kind::kNot: {
      const std::string inner = body().str();
      return body().kind() == Kind::kCount ? "!(" + inner + ")" : "!" + inner;
    }
    case Kind::kAnd:
    case Kind::kOr: {
      std::string out = "(";
      const char* sep = kind() == Kind::kAnd ? " & " : " | ";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i > 0) out += sep;
        const std::string c = children()[i].str();
        out += children()[i].kind() == Kind::kCount ? "(" + c + ")" : c;
      }
      return out + ")";
    }
    case Kind::kCount:
      return std::string(ComparisonSymbol(comparison())) +
             std::to_string(bound()) + " " + body().str();
  }
  return {};
}

bool operator==(const C1Formula& a, const C1Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.predicate() != b.predicate() ||
      a.children().size() != b.children().size()) {
    return false;
  }
  if (a.kind() == C1Formula::Kind::kCount &&
      (a.comparison() != b.comparison() || a.bound() != b.bound())) {
    return false;
  }
  return std::equal(a.children().begin(), a.children().end(),
                    b.children().begin());
}

C1Formula ToC1(const CountingAtom& atom) {
  if (!atom.is_unary()) {
    throw InputError(
        "relational atoms have no one-variable form; use the N2 solver");
  }
  if (atom.trivially_false()) return C1Formula::Constant(false);
  if (atom.trivially_true()) return C1Formula::Constant(true);
  const auto& u = atom.unary();
  C1Formula body = u.first == u.second
                       ? C1Formula::Lit(u.first)
                       : C1Formula::And({C1Formula::Lit(u.first),
                                         C1Formula::Lit(u.second)});
  return C1Formula::Count(atom.direction() == Direction::kAtLeast
                              ? Comparison::kAtLeast
                              : Comparison::kAtMost,
                          atom.bound(), body);
}

std::vector<OneType> OneTypes(std::span<const std::string> predicates,
                              std::size_t cap) {
  if (predicates.size() > cap || predicates.size() >= 63) {
    throw CapExceeded("1-type enumeration over " +
                      std::to_string(predicates.size()) +
                      " predicates exceeds the cap of " + std::to_string(cap));
  }
  const std::uint64_t count = std::uint64_t{1} << predicates.size();
  std::vector<OneType> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(OneType{m});
  return out;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::size_t universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (full) *this = ElementSet(universe).complement();
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet out = *this;
  for (auto& w : out.words_) w = ~w;
  if (universe_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteStructure

void FiniteStructure::CheckElement(std::size_t e) const {
  if (e >= domain_size_) {
    throw InputError("element " + std::to_string(e) +
                     " outside domain of size " + std::to_string(domain_size_));
  }
}

void FiniteStructure::SetUnary(const std::string& predicate,
                               std::span<const std::size_t> elements) {
  RequireIdentifier(predicate);
  ElementSet set(domain_size_);
  for (auto e : elements) {
    CheckElement(e);
    set.insert(e);
  }
  unary_[predicate] = std::move(set);
}

void FiniteStructure::DeclareUnary(const std::string& predicate) {
  RequireIdentifier(predicate);
  unary_.try_emplace(predicate, domain_size_);
}

void FiniteStructure::AddToUnary(const std::string& predicate,
                                 std::size_t element) {
  CheckElement(element);
  DeclareUnary(predicate);
  unary_.at(predicate).insert(element);
}

void FiniteStructure::DeclareBinary(const std::string& predicate) {
  RequireIdentifier(predicate);
  binary_.try_emplace(predicate, domain_size_, ElementSet(domain_size_));
}

void FiniteStructure::AddPair(const std::string& predicate, std::size_t from,
                              std::size_t to) {
  CheckElement(from);
  CheckElement(to);
  DeclareBinary(predicate);
  binary_.at(predicate)[from].insert(to);
}

const ElementSet& FiniteStructure::unary(const std::string& predicate) const {
  auto it = unary_.find(predicate);
  if (it == unary_.end()) {
    throw InputError("uninterpreted unary predicate '" + predicate + "'");
  }
  return it->second;
}

const std::vector<ElementSet>& FiniteStructure::successors(
    const std::string& predicate) const {
  auto it = binary_.find(predicate);
  if (it == binary_.end()) {
    throw InputError("uninterpreted binary predicate '" + predicate + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Semantics

namespace {

bool Compare(Direction d, std::int64_t count, std::int64_t bound) {
  return d == Direction::kAtLeast ? count >= bound : count <= bound;
}

ElementSet LiteralSet(const FiniteStructure& s, const Literal& l) {
  const ElementSet& e = s.unary(l.predicate);
  return l.positive ? e : e.complement();
}

}  // namespace

bool Evaluate(const FiniteStructure& s, const CountingAtom& atom) {
  if (atom.is_unary()) {
    const auto& u = atom.unary();
    const ElementSet both = LiteralSet(s, u.first) & LiteralSet(s, u.second);
    return Compare(atom.direction(), static_cast<std::int64_t>(both.count()),
                   atom.bound());
  }
  const auto& r = atom.relational();
  const ElementSet& subjects = s.unary(r.subject);
  const ElementSet& objects = s.unary(r.object);
  const auto& succ = s.successors(r.verb);
  std::int64_t count = 0;
  for (std::size_t a : subjects.elements()) {
    const auto inner = static_cast<std::int64_t>((succ[a] & objects).count());
    if (Compare(r.inner_direction, inner, r.inner_bound)) ++count;
  }
  return Compare(atom.direction(), count, atom.bound());
}

ElementSet Satisfying(const FiniteStructure& s, const C1Formula& f) {
  using K = C1Formula::Kind;
  const std::size_t n = s.domain_size();
  switch (f.kind()) {
    case K::kTrue:
      return ElementSet(n, true);
    case K::kFalse:
      return ElementSet(n);
    case K::kAtom:
      return s.unary(f.predicate());
    case K::kNot:
      return Satisfying(s, f.body()).complement();
    case K::kAnd: {
      ElementSet out(n, true);
      for (const auto& c : f.children()) out &= Satisfying(s, c);
      return out;
    }
    case K::kOr: {
      ElementSet out(n);
      for (const auto& c : f.children()) out |= Satisfying(s, c);
      return out;
    }
    case K::kCount: {
      const auto count = static_cast<std::int64_t>(Satisfying(s, f.body()).count());
      bool holds = false;
      switch (f.comparison()) {
        case Comparison::kAtLeast:
          holds = count >= f.bound();
          break;
        case Comparison::kAtMost:
          holds = count <= f.bound();
          break;
        case Comparison::kExactly:
          holds = count == f.bound();
          break;
      }
      return ElementSet(n, holds);
    }
  }
  return ElementSet(n);
}

namespace {

bool HasFreeOccurrence(const C1Formula& f) {
  if (f.kind() == C1Formula::Kind::kAtom) return true;
  if (f.kind() == C1Formula::Kind::kCount) return false;
  return std::any_of(f.children().begin(), f.children().end(),
                     HasFreeOccurrence);
}

}  // namespace

bool Evaluate(const FiniteStructure& s, const C1Formula& f) {
  if (HasFreeOccurrence(f)) {
    throw InputError("formula is not closed: " + f.str());
  }
  // A closed formula is constant over elements; evaluate it on a witness
  // element, or directly when the domain is empty.
  if (s.domain_size() > 0) return Satisfying(s, f).contains(0);
  using K = C1Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      return true;
    case K::kFalse:
      return false;
    case K::kNot:
      return !Evaluate(s, f.body());
    case K::kAnd:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const C1Formula& c) { return Evaluate(s, c); });
    case K::kOr:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const C1Formula& c) { return Evaluate(s, c); });
    case K::kCount:
      // Empty domain: every count is 0.
      return f.comparison() == Comparison::kAtMost || f.bound() == 0;
    case K::kAtom:
      break;
  }
  return false;
}

std::uint64_t TypeOf(const FiniteStructure& s,
                     std::span<const std::string> predicates,
                     std::size_t element) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    if (s.unary(predicates[i]).contains(element)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<std::uint64_t> CardinalityVector(
    const FiniteStructure& s, std::span<const std::string> predicates,
    std::size_t cap) {
  const auto types = OneTypes(predicates, cap);
  std::vector<std::uint64_t> out(types.size(), 0);
  for (std::size_t a = 0; a < s.domain_size(); ++a) {
    ++out[TypeOf(s, predicates, a)];
  }
  return out;
}

}  // namespace numsyl
