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

#ifndef NUMSYL_LOGIC_HPP_
#define NUMSYL_LOGIC_HPP_

// Syntax and finite-model semantics for the counting fragments: unary and
// relational counting atoms, one-variable formulas with counting quantifiers,
// 1-types, and explicit finite structures.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace numsyl {

inline constexpr std::size_t kDefaultTypeCap = 24;

enum class Direction { kAtLeast, kAtMost };

// ">=" or "<=".
std::string_view DirectionSymbol(Direction d);

// Predicate names: [A-Za-z_][A-Za-z0-9_]*.
bool IsIdentifier(std::string_view name);

struct Literal {
  std::string predicate;
  bool positive = true;

  Literal opposite() const { return Literal{predicate, !positive}; }
  // "p" or "!p".
  std::string str() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  // Predicate name lexicographic, positive before negative.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

// One sentence of the numerical syllogistic:
//   unary       ∃≥C x (L1 ∧ L2)  /  ∃≤C x (L1 ∧ L2)
//   relational  ∃⋈C x (p(x) ∧ ∃⋈D y (q(y) ∧ r(x,y)))
// Unary literal pairs are stored in canonical order, so the two conjunct
// orders of the same sentence compare equal.
class CountingAtom {
 public:
  struct Unary {
    Literal first;
    Literal second;
    friend bool operator==(const Unary&, const Unary&) = default;
    friend auto operator<=>(const Unary&, const Unary&) = default;
  };
  struct Relational {
    std::string subject;
    std::string verb;
    Direction inner_direction = Direction::kAtLeast;
    std::int64_t inner_bound = 0;
    std::string object;
    friend bool operator==(const Relational&, const Relational&) = default;
    friend auto operator<=>(const Relational&, const Relational&) = default;
  };

  static CountingAtom MakeUnary(Direction direction, std::int64_t bound,
                                Literal a, Literal b);
  // ∃⋈C x (p ∧ p); the repeated-literal shorthand for "there are ⋈C p".
  static CountingAtom MakeCount(Direction direction, std::int64_t bound,
                                Literal a) {
    return MakeUnary(direction, bound, a, a);
  }
  static CountingAtom MakeRelational(Direction direction, std::int64_t bound,
                                     std::string subject, std::string verb,
                                     Direction inner_direction,
                                     std::int64_t inner_bound,
                                     std::string object);

  Direction direction() const { return direction_; }
  std::int64_t bound() const { return bound_; }
  bool is_unary() const { return std::holds_alternative<Unary>(body_); }
  const Unary& unary() const { return std::get<Unary>(body_); }
  const Relational& relational() const { return std::get<Relational>(body_); }

  // ∃≤C with C < 0 can never hold; ∃≥C with C ≤ 0 always holds.
  bool trivially_false() const {
    return direction_ == Direction::kAtMost && bound_ < 0;
  }
  bool trivially_true() const {
    return direction_ == Direction::kAtLeast && bound_ <= 0;
  }

  CountingAtom with_bound(std::int64_t bound) const;

  // Symbolic form: ">=C (L1 & L2)" or ">=C subject [verb <=D object]".
  std::string str() const;

  // Unary predicates in order of appearance (subject before object).
  std::vector<std::string> unary_predicates() const;

  friend bool operator==(const CountingAtom&, const CountingAtom&) = default;
  friend bool operator<(const CountingAtom& a, const CountingAtom& b);

 private:
  CountingAtom(Direction d, std::int64_t bound, std::variant<Unary, Relational> body)
      : direction_(d), bound_(bound), body_(std::move(body)) {}

  Direction direction_ = Direction::kAtLeast;
  std::int64_t bound_ = 0;
  std::variant<Unary, Relational> body_;
};

// The dual atom: ∃≥C ↦ ∃≤(C−1), ∃≤C ↦ ∃≥(C+1), body unchanged. For relational
// atoms only the outer quantifier is dualized. Exactly one of a and
// NegateAtom(a) holds in any finite structure.
CountingAtom NegateAtom(const CountingAtom& atom);

enum class Comparison { kAtMost, kAtLeast, kExactly };
std::string_view ComparisonSymbol(Comparison c);

// Formula of the one-variable fragment with counting quantifiers. Atoms are
// unary predicates applied to the single variable; a counting node binds the
// variable afresh, so it is a closed subformula. Immutable; copies share
// structure.
class C1Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kCount };

  static C1Formula Constant(bool value);
  static C1Formula Atom(std::string predicate);
  static C1Formula Lit(const Literal& literal);
  static C1Formula Not(C1Formula body);
  static C1Formula And(std::vector<C1Formula> children);
  static C1Formula Or(std::vector<C1Formula> children);
  static C1Formula Count(Comparison comparison, std::int64_t bound,
                         C1Formula body);

  Kind kind() const { return node_->kind; }
  const std::string& predicate() const { return node_->predicate; }
  const std::vector<C1Formula>& children() const { return node_->children; }
  // Body of a kNot or kCount node.
  const C1Formula& body() const { return node_->children.front(); }
  Comparison comparison() const { return node_->comparison; }
  std::int64_t bound() const { return node_->bound; }

  bool quantifier_free() const;
  // Number of nested counting quantifiers on the deepest path.
  std::size_t quantifier_depth() const;
  // Appends predicates not already present, in first-appearance order.
  void CollectPredicates(std::vector<std::string>& out) const;
  // Symbolic rendering, parseable by ParseFormula.
  std::string str() const;

  friend bool operator==(const C1Formula& a, const C1Formula& b);

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    std::string predicate;
    std::vector<C1Formula> children;
    Comparison comparison = Comparison::kAtLeast;
    std::int64_t bound = 0;
  };
  explicit C1Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Embeds a unary counting atom. Relational atoms have no one-variable form and
// raise InputError.
C1Formula ToC1(const CountingAtom& atom);

// A full conjunction of signed predicates over an ordered predicate list; bit i
// of the mask is the polarity of predicate i.
struct OneType {
  std::uint64_t mask = 0;
  bool holds(std::size_t predicate_index) const {
    return ((mask >> predicate_index) & 1U) != 0;
  }
  friend bool operator==(const OneType&, const OneType&) = default;
};

// All 2^l types in numeric mask order. Throws CapExceeded when l > cap.
std::vector<OneType> OneTypes(std::span<const std::string> predicates,
                              std::size_t cap = kDefaultTypeCap);

// Fixed-size set of domain elements.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe, bool full = false);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t e) const {
    return ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }
  void insert(std::size_t e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(std::size_t e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> elements() const;

  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator|=(const ElementSet& o);
  ElementSet complement() const;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Explicit finite interpretation over the elements 0..n-1.
class FiniteStructure {
 public:
  explicit FiniteStructure(std::size_t domain_size = 0)
      : domain_size_(domain_size) {}

  std::size_t domain_size() const { return domain_size_; }

  // Interprets `predicate` (replacing any previous extension).
  void SetUnary(const std::string& predicate,
                std::span<const std::size_t> elements);
  void DeclareUnary(const std::string& predicate);
  void AddToUnary(const std::string& predicate, std::size_t element);
  void DeclareBinary(const std::string& predicate);
  void AddPair(const std::string& predicate, std::size_t from, std::size_t to);

  bool interprets_unary(const std::string& predicate) const {
    return unary_.count(predicate) != 0;
  }
  bool interprets_binary(const std::string& predicate) const {
    return binary_.count(predicate) != 0;
  }
  // Throws InputError for an uninterpreted predicate.
  const ElementSet& unary(const std::string& predicate) const;
  const std::vector<ElementSet>& successors(const std::string& predicate) const;
  bool related(const std::string& predicate, std::size_t from,
               std::size_t to) const {
    return successors(predicate)[from].contains(to);
  }

  const std::map<std::string, ElementSet>& unary_extensions() const { return unary_; }
  const std::map<std::string, std::vector<ElementSet>>& binary_extensions() const {
    return binary_;
  }

  friend bool operator==(const FiniteStructure&, const FiniteStructure&) = default;

 private:
  void CheckElement(std::size_t e) const;

  std::size_t domain_size_ = 0;
  std::map<std::string, ElementSet> unary_;
  std::map<std::string, std::vector<ElementSet>> binary_;
};

bool Evaluate(const FiniteStructure& s, const CountingAtom& atom);
// `f` must be closed: every predicate occurrence lies under a counting node.
bool Evaluate(const FiniteStructure& s, const C1Formula& f);
// Elements satisfying `f` read as an open formula in the single variable.
ElementSet Satisfying(const FiniteStructure& s, const C1Formula& f);

// Index (mask) of the 1-type realized by `element`.
std::uint64_t TypeOf(const FiniteStructure& s,
                     std::span<const std::string> predicates,
                     std::size_t element);
// Entry j counts the elements realizing type j; entries sum to domain_size.
std::vector<std::uint64_t> CardinalityVector(
    const FiniteStructure& s, std::span<const std::string> predicates,
    std::size_t cap = kDefaultTypeCap);

// Line-oriented text form:
//   domain N
//   unary p: 0,2,5
//   binary r: (0,1),(2,2)
FiniteStructure ParseStructure(std::string_view text);
std::string FormatStructure(const FiniteStructure& s);

}  // namespace numsyl

#endif  // NUMSYL_LOGIC_HPP_
