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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace numsyl::testing {

namespace {

std::uint64_t FullSet(std::size_t num_predicates) {
  const std::size_t types = std::size_t{1} << num_predicates;
  return types == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << types) - 1;
}

bool Compare(Comparison c, std::uint64_t n, std::int64_t bound) {
  const auto v = static_cast<std::int64_t>(n);
  switch (c) {
    case Comparison::kAtLeast: return v >= bound;
    case Comparison::kAtMost: return v <= bound;
    case Comparison::kExactly: return v == bound;
  }
  return false;
}

std::int64_t MaxBound(const C1Formula& f) {
  std::int64_t b = f.kind() == C1Formula::Kind::kCount ? f.bound() : 0;
  for (const auto& c : f.children()) b = std::max(b, MaxBound(c));
  return b;
}

bool LiteralHolds(const FiniteStructure& s, const Literal& l, std::size_t e) {
  const bool in = s.interprets_unary(l.predicate) && s.unary(l.predicate).contains(e);
  return in == l.positive;
}

}  // namespace

std::uint64_t TypeSet(const C1Formula& f, std::span<const std::string> predicates,
                      std::span<const std::uint64_t> counts) {
  const std::uint64_t full = FullSet(predicates.size());
  using K = C1Formula::Kind;
  switch (f.kind()) {
    case K::kTrue: return full;
    case K::kFalse: return 0;
    case K::kAtom: {
      const auto it = std::find(predicates.begin(), predicates.end(), f.predicate());
      if (it == predicates.end()) throw std::invalid_argument("unknown predicate");
      const auto bit = static_cast<std::size_t>(it - predicates.begin());
      std::uint64_t set = 0;
      for (std::size_t t = 0; t < counts.size(); ++t) {
        if ((t >> bit) & 1U) set |= std::uint64_t{1} << t;
      }
      return set;
    }
    case K::kNot: return full & ~TypeSet(f.body(), predicates, counts);
    case K::kAnd: {
      std::uint64_t set = full;
      for (const auto& c : f.children()) set &= TypeSet(c, predicates, counts);
      return set;
    }
    case K::kOr: {
      std::uint64_t set = 0;
      for (const auto& c : f.children()) set |= TypeSet(c, predicates, counts);
      return set;
    }
    case K::kCount: {
      const std::uint64_t body = TypeSet(f.body(), predicates, counts);
      std::uint64_t n = 0;
      for (std::size_t t = 0; t < counts.size(); ++t) {
        if ((body >> t) & 1U) n += counts[t];
      }
      return Compare(f.comparison(), n, f.bound()) ? full : 0;
    }
  }
  return 0;
}

bool HoldsOnCounts(const C1Formula& f, std::span<const std::string> predicates,
                   std::span<const std::uint64_t> counts) {
  const std::uint64_t full = FullSet(predicates.size());
  return (TypeSet(f, predicates, counts) & full) == full;
}

std::optional<std::vector<std::uint64_t>> BruteUnarySat(std::span<const C1Formula> formulas) {
  std::vector<std::string> predicates;
  std::int64_t bound = 0;
  for (const auto& f : formulas) {
    f.CollectPredicates(predicates);
    bound = std::max(bound, MaxBound(f));
  }
  if (predicates.size() > 4) throw std::invalid_argument("too many predicates for brute force");
  const std::size_t types = std::size_t{1} << predicates.size();
  const std::uint64_t cap = static_cast<std::uint64_t>(bound) + 1;
  std::vector<std::uint64_t> counts(types, 0);
  while (true) {
    // Odometer step.
    std::size_t i = 0;
    while (i < types && counts[i] == cap) counts[i++] = 0;
    if (i == types) return std::nullopt;
    ++counts[i];
    const bool all = std::all_of(formulas.begin(), formulas.end(), [&](const C1Formula& f) {
      return HoldsOnCounts(f, predicates, counts);
    });
    if (all) return counts;
  }
}

FiniteStructure StructureFromCounts(std::span<const std::string> predicates,
                                    std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  FiniteStructure s(total);
  for (const auto& p : predicates) s.DeclareUnary(p);
  std::size_t e = 0;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    for (std::uint64_t k = 0; k < counts[t]; ++k, ++e) {
      for (std::size_t i = 0; i < predicates.size(); ++i) {
        if ((t >> i) & 1U) s.AddToUnary(predicates[i], e);
      }
    }
  }
  return s;
}

bool LoopEvaluate(const FiniteStructure& s, const CountingAtom& atom) {
  const std::size_t n = s.domain_size();
  std::int64_t count = 0;
  if (atom.is_unary()) {
    const auto& u = atom.unary();
    for (std::size_t e = 0; e < n; ++e) {
      if (LiteralHolds(s, u.first, e) && LiteralHolds(s, u.second, e)) ++count;
    }
  } else {
    const auto& r = atom.relational();
    const bool has_verb = s.interprets_binary(r.verb);
    for (std::size_t x = 0; x < n; ++x) {
      if (!LiteralHolds(s, Literal{r.subject, true}, x)) continue;
      std::int64_t inner = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (LiteralHolds(s, Literal{r.object, true}, y) && has_verb && s.related(r.verb, x, y)) {
          ++inner;
        }
      }
      const bool ok = r.inner_direction == Direction::kAtLeast ? inner >= r.inner_bound
                                                               : inner <= r.inner_bound;
      if (ok) ++count;
    }
  }
  return atom.direction() == Direction::kAtLeast ? count >= atom.bound()
                                                 : count <= atom.bound();
}

bool BruteColourable(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<int> colour(n + 1, -1);
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v > n) return true;
    for (int c = 0; c < 3; ++c) {
      bool clash = false;
      for (const auto& [a, b] : edges) {
        if ((a == v && b < v && colour[b] == c) || (b == v && a < v && colour[a] == c)) {
          clash = true;
        }
      }
      if (clash) continue;
      colour[v] = c;
      if (place(v + 1)) return true;
    }
    colour[v] = -1;
    return false;
  };
  return place(1);
}

std::vector<std::vector<std::int64_t>> BoxSolutions(
    const std::vector<std::vector<std::int64_t>>& a, std::span<const std::int64_t> c,
    std::int64_t upper) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(cols, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < cols; ++j) sum += a[i][j] * x[j];
      ok = sum == c[i];
    }
    if (ok) out.push_back(x);
    // Odometer with the last coordinate fastest, so output is lexicographic.
    std::size_t j = cols;
    while (j > 0 && x[j - 1] == upper) x[--j] = 0;
    if (j == 0) break;
    ++x[j - 1];
  }
  return out;
}

std::size_t ColumnRank(const LinearSystem& sys, std::span<const std::size_t> columns) {
  std::vector<std::vector<mpq_class>> m(sys.num_rows(), std::vector<mpq_class>(columns.size()));
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      m[r][k] = sys.coefficient(r, columns[k]).raw();
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns.size() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < columns.size(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool Resolves(const LinearSystem& sys, std::span<const mpq_class> x) {
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j < sys.num_vars(); ++j) sum += sys.coefficient(r, j).raw() * x[j];
    const mpq_class& rhs = sys.row(r).rhs.raw();
    switch (sys.row(r).relation) {
      case Relation::kEqual:
        if (sum != rhs) return false;
        break;
      case Relation::kLessEqual:
        if (sum > rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (sum < rhs) return false;
        break;
    }
  }
  return true;
}

mpq_class PairProbability(const ProbabilityAssignment& p, const Literal& a, const Literal& b) {
  auto holds = [&](const Literal& l, std::uint64_t w) {
    const auto& letters = p.letters();
    const auto it = std::find(letters.begin(), letters.end(), l.predicate);
    const bool v = it != letters.end() &&
                   ((w >> static_cast<std::size_t>(it - letters.begin())) & 1U) != 0;
    return v == l.positive;
  };
  mpq_class sum = 0;
  for (const auto& w : p.worlds()) {
    if (holds(a, w.assignment) && holds(b, w.assignment)) sum += w.weight.raw();
  }
  return sum;
}

bool ThresholdHolds(const ProbabilityAssignment& p, std::int64_t scale, const CountingAtom& atom) {
  const auto& u = atom.unary();
  const mpq_class scaled = PairProbability(p, u.first, u.second) * scale;
  return atom.direction() == Direction::kAtLeast ? scaled >= atom.bound()
                                                 : scaled <= atom.bound();
}

}  // namespace numsyl::testing
