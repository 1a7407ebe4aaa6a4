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

#include "numsyl/n2_solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "numsyl/error.hpp"

namespace numsyl {

std::string_view SearchStatusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNoModel:
      return "no-model";
    case SearchStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

bool Meets(Direction d, std::int64_t value, std::int64_t bound) {
  return d == Direction::kAtLeast ? value >= bound : value <= bound;
}

std::vector<std::string> UnaryPredicates(std::span<const CountingAtom> phi) {
  std::set<std::string> out;
  for (const auto& a : phi) {
    for (auto& p : a.unary_predicates()) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> Verbs(std::span<const CountingAtom> phi) {
  std::set<std::string> out;
  for (const auto& a : phi) {
    if (!a.is_unary()) out.insert(a.relational().verb);
  }
  return {out.begin(), out.end()};
}

std::int64_t MaxBound(std::span<const CountingAtom> phi) {
  std::int64_t c = 0;
  for (const auto& a : phi) {
    c = std::max(c, a.bound());
    if (!a.is_unary()) c = std::max(c, a.relational().inner_bound);
  }
  return c;
}

// Whether element e satisfies the body of `atom` (the part under the outer
// quantifier).
bool BodyHolds(const FiniteStructure& s, const CountingAtom& atom, std::size_t e) {
  if (atom.is_unary()) {
    const auto& u = atom.unary();
    return s.unary(u.first.predicate).contains(e) == u.first.positive &&
           s.unary(u.second.predicate).contains(e) == u.second.positive;
  }
  const auto& r = atom.relational();
  if (!s.unary(r.subject).contains(e)) return false;
  const auto inner =
      static_cast<std::int64_t>((s.successors(r.verb)[e] & s.unary(r.object)).count());
  return Meets(r.inner_direction, inner, r.inner_bound);
}

std::size_t PredicateIndex(const std::vector<std::string>& preds, const std::string& p) {
  return static_cast<std::size_t>(std::lower_bound(preds.begin(), preds.end(), p) -
                                  preds.begin());
}

}  // namespace

std::uint64_t SizeBound(std::span<const CountingAtom> phi) {
  const std::size_t l = UnaryPredicates(phi).size();
  if (l >= 63) throw CapExceeded("too many unary predicates for the size bound");
  std::uint64_t cap = 0;
  std::uint64_t bound = 0;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(MaxBound(phi)), phi.size(), &cap) ||
      __builtin_add_overflow(cap, 1, &cap) ||
      __builtin_mul_overflow(std::uint64_t{1} << l, cap, &bound)) {
    throw CapExceeded("size bound exceeds 64 bits");
  }
  return bound;
}

// ---------------------------------------------------------------------------
// Shrink

ShrinkReport ShrinkModel(const FiniteStructure& s, std::span<const CountingAtom> phi) {
  for (const auto& a : phi) {
    if (!Evaluate(s, a)) throw InputError("structure does not satisfy " + a.str());
  }
  ShrinkReport report;
  report.input_size = s.domain_size();
  report.predicates = UnaryPredicates(phi);
  if (report.predicates.size() > 62) throw CapExceeded("too many unary predicates");
  const std::int64_t cap = MaxBound(phi) * static_cast<std::int64_t>(phi.size()) + 1;
  report.cell_cap = cap;
  const std::size_t n = s.domain_size();

  // Witnesses: the first D elements satisfying each at-least body.
  std::set<std::size_t> witnesses;
  for (const auto& a : phi) {
    if (a.direction() != Direction::kAtLeast) continue;
    std::int64_t need = a.bound();
    for (std::size_t e = 0; e < n && need > 0; ++e) {
      if (BodyHolds(s, a, e)) {
        witnesses.insert(e);
        --need;
      }
    }
  }
  report.witnesses.assign(witnesses.begin(), witnesses.end());

  // Cells by type; keep witnesses, then fill by ascending index.
  std::map<std::uint64_t, std::vector<std::size_t>> cells;
  for (std::size_t e = 0; e < n; ++e) {
    cells[TypeOf(s, report.predicates, e)].push_back(e);
  }
  std::map<std::uint64_t, std::vector<std::size_t>> kept;
  std::set<std::size_t> retained;
  for (const auto& [type, members] : cells) {
    const std::size_t target =
        std::min(members.size(), static_cast<std::size_t>(cap));
    std::set<std::size_t> chosen;
    for (std::size_t e : members) {
      if (witnesses.count(e)) chosen.insert(e);
    }
    for (std::size_t e : members) {
      if (chosen.size() >= target) break;
      chosen.insert(e);
    }
    kept[type].assign(chosen.begin(), chosen.end());
    retained.insert(chosen.begin(), chosen.end());
    report.cells.push_back(CellCount{type, members.size(), chosen.size()});
  }
  report.retained.assign(retained.begin(), retained.end());
  std::vector<std::size_t> renumber(n, SIZE_MAX);
  for (std::size_t k = 0; k < report.retained.size(); ++k) {
    renumber[report.retained[k]] = k;
  }

  FiniteStructure out(report.retained.size());
  for (const auto& [p, ext] : s.unary_extensions()) {
    out.DeclareUnary(p);
    for (std::size_t e : ext.elements()) {
      if (renumber[e] != SIZE_MAX) out.AddToUnary(p, renumber[e]);
    }
  }
  // Each kept element sees min(original, cap) successors per cell, original
  // successors first, all in ascending order.
  for (const auto& [r, succ] : s.binary_extensions()) {
    out.DeclareBinary(r);
    for (std::size_t a : report.retained) {
      for (const auto& [type, members] : cells) {
        std::size_t want = 0;
        for (std::size_t b : members) want += succ[a].contains(b) ? 1 : 0;
        want = std::min(want, static_cast<std::size_t>(cap));
        const auto& pool = kept.at(type);
        std::size_t added = 0;
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t b : pool) {
            if (added == want) break;
            if (succ[a].contains(b) == (pass == 0)) {
              out.AddPair(r, renumber[a], renumber[b]);
              ++added;
            }
          }
        }
      }
    }
  }
  for (const auto& a : phi) {
    if (!Evaluate(out, a)) throw std::logic_error("shrunk structure fails " + a.str());
  }
  if (out.domain_size() > SizeBound(phi)) {
    throw std::logic_error("shrunk structure exceeds the size bound");
  }
  report.output = std::move(out);
  return report;
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

struct BudgetExhausted {};

class Searcher {
 public:
  Searcher(std::span<const CountingAtom> phi, const SearchOptions& options)
      : phi_(phi.begin(), phi.end()), options_(options) {
    preds_ = UnaryPredicates(phi);
    verbs_ = Verbs(phi);
    if (preds_.size() > options.max_predicates) {
      throw CapExceeded("bounded search supports at most " +
                        std::to_string(options.max_predicates) + " unary predicates");
    }
    num_types_ = std::size_t{1} << preds_.size();
    for (const auto& a : phi_) {
      if (a.is_unary()) {
        unary_.push_back(&a);
      } else {
        relational_.push_back(&a);
      }
    }
    if (relational_.size() > 64) throw CapExceeded("too many relational atoms");
  }

  std::uint64_t nodes() const { return nodes_; }

  std::optional<FiniteStructure> Run(std::size_t domain) {
    counts_.assign(num_types_, 0);
    return Compose(0, domain);
  }

 private:
  void Tick() {
    if (++nodes_ > options_.node_budget) throw BudgetExhausted{};
  }

  bool LiteralHolds(std::uint64_t type, const Literal& l) const {
    return (((type >> PredicateIndex(preds_, l.predicate)) & 1U) != 0) == l.positive;
  }

  bool UnaryOk(bool complete) const {
    for (const CountingAtom* a : unary_) {
      std::int64_t c = 0;
      for (std::size_t t = 0; t < num_types_; ++t) {
        if (LiteralHolds(t, a->unary().first) && LiteralHolds(t, a->unary().second)) {
          c += static_cast<std::int64_t>(counts_[t]);
        }
      }
      if (a->direction() == Direction::kAtMost && c > a->bound()) return false;
      if (complete && !Meets(a->direction(), c, a->bound())) return false;
    }
    return true;
  }

  // Cardinality vectors, lexicographically from the largest count in type 0.
  std::optional<FiniteStructure> Compose(std::size_t t, std::size_t left) {
    Tick();
    if (t + 1 == num_types_) {
      counts_[t] = left;
      std::optional<FiniteStructure> r;
      if (UnaryOk(true)) r = Relations();
      counts_[t] = 0;
      return r;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      counts_[t] = k;
      if (UnaryOk(false)) {
        if (auto r = Compose(t + 1, left - k)) return r;
      }
    }
    counts_[t] = 0;
    return std::nullopt;
  }

  // Per element only the truth values of the relational bodies matter, and
  // those depend on successor counts per cell, never on which successors.
  // So each cell splits into groups sharing a body pattern.
  struct Pattern {
    std::uint64_t mask = 0;
    // Successor count per (verb, type).
    std::vector<std::size_t> profile;
  };

  std::optional<FiniteStructure> Relations() {
    nonempty_.clear();
    for (std::size_t t = 0; t < num_types_; ++t) {
      if (counts_[t] > 0) nonempty_.push_back(t);
    }
    // Inner-truth masks achievable per verb, with a witness profile each.
    std::vector<std::map<std::uint64_t, std::vector<std::size_t>>> per_verb(verbs_.size());
    for (std::size_t v = 0; v < verbs_.size(); ++v) {
      std::vector<std::size_t> c(nonempty_.size(), 0);
      while (true) {
        Tick();
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < relational_.size(); ++i) {
          const auto& r = relational_[i]->relational();
          if (r.verb != verbs_[v]) continue;
          std::int64_t inner = 0;
          const std::size_t q = PredicateIndex(preds_, r.object);
          for (std::size_t k = 0; k < nonempty_.size(); ++k) {
            if ((nonempty_[k] >> q) & 1U) inner += static_cast<std::int64_t>(c[k]);
          }
          if (Meets(r.inner_direction, inner, r.inner_bound)) mask |= std::uint64_t{1} << i;
        }
        per_verb[v].emplace(mask, c);
        std::size_t k = 0;
        while (k < c.size() && c[k] == counts_[nonempty_[k]]) c[k++] = 0;
        if (k == c.size()) break;
        ++c[k];
      }
    }
    // Patterns per nonempty cell: product over verbs, filtered by subject.
    patterns_.assign(nonempty_.size(), {});
    for (std::size_t k = 0; k < nonempty_.size(); ++k) {
      std::uint64_t subject_mask = 0;
      for (std::size_t i = 0; i < relational_.size(); ++i) {
        const std::size_t p = PredicateIndex(preds_, relational_[i]->relational().subject);
        if ((nonempty_[k] >> p) & 1U) subject_mask |= std::uint64_t{1} << i;
      }
      std::map<std::uint64_t, std::vector<std::size_t>> acc{{0, {}}};
      for (std::size_t v = 0; v < verbs_.size(); ++v) {
        std::map<std::uint64_t, std::vector<std::size_t>> next;
        for (const auto& [m1, p1] : acc) {
          for (const auto& [m2, p2] : per_verb[v]) {
            Tick();
            auto prof = p1;
            prof.insert(prof.end(), p2.begin(), p2.end());
            next.emplace(m1 | (m2 & subject_mask), std::move(prof));
          }
        }
        acc = std::move(next);
      }
      for (auto& [mask, prof] : acc) patterns_[k].push_back(Pattern{mask, std::move(prof)});
    }
    rel_counts_.assign(relational_.size(), 0);
    group_sizes_.assign(nonempty_.size(), {});
    for (std::size_t k = 0; k < nonempty_.size(); ++k) {
      group_sizes_[k].assign(patterns_[k].size(), 0);
    }
    std::size_t total = 0;
    for (std::size_t t : nonempty_) total += counts_[t];
    if (!Distribute(0, 0, counts_[nonempty_.empty() ? 0 : nonempty_[0]], total)) {
      return std::nullopt;
    }
    return Materialize();
  }

  bool RelationalOk(std::size_t unassigned) const {
    for (std::size_t i = 0; i < relational_.size(); ++i) {
      const auto c = static_cast<std::int64_t>(rel_counts_[i]);
      const CountingAtom& a = *relational_[i];
      if (a.direction() == Direction::kAtMost && c > a.bound()) return false;
      if (a.direction() == Direction::kAtLeast &&
          c + static_cast<std::int64_t>(unassigned) < a.bound()) {
        return false;
      }
    }
    return true;
  }

  // Splits cell k's remaining `left` elements among its patterns from index j.
  bool Distribute(std::size_t k, std::size_t j, std::size_t left, std::size_t unassigned) {
    Tick();
    if (k == nonempty_.size()) return RelationalOk(0);
    const auto& pats = patterns_[k];
    if (j + 1 == pats.size()) {
      return Assign(k, j, left, unassigned, [&] {
        return k + 1 == nonempty_.size()
                   ? RelationalOk(0)
                   : Distribute(k + 1, 0, counts_[nonempty_[k + 1]], unassigned - left);
      });
    }
    for (std::size_t take = left + 1; take-- > 0;) {
      if (Assign(k, j, take, unassigned,
                 [&] { return Distribute(k, j + 1, left - take, unassigned - take); })) {
        return true;
      }
    }
    return false;
  }

  template <typename Next>
  bool Assign(std::size_t k, std::size_t j, std::size_t take, std::size_t unassigned,
              Next next) {
    const std::uint64_t mask = patterns_[k][j].mask;
    for (std::size_t i = 0; i < relational_.size(); ++i) {
      if ((mask >> i) & 1U) rel_counts_[i] += take;
    }
    group_sizes_[k][j] = take;
    const bool ok = RelationalOk(unassigned - take) && next();
    if (!ok) {
      for (std::size_t i = 0; i < relational_.size(); ++i) {
        if ((mask >> i) & 1U) rel_counts_[i] -= take;
      }
      group_sizes_[k][j] = 0;
    }
    return ok;
  }

  FiniteStructure Materialize() const {
    std::size_t n = 0;
    std::vector<std::size_t> first(nonempty_.size());
    for (std::size_t k = 0; k < nonempty_.size(); ++k) {
      first[k] = n;
      n += counts_[nonempty_[k]];
    }
    FiniteStructure s(n);
    for (std::size_t p = 0; p < preds_.size(); ++p) {
      s.DeclareUnary(preds_[p]);
      for (std::size_t k = 0; k < nonempty_.size(); ++k) {
        if ((nonempty_[k] >> p) & 1U) {
          for (std::size_t e = 0; e < counts_[nonempty_[k]]; ++e) {
            s.AddToUnary(preds_[p], first[k] + e);
          }
        }
      }
    }
    for (const auto& v : verbs_) s.DeclareBinary(v);
    for (std::size_t k = 0; k < nonempty_.size(); ++k) {
      std::size_t e = first[k];
      for (std::size_t j = 0; j < patterns_[k].size(); ++j) {
        const auto& prof = patterns_[k][j].profile;
        for (std::size_t g = 0; g < group_sizes_[k][j]; ++g, ++e) {
          for (std::size_t v = 0; v < verbs_.size(); ++v) {
            for (std::size_t c = 0; c < nonempty_.size(); ++c) {
              const std::size_t want = prof[v * nonempty_.size() + c];
              for (std::size_t b = 0; b < want; ++b) s.AddPair(verbs_[v], e, first[c] + b);
            }
          }
        }
      }
    }
    return s;
  }

  std::vector<CountingAtom> phi_;
  SearchOptions options_;
  std::vector<std::string> preds_;
  std::vector<std::string> verbs_;
  std::size_t num_types_ = 1;
  std::vector<const CountingAtom*> unary_;
  std::vector<const CountingAtom*> relational_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> nonempty_;
  std::vector<std::vector<Pattern>> patterns_;
  std::vector<std::size_t> rel_counts_;
  std::vector<std::vector<std::size_t>> group_sizes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult BoundedSearch(std::span<const CountingAtom> phi, std::size_t domain_cap,
                           const SearchOptions& options) {
  Searcher searcher(phi, options);
  SearchResult result;
  try {
    for (std::size_t d = std::max<std::size_t>(options.min_domain, 1); d <= domain_cap;
         ++d) {
      if (auto m = searcher.Run(d)) {
        for (const auto& a : phi) {
          if (!Evaluate(*m, a)) throw std::logic_error("search model fails " + a.str());
        }
        result.status = SearchStatus::kFound;
        result.model = std::move(m);
        break;
      }
    }
    if (!result.model) result.status = SearchStatus::kNoModel;
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::kUnknown;
  }
  result.nodes = searcher.nodes();
  return result;
}

}  // namespace numsyl
