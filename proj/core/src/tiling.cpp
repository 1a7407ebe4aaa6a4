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

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "numsyl/error.hpp"
#include "numsyl/reductions.hpp"

namespace numsyl {

namespace {

using Membership = std::function<bool(std::size_t x, std::size_t y)>;

// One of the s "notebook" predicates, its barred counterpart and its
// intended extension on the grid.
struct Tracked {
  std::string name;
  std::string bar;
  Membership holds;
  bool starred = false;  // complement axioms come from group 5, not group 0
};

// A clause literal: tracked predicate h, positive (h) or barred.
using ClauseLiteral = std::pair<std::size_t, bool>;
using Clause = std::vector<ClauseLiteral>;

struct Layout {
  std::size_t k = 0;
  std::size_t n = 0;  // grid side
  std::vector<Tracked> tracked;
  std::vector<Clause> clauses;
  // Indices into `tracked`, per axis.
  std::array<std::vector<std::size_t>, 2> digit;
  std::array<std::vector<std::size_t>, 2> star;
  std::array<std::vector<std::vector<std::size_t>>, 2> plus;
  std::array<std::vector<std::vector<std::size_t>>, 2> minus;
};

bool Bit(std::size_t v, std::size_t i) { return ((v >> i) & 1U) != 0; }

// x-axis predicates read x, y-axis ones read y.
Layout MakeLayout(std::size_t k) {
  Layout lay;
  lay.k = k;
  lay.n = std::size_t{1} << k;
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const std::string a = axis == 0 ? "X" : "Y";
    auto coord = [axis](std::size_t x, std::size_t y) { return axis == 0 ? x : y; };
    auto add = [&](std::string name, Membership m, bool starred) {
      lay.tracked.push_back(Tracked{name, "n" + name, std::move(m), starred});
      return lay.tracked.size() - 1;
    };
    // All digits below i are 1.
    auto low_ones = [coord](std::size_t x, std::size_t y, std::size_t i) {
      for (std::size_t b = 0; b < i; ++b) {
        if (!Bit(coord(x, y), b)) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < k; ++i) {
      lay.digit[axis].push_back(add(a + std::to_string(i),
                                    [=](auto x, auto y) { return Bit(coord(x, y), i); },
                                    false));
    }
    for (std::size_t i = 0; i <= k; ++i) {
      lay.star[axis].push_back(add(a + "s" + std::to_string(i),
                                   [=](auto x, auto y) {
                                     return low_ones(x, y, i) &&
                                            (i == k || !Bit(coord(x, y), i));
                                   },
                                   true));
    }
    lay.plus[axis].assign(k, std::vector<std::size_t>(k, SIZE_MAX));
    lay.minus[axis].assign(k, std::vector<std::size_t>(k, SIZE_MAX));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::string idx = std::to_string(i) + "_" + std::to_string(j);
        lay.plus[axis][i][j] = add(a + "p" + idx,
                                   [=](auto x, auto y) {
                                     return low_ones(x, y, i) && !Bit(coord(x, y), i) &&
                                            Bit(coord(x, y), j);
                                   },
                                   true);
        lay.minus[axis][i][j] = add(a + "m" + idx,
                                    [=](auto x, auto y) {
                                      return low_ones(x, y, i) && !Bit(coord(x, y), i) &&
                                             !Bit(coord(x, y), j);
                                    },
                                    true);
      }
    }
  }
  // Clauses: each guarantees membership of a starred predicate.
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const auto& d = lay.digit[axis];
    auto lower_zero = [&](Clause& c, std::size_t i) {
      for (std::size_t b = 0; b < i; ++b) c.emplace_back(d[b], false);
    };
    for (std::size_t i = 0; i < k; ++i) {
      Clause c{{lay.star[axis][i], true}, {d[i], true}};
      lower_zero(c, i);
      lay.clauses.push_back(c);
    }
    {
      Clause c{{lay.star[axis][k], true}};
      lower_zero(c, k);
      lay.clauses.push_back(c);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Clause plus{{lay.plus[axis][i][j], true}, {d[j], false}, {d[i], true}};
        lower_zero(plus, i);
        lay.clauses.push_back(plus);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Clause minus{{lay.minus[axis][i][j], true}, {d[j], true}, {d[i], true}};
        lower_zero(minus, i);
        lay.clauses.push_back(minus);
      }
    }
  }
  return lay;
}

std::string ColourName(const TilingSystem& ts, std::size_t c) { return "c_" + ts.colours[c]; }
std::string InitName(std::size_t i) { return "o" + std::to_string(i); }
std::string NoteName(std::size_t h, bool top) {
  return (top ? "l" : "nl") + std::to_string(h + 1);
}
std::string GadgetVerb(std::size_t g) { return "r" + std::to_string(g + 1); }

Literal Pos(const std::string& p) { return Literal{p, true}; }
Literal Neg(const std::string& p) { return Literal{p, false}; }

CountingAtom AtMost(std::int64_t c, const Literal& a, const Literal& b) {
  return CountingAtom::MakeUnary(Direction::kAtMost, c, a, b);
}
CountingAtom AtLeast(std::int64_t c, const Literal& a, const Literal& b) {
  return CountingAtom::MakeUnary(Direction::kAtLeast, c, a, b);
}
// No subject element has a verb-successor in object.
CountingAtom NoEdge(const std::string& subject, const std::string& verb,
                    const std::string& object) {
  return CountingAtom::MakeRelational(Direction::kAtMost, 0, subject, verb,
                                      Direction::kAtLeast, 1, object);
}
// Every subject element has a verb-successor in object.
CountingAtom SomeEdge(const std::string& subject, const std::string& verb,
                      const std::string& object) {
  return CountingAtom::MakeRelational(Direction::kAtMost, 0, subject, verb,
                                      Direction::kAtMost, 0, object);
}

std::int64_t Extent(const Layout& lay, const Tracked& t) {
  std::int64_t count = 0;
  for (std::size_t y = 0; y < lay.n; ++y) {
    for (std::size_t x = 0; x < lay.n; ++x) count += t.holds(x, y) ? 1 : 0;
  }
  return count;
}

void CheckInputs(const TilingSystem& ts, const std::vector<std::size_t>& init,
                 std::size_t k) {
  if (k == 0 || k > 16) throw InputError("tiling exponent must be in 1..16");
  if (init.size() > (std::size_t{1} << k)) {
    throw InputError("initial row is longer than the grid side");
  }
  if (ts.colours.empty()) throw InputError("tiling system has no colours");
  for (std::size_t c : init) {
    if (c >= ts.colours.size()) throw InputError("initial row mentions an unknown colour");
  }
}

}  // namespace

std::size_t TilingEncoding::witness_domain() const {
  return colours * grid_size * grid_size + 2 * notebook;
}

TilingEncoding EncodeTiling(const TilingSystem& ts, const std::vector<std::size_t>& init,
                            std::size_t k) {
  CheckInputs(ts, init, k);
  const Layout lay = MakeLayout(k);
  const auto n = static_cast<std::int64_t>(lay.n);
  const std::int64_t area = n * n;
  const auto m = static_cast<std::int64_t>(ts.colours.size());
  const std::size_t s = lay.tracked.size();

  TilingEncoding enc;
  enc.exponent = k;
  enc.grid_size = lay.n;
  enc.notebook = s;
  enc.colours = ts.colours.size();
  enc.clauses = lay.clauses.size();
  auto& out = enc.atoms;
  std::size_t group_start = 0;
  auto close_group = [&](std::size_t g) {
    enc.group_sizes[g] = out.size() - group_start;
    group_start = out.size();
  };
  const std::string q = "q";
  const std::string o = "o";
  const std::string l = "l";

  // 0: digit predicates partition the grid.
  out.push_back(AtMost(area, Pos(q), Pos(q)));
  for (std::size_t axis = 0; axis < 2; ++axis) {
    for (std::size_t d : lay.digit[axis]) {
      const Tracked& t = lay.tracked[d];
      out.push_back(AtLeast(area / 2, Pos(t.name), Pos(t.name)));
      out.push_back(AtLeast(area / 2, Pos(t.bar), Pos(t.bar)));
      out.push_back(AtMost(0, Pos(t.name), Neg(q)));
      out.push_back(AtMost(0, Pos(t.bar), Neg(q)));
      out.push_back(AtMost(0, Pos(t.name), Pos(t.bar)));
    }
  }
  close_group(0);

  // 1: h and v are successor maps on the coordinates.
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const std::string verb = axis == 0 ? "h" : "v";
    const auto& own = lay.digit[axis];
    const auto& other = lay.digit[1 - axis];
    out.push_back(SomeEdge(q, verb, q));
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back(
          NoEdge(lay.tracked[lay.star[axis][i]].name, verb, lay.tracked[own[i]].bar));
    }
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        out.push_back(
            NoEdge(lay.tracked[lay.star[axis][i]].name, verb, lay.tracked[own[j]].name));
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        out.push_back(NoEdge(lay.tracked[lay.plus[axis][i][j]].name, verb,
                             lay.tracked[own[j]].bar));
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        out.push_back(NoEdge(lay.tracked[lay.minus[axis][i][j]].name, verb,
                             lay.tracked[own[j]].name));
      }
    }
    for (std::size_t d : other) {
      out.push_back(NoEdge(lay.tracked[d].name, verb, lay.tracked[d].bar));
    }
    for (std::size_t d : other) {
      out.push_back(NoEdge(lay.tracked[d].bar, verb, lay.tracked[d].name));
    }
  }
  close_group(1);

  // 2: colours cover o, with the dump absorbing the surplus.
  out.push_back(AtMost(0, Pos(q), Neg(o)));
  out.push_back(AtMost(m * area, Pos(o), Pos(o)));
  for (std::int64_t c = 0; c < m; ++c) {
    const std::string cn = ColourName(ts, static_cast<std::size_t>(c));
    out.push_back(AtLeast(area, Pos(cn), Pos(cn)));
    out.push_back(AtMost(0, Pos(cn), Neg(o)));
  }
  for (std::int64_t c = 0; c < m; ++c) {
    for (std::int64_t d = c + 1; d < m; ++d) {
      out.push_back(AtMost(0, Pos(ColourName(ts, static_cast<std::size_t>(c))),
                           Pos(ColourName(ts, static_cast<std::size_t>(d)))));
    }
  }
  close_group(2);

  // 3: initial row.
  for (std::size_t i = 0; i < init.size(); ++i) {
    const std::string oi = InitName(i);
    out.push_back(AtLeast(1, Pos(oi), Pos(q)));
    for (std::size_t b = 0; b < k; ++b) {
      const Tracked& xd = lay.tracked[lay.digit[0][b]];
      out.push_back(AtMost(0, Pos(oi), Neg(Bit(i, b) ? xd.name : xd.bar)));
    }
    for (std::size_t b = 0; b < k; ++b) {
      out.push_back(AtMost(0, Pos(oi), Neg(lay.tracked[lay.digit[1][b]].bar)));
    }
    out.push_back(AtMost(0, Pos(oi), Neg(ColourName(ts, init[i]))));
  }
  close_group(3);

  // 4: adjacency constraints.
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const auto& rel = axis == 0 ? ts.horizontal : ts.vertical;
    for (std::size_t a = 0; a < ts.colours.size(); ++a) {
      for (std::size_t b = 0; b < ts.colours.size(); ++b) {
        if (!rel.count({a, b})) {
          out.push_back(NoEdge(ColourName(ts, a), axis == 0 ? "h" : "v", ColourName(ts, b)));
        }
      }
    }
  }
  close_group(4);

  // 5: barred counterparts of the starred predicates, complementary on q.
  for (const Tracked& t : lay.tracked) {
    if (!t.starred) continue;
    const std::int64_t size = Extent(lay, t);
    out.push_back(AtLeast(size, Pos(t.name), Pos(t.name)));
    out.push_back(AtLeast(area - size, Pos(t.bar), Pos(t.bar)));
    out.push_back(AtMost(0, Pos(t.name), Neg(q)));
    out.push_back(AtMost(0, Pos(t.bar), Neg(q)));
    out.push_back(AtMost(0, Pos(t.name), Pos(t.bar)));
  }
  close_group(5);

  // 6: the notebook, one element per tracked literal.
  const auto notebook = static_cast<std::int64_t>(2 * s);
  out.push_back(AtMost(notebook, Pos(l), Pos(l)));
  for (std::size_t h = 0; h < s; ++h) {
    for (bool top : {true, false}) {
      out.push_back(AtLeast(1, Pos(NoteName(h, top)), Pos(NoteName(h, top))));
      out.push_back(AtMost(0, Pos(NoteName(h, top)), Neg(l)));
    }
  }
  for (std::size_t h = 0; h < s; ++h) {
    for (std::size_t h2 = h + 1; h2 < s; ++h2) {
      out.push_back(AtMost(0, Pos(NoteName(h, true)), Pos(NoteName(h2, true))));
      out.push_back(AtMost(0, Pos(NoteName(h, false)), Pos(NoteName(h2, false))));
    }
  }
  for (std::size_t h = 0; h < s; ++h) {
    for (std::size_t h2 = 0; h2 < s; ++h2) {
      out.push_back(AtMost(0, Pos(NoteName(h, true)), Pos(NoteName(h2, false))));
    }
  }
  close_group(6);

  // 7: one gadget per clause; r_g points each grid element at a literal of
  // the clause that it satisfies.
  for (std::size_t g = 0; g < lay.clauses.size(); ++g) {
    const Clause& clause = lay.clauses[g];
    const std::string r = GadgetVerb(g);
    out.push_back(SomeEdge(q, r, l));
    for (std::size_t h = 0; h < s; ++h) {
      for (bool top : {true, false}) {
        if (std::find(clause.begin(), clause.end(), ClauseLiteral{h, top}) == clause.end()) {
          out.push_back(NoEdge(q, r, NoteName(h, top)));
        }
      }
    }
    for (std::size_t h = 0; h < s; ++h) {
      out.push_back(NoEdge(lay.tracked[h].name, r, NoteName(h, false)));
      out.push_back(NoEdge(lay.tracked[h].bar, r, NoteName(h, true)));
    }
  }
  close_group(7);
  return enc;
}

FiniteStructure TilingWitness(const TilingSystem& ts, const Tiling& t,
                              const std::vector<std::size_t>& init, std::size_t k) {
  CheckInputs(ts, init, k);
  const Layout lay = MakeLayout(k);
  const std::size_t n = lay.n;
  if (t.size != n) throw InputError("tiling size differs from 2^k");
  if (!IsValidTiling(ts, t)) throw InputError("not a valid tiling");
  if (!HasInitialRow(t, init)) throw InputError("tiling disagrees with the initial row");
  const std::size_t area = n * n;
  const std::size_t s = lay.tracked.size();
  const std::size_t m = ts.colours.size();
  // Grid, then notebook (top/bottom interleaved), then the dump.
  const std::size_t note0 = area;
  const std::size_t dump0 = area + 2 * s;
  FiniteStructure a(dump0 + (m - 1) * area);
  auto grid = [n](std::size_t x, std::size_t y) { return y * n + x; };
  auto note = [note0](std::size_t h, bool top) { return note0 + 2 * h + (top ? 0 : 1); };

  for (const char* p : {"q", "o", "l"}) a.DeclareUnary(p);
  for (std::size_t e = 0; e < area; ++e) {
    a.AddToUnary("q", e);
    a.AddToUnary("o", e);
  }
  for (std::size_t e = dump0; e < a.domain_size(); ++e) a.AddToUnary("o", e);
  for (const Tracked& tr : lay.tracked) {
    a.DeclareUnary(tr.name);
    a.DeclareUnary(tr.bar);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) a.AddToUnary(tr.holds(x, y) ? tr.name : tr.bar, grid(x, y));
    }
  }
  // Colours: grid cells plus disjoint dump blocks of size area - n_c,
  // allocated in colour order.
  std::size_t next_dump = dump0;
  for (std::size_t c = 0; c < m; ++c) {
    const std::string cn = ColourName(ts, c);
    a.DeclareUnary(cn);
    std::size_t used = 0;
    for (std::size_t e = 0; e < area; ++e) {
      if (t.grid[e] == c) {
        a.AddToUnary(cn, e);
        ++used;
      }
    }
    for (std::size_t i = used; i < area; ++i) a.AddToUnary(cn, next_dump++);
  }
  for (std::size_t i = 0; i < init.size(); ++i) {
    a.DeclareUnary(InitName(i));
    a.AddToUnary(InitName(i), grid(i, 0));
  }
  for (std::size_t h = 0; h < s; ++h) {
    for (bool top : {true, false}) {
      a.DeclareUnary(NoteName(h, top));
      a.AddToUnary(NoteName(h, top), note(h, top));
      a.AddToUnary("l", note(h, top));
    }
  }
  a.DeclareBinary("h");
  a.DeclareBinary("v");
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      a.AddPair("h", grid(x, y), grid((x + 1) % n, y));
      a.AddPair("v", grid(x, y), grid(x, (y + 1) % n));
    }
  }
  for (std::size_t g = 0; g < lay.clauses.size(); ++g) {
    const std::string r = GadgetVerb(g);
    a.DeclareBinary(r);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const auto lit = std::find_if(
            lay.clauses[g].begin(), lay.clauses[g].end(),
            [&](const ClauseLiteral& cl) { return lay.tracked[cl.first].holds(x, y) == cl.second; });
        if (lit == lay.clauses[g].end()) throw std::logic_error("clause fails on the grid");
        a.AddPair(r, grid(x, y), note(lit->first, lit->second));
      }
    }
  }
  return a;
}

Tiling DecodeTiling(const FiniteStructure& s, const TilingSystem& ts,
                    const std::vector<std::size_t>& init, std::size_t k) {
  const TilingEncoding enc = EncodeTiling(ts, init, k);
  for (const auto& atom : enc.atoms) {
    if (!Evaluate(s, atom)) throw InputError("structure does not satisfy " + atom.str());
  }
  const Layout lay = MakeLayout(k);
  const std::size_t n = lay.n;
  Tiling t{n, std::vector<std::size_t>(n * n, SIZE_MAX)};
  const auto members = s.unary("q").elements();
  if (members.size() != n * n) throw std::logic_error("grid has the wrong size");
  for (std::size_t e : members) {
    std::size_t x = 0;
    std::size_t y = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (s.unary(lay.tracked[lay.digit[0][b]].name).contains(e)) x |= std::size_t{1} << b;
      if (s.unary(lay.tracked[lay.digit[1][b]].name).contains(e)) y |= std::size_t{1} << b;
    }
    std::size_t& cell = t.grid[y * n + x];
    if (cell != SIZE_MAX) throw std::logic_error("two grid elements share coordinates");
    for (std::size_t c = 0; c < ts.colours.size(); ++c) {
      if (s.unary(ColourName(ts, c)).contains(e)) cell = c;
    }
    if (cell == SIZE_MAX) throw std::logic_error("grid element without a colour");
  }
  if (!IsValidTiling(ts, t) || !HasInitialRow(t, init)) {
    throw std::logic_error("decoded tiling fails its constraints");
  }
  return t;
}

}  // namespace numsyl
