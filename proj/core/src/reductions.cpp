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
#include <charconv>
#include <functional>
#include <sstream>

#include "numsyl/error.hpp"
#include "numsyl/reductions.hpp"

namespace numsyl {

namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(" \t\r") - b + 1));
}

std::size_t ParseSize(std::string_view token, const std::string& where) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InputError(where + "expected a natural number, got '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graphs

Graph MakeGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  Graph g;
  g.n = n;
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("loop at node " + std::to_string(a));
    if (a < 1 || b < 1 || a > n || b > n) {
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") leaves nodes 1.." + std::to_string(n));
    }
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Graph CompleteGraph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  }
  return MakeGraph(n, std::move(e));
}

Graph CycleGraph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 nodes");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return MakeGraph(n, std::move(e));
}

Graph NamedGraph(std::string_view name) {
  if (name.size() < 2) throw InputError("unknown graph '" + std::string(name) + "'");
  const std::size_t n = ParseSize(name.substr(1), "graph name: ");
  switch (name[0]) {
    case 'k':
      return CompleteGraph(n);
    case 'c':
      return CycleGraph(n);
    case 'e':
      return MakeGraph(n, {});
    default:
      throw InputError("unknown graph '" + std::string(name) + "'");
  }
}

Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::size_t declared = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag) || tag == "c") continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    if (tag == "p") {
      if (n) throw InputError(where + "repeated problem line");
      if (rest.size() != 3 || rest[0] != "edge") {
        throw InputError(where + "expected 'p edge <nodes> <edges>'");
      }
      n = ParseSize(rest[1], where);
      declared = ParseSize(rest[2], where);
    } else if (tag == "e") {
      if (!n) throw InputError(where + "edge before the problem line");
      if (rest.size() != 2) throw InputError(where + "expected 'e <i> <j>'");
      edges.emplace_back(ParseSize(rest[0], where), ParseSize(rest[1], where));
    } else {
      throw InputError(where + "unknown line type '" + tag + "'");
    }
  }
  if (!n) throw InputError("missing 'p edge' line");
  if (edges.size() != declared) {
    throw InputError("problem line declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return MakeGraph(*n, std::move(edges));
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << " " << g.edges.size() << "\n";
  for (auto [a, b] : g.edges) out << "e " << a << " " << b << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// 3-colouring

bool IsProperColouring(const Graph& g, const Colouring& c) {
  if (c.size() != g.n) return false;
  if (std::any_of(c.begin(), c.end(), [](int k) { return k < 0 || k > 2; })) return false;
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const auto& e) { return c[e.first - 1] != c[e.second - 1]; });
}

std::string ColourPredicate(std::size_t node, int colour) {
  return "p" + std::to_string(node) + "_" + std::to_string(colour);
}

std::vector<CountingAtom> Encode3Col(const Graph& g) {
  const Literal p{"p", true};
  auto lit = [](std::size_t i, int k) { return Literal{ColourPredicate(i, k), true}; };
  std::vector<CountingAtom> out;
  out.push_back(CountingAtom::MakeCount(Direction::kAtMost, 3, p));
  for (std::size_t i = 1; i <= g.n; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = j + 1; k < 3; ++k) {
        out.push_back(CountingAtom::MakeUnary(Direction::kAtMost, 0, lit(i, j), lit(i, k)));
      }
    }
  }
  for (std::size_t i = 1; i <= g.n; ++i) {
    for (int k = 0; k < 3; ++k) {
      out.push_back(CountingAtom::MakeUnary(Direction::kAtLeast, 1, lit(i, k), p));
    }
  }
  for (auto [a, b] : g.edges) {
    for (int k = 0; k < 3; ++k) {
      out.push_back(CountingAtom::MakeUnary(Direction::kAtMost, 0, lit(a, k), lit(b, k)));
    }
  }
  return out;
}

FiniteStructure ColouringWitness(const Graph& g, const Colouring& c) {
  if (!IsProperColouring(g, c)) throw InputError("not a proper 3-colouring");
  FiniteStructure s(3);
  const std::vector<std::size_t> all{0, 1, 2};
  s.SetUnary("p", all);
  for (std::size_t i = 1; i <= g.n; ++i) {
    for (int k = 0; k < 3; ++k) {
      s.DeclareUnary(ColourPredicate(i, k));
      s.AddToUnary(ColourPredicate(i, k), static_cast<std::size_t>((k + c[i - 1]) % 3));
    }
  }
  return s;
}

Colouring Decode3Col(const FiniteStructure& s, const Graph& g) {
  for (const auto& a : Encode3Col(g)) {
    if (!Evaluate(s, a)) throw InputError("structure does not satisfy " + a.str());
  }
  const auto members = s.unary("p").elements();
  if (members.empty()) throw InputError("no element satisfies p");
  const std::size_t a = members.front();
  Colouring c(g.n, -1);
  for (std::size_t i = 1; i <= g.n; ++i) {
    for (int k = 0; k < 3; ++k) {
      if (s.unary(ColourPredicate(i, k)).contains(a)) c[i - 1] = k;
    }
  }
  if (!IsProperColouring(g, c)) throw std::logic_error("decoded colouring is not proper");
  return c;
}

std::optional<Colouring> Brute3Col(const Graph& g) {
  if (g.n > 12) throw CapExceeded("brute-force 3-colouring is capped at 12 nodes");
  Colouring c(g.n, 0);
  while (true) {
    if (IsProperColouring(g, c)) return c;
    std::size_t i = g.n;
    while (i > 0 && c[i - 1] == 2) c[--i] = 0;
    if (i == 0) return std::nullopt;
    ++c[i - 1];
  }
}

// ---------------------------------------------------------------------------
// Tiling systems

TilingSystem ParseTilingSystem(std::string_view text) {
  TilingSystem ts;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_colours = false;
  auto index = [&](const std::string& name, const std::string& where) {
    auto it = std::find(ts.colours.begin(), ts.colours.end(), name);
    if (it == ts.colours.end()) throw InputError(where + "unknown colour '" + name + "'");
    return static_cast<std::size_t>(it - ts.colours.begin());
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError(where + "expected 'key: values'");
    const std::string key = Trim(line.substr(0, colon));
    std::string body = line.substr(colon + 1);
    if (key == "colours" || key == "colors") {
      if (have_colours) throw InputError(where + "repeated colour list");
      std::istringstream words(body);
      for (std::string w; words >> w;) {
        if (!IsIdentifier(w)) throw InputError(where + "bad colour name '" + w + "'");
        if (std::find(ts.colours.begin(), ts.colours.end(), w) != ts.colours.end()) {
          throw InputError(where + "repeated colour '" + w + "'");
        }
        ts.colours.push_back(w);
      }
      if (ts.colours.empty()) throw InputError(where + "no colours");
      have_colours = true;
    } else if (key == "H" || key == "V") {
      if (!have_colours) throw InputError(where + "constraints before the colour list");
      auto& rel = key == "H" ? ts.horizontal : ts.vertical;
      std::replace(body.begin(), body.end(), ',', ' ');
      std::size_t pos = 0;
      while ((pos = body.find('(', pos)) != std::string::npos) {
        const auto close = body.find(')', pos);
        if (close == std::string::npos) throw InputError(where + "unclosed pair");
        std::istringstream pair(body.substr(pos + 1, close - pos - 1));
        std::string a, b, extra;
        if (!(pair >> a >> b) || (pair >> extra)) {
          throw InputError(where + "expected '(colour,colour)'");
        }
        rel.emplace(index(a, where), index(b, where));
        pos = close + 1;
      }
    } else {
      throw InputError(where + "unknown key '" + key + "'");
    }
  }
  if (!have_colours) throw InputError("missing colour list");
  return ts;
}

std::string FormatTilingSystem(const TilingSystem& ts) {
  std::ostringstream out;
  out << "colours:";
  for (const auto& c : ts.colours) out << " " << c;
  out << "\n";
  auto pairs = [&](const char* key, const auto& rel) {
    out << key << ":";
    for (auto [a, b] : rel) out << " (" << ts.colours[a] << "," << ts.colours[b] << ")";
    out << "\n";
  };
  pairs("H", ts.horizontal);
  pairs("V", ts.vertical);
  return out.str();
}

bool IsValidTiling(const TilingSystem& ts, const Tiling& t) {
  const std::size_t n = t.size;
  if (n == 0 || t.grid.size() != n * n) return false;
  for (std::size_t c : t.grid) {
    if (c >= ts.colours.size()) return false;
  }
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!ts.horizontal.count({t.at(x, y), t.at((x + 1) % n, y)})) return false;
      if (!ts.vertical.count({t.at(x, y), t.at(x, (y + 1) % n)})) return false;
    }
  }
  return true;
}

bool HasInitialRow(const Tiling& t, const std::vector<std::size_t>& init) {
  if (init.size() > t.size) return false;
  for (std::size_t i = 0; i < init.size(); ++i) {
    if (t.at(i, 0) != init[i]) return false;
  }
  return true;
}

BruteTilingResult BruteTiling(const TilingSystem& ts, std::size_t size,
                              const std::vector<std::size_t>& init,
                              std::uint64_t node_budget) {
  if (size == 0) throw InputError("tiling size must be positive");
  if (init.size() > size) throw InputError("initial row longer than the grid");
  const std::size_t m = ts.colours.size();
  for (std::size_t c : init) {
    if (c >= m) throw InputError("initial row mentions an unknown colour");
  }
  BruteTilingResult result;
  Tiling t{size, std::vector<std::size_t>(size * size, 0)};
  // Cell-by-cell in row-major order; neighbours to the left and below are
  // fixed already, wrap-around pairs are checked on the last column/row.
  auto fits = [&](std::size_t cell) {
    const std::size_t x = cell % size;
    const std::size_t y = cell / size;
    const std::size_t c = t.grid[cell];
    if (x > 0 && !ts.horizontal.count({t.at(x - 1, y), c})) return false;
    if (y > 0 && !ts.vertical.count({t.at(x, y - 1), c})) return false;
    if (x + 1 == size && !ts.horizontal.count({c, t.at(0, y)})) return false;
    if (y + 1 == size && !ts.vertical.count({c, t.at(x, 0)})) return false;
    return true;
  };
  struct Budget {};
  std::function<bool(std::size_t)> place = [&](std::size_t cell) -> bool {
    if (++result.nodes > node_budget) throw Budget{};
    if (cell == size * size) return true;
    const bool fixed = cell < init.size();
    for (std::size_t c = fixed ? init[cell] : 0; c < (fixed ? init[cell] + 1 : m); ++c) {
      t.grid[cell] = c;
      if (fits(cell) && place(cell + 1)) return true;
    }
    return false;
  };
  try {
    if (place(0)) {
      if (!IsValidTiling(ts, t)) throw std::logic_error("brute tiling is invalid");
      result.tiling = t;
    }
  } catch (const Budget&) {
    result.exhausted = true;
  }
  return result;
}

}  // namespace numsyl
