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

#include "numsyl/linear_system.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "integer_rows.hpp"
#include "numsyl/error.hpp"

namespace numsyl {

std::string_view RelationSymbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "?";
}

void LinearSystem::AddDenseRow(std::span<const Rational> coefficients,
                               Relation relation, Rational rhs) {
  if (coefficients.size() != num_vars_) {
    throw InputError("row has " + std::to_string(coefficients.size()) +
                     " coefficients, expected " + std::to_string(num_vars_));
  }
  LinearRow row{{}, relation, std::move(rhs)};
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (!coefficients[j].is_zero()) row.terms.emplace_back(j, coefficients[j]);
  }
  rows_.push_back(std::move(row));
}

void LinearSystem::AddSparseRow(
    std::vector<std::pair<std::size_t, Rational>> terms, Relation relation,
    Rational rhs) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LinearRow row{{}, relation, std::move(rhs)};
  for (auto& [col, coef] : terms) {
    if (col >= num_vars_) throw InputError("column index out of range");
    if (!row.terms.empty() && row.terms.back().first == col) {
      row.terms.back().second += coef;
    } else {
      row.terms.emplace_back(col, std::move(coef));
    }
  }
  std::erase_if(row.terms, [](const auto& t) { return t.second.is_zero(); });
  rows_.push_back(std::move(row));
}

Rational LinearSystem::coefficient(std::size_t row, std::size_t col) const {
  const auto& terms = rows_.at(row).terms;
  auto it = std::lower_bound(
      terms.begin(), terms.end(), col,
      [](const auto& t, std::size_t c) { return t.first < c; });
  return it != terms.end() && it->first == col ? it->second : Rational(0);
}

bool LinearSystem::is_boolean() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const LinearRow& r) {
    return r.rhs.is_integer() && r.rhs.sign() >= 0 &&
           std::all_of(r.terms.begin(), r.terms.end(),
                       [](const auto& t) { return t.second == Rational(1); });
  });
}

bool LinearSystem::all_equalities() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const LinearRow& r) {
    return r.relation == Relation::kEqual;
  });
}

Rational LinearSystem::RowValue(std::size_t row,
                                std::span<const Rational> x) const {
  Rational sum;
  for (const auto& [col, coef] : rows_.at(row).terms) sum += coef * x[col];
  return sum;
}

namespace {

bool Satisfies(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
    case Relation::kEqual:
      return lhs == rhs;
  }
  return false;
}

}  // namespace

bool LinearSystem::IsSolution(std::span<const Rational> x) const {
  if (x.size() != num_vars_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!Satisfies(rows_[i].relation, RowValue(i, x), rows_[i].rhs)) return false;
  }
  return true;
}

bool LinearSystem::IsSolution(std::span<const std::int64_t> x) const {
  const RationalVector q = ToRational(x);
  return IsSolution(std::span<const Rational>(q));
}

LinearSystem LinearSystem::SelectColumns(
    std::span<const std::size_t> columns) const {
  std::vector<std::size_t> position(num_vars_, SIZE_MAX);
  for (std::size_t k = 0; k < columns.size(); ++k) position.at(columns[k]) = k;
  LinearSystem out(columns.size());
  for (const auto& row : rows_) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [col, coef] : row.terms) {
      if (position[col] != SIZE_MAX) terms.emplace_back(position[col], coef);
    }
    out.AddSparseRow(std::move(terms), row.relation, row.rhs);
  }
  return out;
}

RationalVector ToRational(std::span<const std::int64_t> x) {
  return RationalVector(x.begin(), x.end());
}

std::size_t CountNonzeros(std::span<const std::int64_t> x) {
  return static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; }));
}

std::size_t CountNonzeros(std::span<const Rational> x) {
  return static_cast<std::size_t>(std::count_if(
      x.begin(), x.end(), [](const Rational& v) { return !v.is_zero(); }));
}

LinearSystem ParseLinearSystem(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  LinearSystem sys;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 2) fail("expected header 'm L'");
      try {
        header.emplace(std::stoul(words[0]), std::stoul(words[1]));
      } catch (const std::exception&) {
        fail("expected header 'm L'");
      }
      sys = LinearSystem(header->second);
      continue;
    }
    if (words.size() != header->second + 2) {
      fail("expected " + std::to_string(header->second) +
           " coefficients, a relation and a constant");
    }
    RationalVector coefs;
    for (std::size_t j = 0; j < header->second; ++j) {
      coefs.push_back(Rational::Parse(words[j]));
    }
    const std::string& rel = words[header->second];
    Relation relation;
    if (rel == "<=") {
      relation = Relation::kLessEqual;
    } else if (rel == ">=") {
      relation = Relation::kGreaterEqual;
    } else if (rel == "=") {
      relation = Relation::kEqual;
    } else {
      fail("unknown relation '" + rel + "'");
    }
    sys.AddDenseRow(coefs, relation, Rational::Parse(words.back()));
  }
  if (!header) throw InputError("system file has no header");
  if (sys.num_rows() != header->first) {
    throw InputError("header declares " + std::to_string(header->first) +
                     " rows, found " + std::to_string(sys.num_rows()));
  }
  return sys;
}

std::string FormatLinearSystem(const LinearSystem& sys) {
  std::ostringstream out;
  out << sys.num_rows() << " " << sys.num_vars() << "\n";
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    for (std::size_t j = 0; j < sys.num_vars(); ++j) {
      out << sys.coefficient(i, j) << " ";
    }
    out << RelationSymbol(sys.row(i).relation) << " " << sys.row(i).rhs << "\n";
  }
  return out.str();
}

LinearSystem ManyNonzerosInstance(std::size_t m) {
  if (m < 6) throw InputError("the unique-solution family needs m >= 6");
  LinearSystem sys(m + 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    sys.AddSparseRow({{i, 1}, {i + 1, 1}, {i + 2, 1}}, Relation::kEqual, 3);
  }
  sys.AddSparseRow({{0, 1}, {1, 1}, {3, 1}, {6, 1}}, Relation::kEqual, 4);
  return sys;
}

namespace internal {

IntSystem ScaleToIntegers(const LinearSystem& sys) {
  IntSystem out;
  out.num_vars = sys.num_vars();
  out.columns.resize(sys.num_vars());
  const BigInt limit = BigInt(1) << 62;
  auto narrow = [&](const BigInt& v) {
    if (abs(v) >= limit) {
      throw CapExceeded("scaled coefficient exceeds the 62-bit integer cap");
    }
    return static_cast<std::int64_t>(v.get_si());
  };
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    const LinearRow& row = sys.row(i);
    BigInt scale = row.rhs.denominator();
    for (const auto& t : row.terms) scale = Lcm(scale, t.second.denominator());
    IntRow r;
    r.relation = row.relation;
    r.rhs = narrow((row.rhs * Rational(scale)).numerator());
    for (const auto& [col, coef] : row.terms) {
      const std::int64_t a = narrow((coef * Rational(scale)).numerator());
      r.terms.emplace_back(col, a);
      out.columns[col].emplace_back(i, a);
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace internal

namespace {

using internal::Wide;

// Depth-first enumeration in lexicographic order. A branch is cut as soon as
// some row cannot be met by any completion of the current prefix.
class Enumerator {
 public:
  Enumerator(const LinearSystem& sys, std::span<const std::int64_t> upper)
      : sys_(internal::ScaleToIntegers(sys)), upper_(upper.begin(), upper.end()),
        x_(upper.size(), 0), partial_(sys_.rows.size(), 0),
        suffix_min_(sys_.rows.size(), std::vector<Wide>(upper.size() + 1, 0)),
        suffix_max_(sys_.rows.size(), std::vector<Wide>(upper.size() + 1, 0)) {
    for (std::size_t i = 0; i < sys_.rows.size(); ++i) {
      std::vector<Wide> coef(upper.size(), 0);
      for (const auto& [col, a] : sys_.rows[i].terms) coef[col] = a;
      for (std::size_t j = upper.size(); j-- > 0;) {
        const Wide hi = coef[j] * static_cast<Wide>(upper_[j]);
        suffix_min_[i][j] = suffix_min_[i][j + 1] + (coef[j] < 0 ? hi : 0);
        suffix_max_[i][j] = suffix_max_[i][j + 1] + (coef[j] > 0 ? hi : 0);
      }
    }
  }

  std::vector<NaturalVector> Run() {
    Recurse(0);
    return std::move(out_);
  }

 private:
  bool Viable(std::size_t next) const {
    for (std::size_t i = 0; i < sys_.rows.size(); ++i) {
      const auto& row = sys_.rows[i];
      if (row.relation != Relation::kGreaterEqual &&
          partial_[i] + suffix_min_[i][next] > row.rhs) {
        return false;
      }
      if (row.relation != Relation::kLessEqual &&
          partial_[i] + suffix_max_[i][next] < row.rhs) {
        return false;
      }
    }
    return true;
  }

  void Recurse(std::size_t j) {
    if (!Viable(j)) return;
    if (j == x_.size()) {
      out_.push_back(x_);
      return;
    }
    const auto& col = sys_.columns[j];
    for (std::int64_t v = 0; v <= upper_[j]; ++v) {
      x_[j] = v;
      Recurse(j + 1);
      for (const auto& [row, a] : col) partial_[row] += a;
    }
    for (const auto& [row, a] : col) {
      partial_[row] -= static_cast<Wide>(a) * (upper_[j] + 1);
    }
    x_[j] = 0;
  }

  internal::IntSystem sys_;
  NaturalVector upper_;
  NaturalVector x_;
  std::vector<Wide> partial_;
  std::vector<std::vector<Wide>> suffix_min_;
  std::vector<std::vector<Wide>> suffix_max_;
  std::vector<NaturalVector> out_;
};

}  // namespace

std::vector<NaturalVector> EnumerateSolutions(
    const LinearSystem& sys, std::span<const std::int64_t> upper,
    std::uint64_t volume_cap) {
  if (upper.size() != sys.num_vars()) {
    throw InputError("box dimension does not match the system");
  }
  BigInt volume = 1;
  for (auto u : upper) {
    if (u < 0) throw InputError("negative box bound");
    volume *= BigInt(static_cast<long>(u)) + 1;
    if (volume > BigInt(static_cast<unsigned long>(volume_cap))) {
      throw CapExceeded("enumeration box exceeds " + std::to_string(volume_cap) +
                        " points");
    }
  }
  return Enumerator(sys, upper).Run();
}

}  // namespace numsyl
