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

#include "numsyl/sparsify.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "numsyl/error.hpp"

namespace numsyl {
namespace {

void RequireEquations(const LinearSystem& sys) {
  if (!sys.all_equalities()) {
    throw InputError("support reduction needs a system of equations");
  }
}

std::vector<std::size_t> Support(std::span<const Rational> x) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!x[j].is_zero()) s.push_back(j);
  }
  return s;
}

// Kernel vector of the columns `support` (entries aligned with `support`), or
// nullopt when those columns are linearly independent.
std::optional<RationalVector> KernelVector(const LinearSystem& sys,
                                           const std::vector<std::size_t>& support) {
  const std::size_t m = sys.num_rows();
  const std::size_t k = support.size();
  std::vector<RationalVector> a(m, RationalVector(k));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < k; ++c) a[i][c] = sys.coefficient(i, support[c]);
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) {
      if (!free_col) free_col = c;
      continue;
    }
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t cc = 0; cc < k; ++cc) a[i][cc] -= f * a[r][cc];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (!free_col) return std::nullopt;
  RationalVector b(k);
  b[*free_col] = 1;
  for (std::size_t row = 0; row < pivot_col.size(); ++row) {
    b[pivot_col[row]] = -a[row][*free_col];
  }
  return b;
}

}  // namespace

RationalVector SparsifyRational(const LinearSystem& sys,
                                std::span<const Rational> x,
                                SparsifyStats* stats) {
  RequireEquations(sys);
  if (x.size() != sys.num_vars() || !sys.IsSolution(x) ||
      std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() < 0; })) {
    throw InputError("vector is not a nonnegative solution of the system");
  }
  RationalVector y(x.begin(), x.end());
  SparsifyStats local;
  local.initial_support = Support(y).size();
  while (true) {
    const std::vector<std::size_t> support = Support(y);
    const auto kernel = KernelVector(sys, support);
    if (!kernel) break;
    const RationalVector& b = *kernel;
    // Largest step keeping y + eps*b >= 0 in each direction.
    std::optional<Rational> up;
    std::optional<Rational> down;
    for (std::size_t c = 0; c < support.size(); ++c) {
      const Rational& yj = y[support[c]];
      if (b[c].sign() < 0) {
        const Rational t = yj / -b[c];
        if (!up || t < *up) up = t;
      } else if (b[c].sign() > 0) {
        const Rational t = yj / b[c];
        if (!down || t < *down) down = t;
      }
    }
    // The free column has coefficient 1, so `down` always exists.
    const Rational eps = up && *up <= *down ? *up : -*down;
    for (std::size_t c = 0; c < support.size(); ++c) {
      y[support[c]] += eps * b[c];
    }
    ++local.steps;
    if (!sys.IsSolution(std::span<const Rational>(y))) {
      throw std::logic_error("kernel step broke the solution");
    }
  }
  local.final_support = Support(y).size();
  if (stats) *stats = local;
  return y;
}

std::size_t NaturalSupportBound(std::size_t m, std::size_t num_vars) {
  if (m == 0) return 0;
  BigInt target = 1;
  for (std::size_t i = 0; i < m; ++i) target *= static_cast<unsigned long>(num_vars + 1);
  std::size_t k = 0;
  BigInt power = 1;
  while (power < target) {
    power *= 2;
    ++k;
  }
  return k;
}

namespace {

// Column of a Boolean system as the list of rows holding a 1.
std::vector<std::vector<std::size_t>> BooleanColumns(const LinearSystem& sys) {
  std::vector<std::vector<std::size_t>> cols(sys.num_vars());
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    for (const auto& t : sys.row(i).terms) cols[t.first].push_back(i);
  }
  return cols;
}

std::string SumKey(const std::vector<std::uint32_t>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()),
                     v.size() * sizeof(std::uint32_t));
}

constexpr std::size_t kSubsetSupportCap = 40;
constexpr std::uint64_t kSubsetEnumerationCap = 1ULL << 24;

// Finds disjoint J (nonempty) and J' within `support` whose column sums agree.
bool FindExchange(const std::vector<std::vector<std::size_t>>& cols,
                  std::size_t m, const std::vector<std::size_t>& support,
                  std::vector<std::size_t>& j_out,
                  std::vector<std::size_t>& jp_out) {
  // Identical columns: the single-pair collisions.
  std::unordered_map<std::string, std::size_t> first;
  for (std::size_t j : support) {
    std::vector<std::uint32_t> v(m, 0);
    for (auto r : cols[j]) v[r] = 1;
    auto [it, inserted] = first.emplace(SumKey(v), j);
    if (!inserted) {
      j_out = {j};
      jp_out = {it->second};
      if (cols[j].empty()) jp_out.clear();
      return true;
    }
  }
  // Subsets of the first kSubsetSupportCap support columns, by increasing size.
  const std::size_t k = std::min(support.size(), kSubsetSupportCap);
  std::unordered_map<std::string, std::uint64_t> seen;
  seen.emplace(SumKey(std::vector<std::uint32_t>(m, 0)), 0);
  std::uint64_t enumerated = 0;
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= k; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (++enumerated > kSubsetEnumerationCap) return false;
      std::vector<std::uint32_t> v(m, 0);
      std::uint64_t mask = 0;
      for (auto i : idx) {
        mask |= std::uint64_t{1} << i;
        for (auto r : cols[support[i]]) ++v[r];
      }
      auto [it, inserted] = seen.emplace(SumKey(v), mask);
      if (!inserted) {
        const std::uint64_t other = it->second;
        std::uint64_t j_mask = mask & ~other;
        std::uint64_t jp_mask = other & ~mask;
        if (j_mask == 0) std::swap(j_mask, jp_mask);
        j_out.clear();
        jp_out.clear();
        for (std::size_t i = 0; i < k; ++i) {
          if ((j_mask >> i) & 1U) j_out.push_back(support[i]);
          if ((jp_mask >> i) & 1U) jp_out.push_back(support[i]);
        }
        return true;
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace

NaturalVector SparsifyNatural(const LinearSystem& sys,
                              std::span<const std::int64_t> x,
                              SparsifyStats* stats) {
  RequireEquations(sys);
  if (!sys.is_boolean()) throw InputError("system is not Boolean");
  if (x.size() != sys.num_vars() || !sys.IsSolution(x) ||
      std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v < 0; })) {
    throw InputError("vector is not a natural solution of the system");
  }
  const auto cols = BooleanColumns(sys);
  const std::size_t bound = NaturalSupportBound(sys.num_rows(), sys.num_vars());
  NaturalVector y(x.begin(), x.end());
  SparsifyStats local;
  local.initial_support = CountNonzeros(std::span<const std::int64_t>(y));
  std::vector<std::size_t> j_set;
  std::vector<std::size_t> jp_set;
  while (true) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) support.push_back(j);
    }
    if (support.size() <= bound) break;
    if (!FindExchange(cols, sys.num_rows(), support, j_set, jp_set)) {
      throw CapExceeded("no equal-sum subset pair found within the search cap");
    }
    std::int64_t step = INT64_MAX;
    for (auto j : j_set) step = std::min(step, y[j]);
    for (auto j : j_set) y[j] -= step;
    for (auto j : jp_set) y[j] += step;
    ++local.steps;
    if (!sys.IsSolution(std::span<const std::int64_t>(y))) {
      throw std::logic_error("subset exchange broke the solution");
    }
  }
  local.final_support = CountNonzeros(std::span<const std::int64_t>(y));
  if (stats) *stats = local;
  return y;
}

bool CheckProp2Bound(const LinearSystem& sys, std::span<const std::int64_t> x) {
  const std::size_t k = CountNonzeros(x);
  const std::size_t m = sys.num_rows();
  if (m <= 1) return k <= 1;
  if (k == 0) return true;
  // k <= (5/2) m log2 m + 1  <=>  2^(2(k-1)) <= m^(5m).
  BigInt lhs = BigInt(1) << static_cast<mp_bitcnt_t>(2 * (k - 1));
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(5 * m));
  return lhs <= rhs;
}

std::optional<NaturalVector> MinimalSupportSolution(
    const LinearSystem& sys, std::span<const std::int64_t> upper,
    std::uint64_t volume_cap) {
  std::optional<NaturalVector> best;
  std::size_t best_support = SIZE_MAX;
  for (auto& sol : EnumerateSolutions(sys, upper, volume_cap)) {
    const std::size_t s = CountNonzeros(std::span<const std::int64_t>(sol));
    if (s < best_support) {
      best_support = s;
      best = std::move(sol);
    }
  }
  return best;
}

}  // namespace numsyl
