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

#ifndef NUMSYL_SRC_INTEGER_ROWS_HPP_
#define NUMSYL_SRC_INTEGER_ROWS_HPP_

// Row-scaled integer copy of a rational system, for the enumeration and
// branch-and-bound inner loops.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "numsyl/linear_system.hpp"

namespace numsyl::internal {

__extension__ using Wide = __int128;

struct IntRow {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  Relation relation = Relation::kEqual;
  std::int64_t rhs = 0;
};

struct IntSystem {
  std::size_t num_vars = 0;
  std::vector<IntRow> rows;
  // column -> (row, coefficient)
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

// Multiplies each row by the lcm of its denominators. Throws CapExceeded if a
// scaled entry does not fit in 62 bits.
IntSystem ScaleToIntegers(const LinearSystem& sys);

inline Wide FloorDiv(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Wide CeilDiv(Wide a, Wide b) { return -FloorDiv(-a, b); }

}  // namespace numsyl::internal

#endif  // NUMSYL_SRC_INTEGER_ROWS_HPP_
