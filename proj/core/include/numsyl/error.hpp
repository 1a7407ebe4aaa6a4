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

#ifndef NUMSYL_ERROR_HPP_
#define NUMSYL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace numsyl {

// Malformed or semantically invalid input: parse failures, uninterpreted
// predicates, a claimed solution that does not solve its system, and so on.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit (predicate count, box volume, column count) was
// exceeded before any work was attempted.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace numsyl

#endif  // NUMSYL_ERROR_HPP_
