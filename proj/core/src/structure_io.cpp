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

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "numsyl/error.hpp"
#include "numsyl/logic.hpp"

namespace numsyl {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t ParseIndex(std::string_view text, std::size_t line) {
  text = Trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("line " + std::to_string(line) + ": bad element index '" +
                     std::string(text) + "'");
  }
  return value;
}

// Splits "name: rest" into its two halves.
std::pair<std::string, std::string_view> SplitDecl(std::string_view body,
                                                   std::size_t line) {
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("line " + std::to_string(line) + ": expected 'name:'");
  }
  return {std::string(Trim(body.substr(0, colon))), Trim(body.substr(colon + 1))};
}

}  // namespace

FiniteStructure ParseStructure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_domain = false;
  FiniteStructure s;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view body =
        space == std::string_view::npos ? std::string_view{} : Trim(line.substr(space));
    if (keyword == "domain") {
      if (have_domain) {
        throw InputError("line " + std::to_string(line_no) + ": duplicate domain");
      }
      s = FiniteStructure(ParseIndex(body, line_no));
      have_domain = true;
      continue;
    }
    if (!have_domain) {
      throw InputError("line " + std::to_string(line_no) +
                       ": 'domain N' must come first");
    }
    if (keyword == "unary") {
      auto [name, rest] = SplitDecl(body, line_no);
      s.DeclareUnary(name);
      std::size_t start = 0;
      while (start < rest.size()) {
        auto comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        s.AddToUnary(name, ParseIndex(rest.substr(start, comma - start), line_no));
        start = comma + 1;
      }
    } else if (keyword == "binary") {
      auto [name, rest] = SplitDecl(body, line_no);
      s.DeclareBinary(name);
      std::size_t pos = 0;
      while (true) {
        const auto open = rest.find('(', pos);
        if (open == std::string_view::npos) break;
        const auto close = rest.find(')', open);
        const auto comma = rest.find(',', open);
        if (close == std::string_view::npos || comma == std::string_view::npos ||
            comma > close) {
          throw InputError("line " + std::to_string(line_no) + ": bad pair");
        }
        s.AddPair(name, ParseIndex(rest.substr(open + 1, comma - open - 1), line_no),
                  ParseIndex(rest.substr(comma + 1, close - comma - 1), line_no));
        pos = close + 1;
      }
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown keyword '" +
                       std::string(keyword) + "'");
    }
  }
  if (!have_domain) throw InputError("structure file has no 'domain' line");
  return s;
}

std::string FormatStructure(const FiniteStructure& s) {
  std::ostringstream out;
  out << "domain " << s.domain_size() << "\n";
  for (const auto& [name, set] : s.unary_extensions()) {
    out << "unary " << name << ":";
    const auto elems = set.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out << (i == 0 ? " " : ",") << elems[i];
    }
    out << "\n";
  }
  for (const auto& [name, succ] : s.binary_extensions()) {
    out << "binary " << name << ":";
    bool first = true;
    for (std::size_t a = 0; a < succ.size(); ++a) {
      for (auto b : succ[a].elements()) {
        out << (first ? " " : ",") << "(" << a << "," << b << ")";
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace numsyl
