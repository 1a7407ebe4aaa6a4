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

#ifndef NUMSYL_PARSER_HPP_
#define NUMSYL_PARSER_HPP_

// Controlled English and symbolic syntax for counting atoms, plus the
// symbolic formula grammar:
//
//   formula := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | ('>=' | '<=' | '=') NUM unary | primary
//   primary := 'true' | 'false' | IDENT | '(' formula ')'
//
// Relational atoms are written ">=C p [r <=D q]".

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsyl/logic.hpp"

namespace numsyl {

class Lexicon {
 public:
  // Throws InputError on overlap, invalid names or reserved words.
  Lexicon(std::set<std::string> nouns, std::set<std::string> verbs,
          std::map<std::string, std::string> irregular = {});

  const std::set<std::string>& nouns() const { return nouns_; }
  const std::set<std::string>& verbs() const { return verbs_; }
  // Irregular surface form -> lemma.
  const std::map<std::string, std::string>& irregular() const { return irregular_; }

  // Lemma of a surface noun/verb; InputError when unknown or ambiguous.
  std::string Noun(std::string_view word) const;
  std::string Verb(std::string_view word) const;
  // Surface forms used when rendering; InputError for a lexicon miss.
  std::string NounForm(const std::string& lemma, bool plural) const;
  std::string VerbForm(const std::string& lemma, bool singular_subject) const;

 private:
  std::optional<std::string> Resolve(std::string_view word,
                                     const std::set<std::string>& pool) const;

  std::set<std::string> nouns_;
  std::set<std::string> verbs_;
  std::map<std::string, std::string> irregular_;
};

// "nouns: a, b" / "verbs: r" / "plural: people=person" lines; '#' comments.
Lexicon ParseLexicon(std::string_view text);
std::string FormatLexicon(const Lexicon& lex);
// Nouns are the unary predicates of the atoms, verbs the binary ones.
Lexicon LexiconFor(std::span<const CountingAtom> atoms);

struct ArgumentFile {
  std::vector<CountingAtom> premises;
  // Symbolic premises that are not single counting atoms.
  std::vector<C1Formula> formulas;
  std::optional<CountingAtom> conclusion;
  // A conclusion that is not a single atom ("exactly" forms, formulas).
  std::optional<C1Formula> conclusion_formula;

  bool has_conclusion() const { return conclusion || conclusion_formula; }
  // No premise or conclusion beyond single counting atoms.
  bool atomic() const { return formulas.empty() && !conclusion_formula; }
  bool has_relational() const;
  // Every premise as a formula; InputError for relational atoms.
  std::vector<C1Formula> PremiseFormulas() const;
  std::optional<C1Formula> ConclusionFormula() const;
};

// One sentence per line; a line "Therefore:" separates premises from the
// conclusion; '#' starts a comment.
ArgumentFile ParseEnglish(std::string_view text, const Lexicon& lex);
std::string RenderEnglish(const CountingAtom& atom, const Lexicon& lex);

ArgumentFile ParseSymbolic(std::string_view text);
std::string RenderSymbolic(const CountingAtom& atom);
// Atoms, formulas and conclusion in the symbolic file format.
std::string FormatSymbolic(const ArgumentFile& file);

// One formula; it may be open (bodies, propositional clauses).
C1Formula ParseFormula(std::string_view text);
// A single counting atom; InputError for anything else.
CountingAtom ParseAtom(std::string_view text);

}  // namespace numsyl

#endif  // NUMSYL_PARSER_HPP_
