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

#include "numsyl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "numsyl/error.hpp"

namespace numsyl {

namespace {

const std::set<std::string>& ReservedWords() {
  static const std::set<std::string> words{
      "a",  "all",   "an",  "are",   "at",    "every",     "exactly", "false", "is",
      "least", "most", "no", "not", "some", "there", "therefore", "true"};
  return words;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1));
}

std::int64_t ParseBound(std::string_view token, bool allow_negative) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InputError("malformed number '" + std::string(token) + "'");
  }
  if (v < 0 && !allow_negative) {
    throw InputError("counting bound must be nonnegative, got " + std::string(token));
  }
  return v;
}

// Strips comments and blank lines; splits on a "Therefore:" line.
struct Sections {
  std::vector<std::pair<std::size_t, std::string>> premises;
  std::vector<std::pair<std::size_t, std::string>> conclusion;
};

Sections SplitLines(std::string_view text) {
  Sections out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool after = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    if (Lower(line) == "therefore:" || Lower(line) == "therefore") {
      if (after) throw InputError("line " + std::to_string(line_no) + ": repeated 'Therefore:'");
      after = true;
      continue;
    }
    (after ? out.conclusion : out.premises).emplace_back(line_no, line);
  }
  if (out.conclusion.size() > 1) {
    throw InputError("line " + std::to_string(out.conclusion[1].first) +
                     ": only one conclusion is allowed");
  }
  if (after && out.conclusion.empty()) throw InputError("'Therefore:' without a conclusion");
  return out;
}

C1Formula AtomsFormula(const std::vector<CountingAtom>& atoms) {
  std::vector<C1Formula> parts;
  for (const auto& a : atoms) parts.push_back(ToC1(a));
  return C1Formula::And(std::move(parts));
}

// Wraps parse errors with the line number.
template <typename F>
auto AtLine(std::size_t line_no, F f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

void Store(ArgumentFile& file, std::vector<CountingAtom> atoms, bool conclusion) {
  if (!conclusion) {
    for (auto& a : atoms) file.premises.push_back(std::move(a));
  } else if (atoms.size() == 1) {
    file.conclusion = std::move(atoms.front());
  } else {
    file.conclusion_formula = AtomsFormula(atoms);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Lexicon

Lexicon::Lexicon(std::set<std::string> nouns, std::set<std::string> verbs,
                 std::map<std::string, std::string> irregular)
    : nouns_(std::move(nouns)), verbs_(std::move(verbs)), irregular_(std::move(irregular)) {
  for (const auto* pool : {&nouns_, &verbs_}) {
    for (const auto& w : *pool) {
      if (!IsIdentifier(w)) throw InputError("invalid lexicon entry '" + w + "'");
      if (ReservedWords().count(Lower(w))) {
        throw InputError("'" + w + "' is a reserved word");
      }
    }
  }
  for (const auto& n : nouns_) {
    if (verbs_.count(n)) throw InputError("'" + n + "' is both a noun and a verb");
  }
  for (const auto& [surface, lemma] : irregular_) {
    if (!nouns_.count(lemma) && !verbs_.count(lemma)) {
      throw InputError("irregular form '" + surface + "' maps to unknown lemma '" + lemma + "'");
    }
  }
}

std::optional<std::string> Lexicon::Resolve(std::string_view word,
                                            const std::set<std::string>& pool) const {
  const std::string w(word);
  if (pool.count(w)) return w;
  if (auto it = irregular_.find(w); it != irregular_.end() && pool.count(it->second)) {
    return it->second;
  }
  if (w.size() > 1 && w.back() == 's') {
    std::string stem = w.substr(0, w.size() - 1);
    if (pool.count(stem)) return stem;
  }
  return std::nullopt;
}

std::string Lexicon::Noun(std::string_view word) const {
  const auto n = Resolve(word, nouns_);
  const auto v = Resolve(word, verbs_);
  if (n && v) throw InputError("ambiguous word '" + std::string(word) + "'");
  if (n) return *n;
  if (v) throw InputError("expected a noun, got the verb '" + std::string(word) + "'");
  throw InputError("unknown word '" + std::string(word) + "'");
}

std::string Lexicon::Verb(std::string_view word) const {
  const auto n = Resolve(word, nouns_);
  const auto v = Resolve(word, verbs_);
  if (n && v) throw InputError("ambiguous word '" + std::string(word) + "'");
  if (v) return *v;
  if (n) throw InputError("expected a verb, got the noun '" + std::string(word) + "'");
  throw InputError("unknown word '" + std::string(word) + "'");
}

std::string Lexicon::NounForm(const std::string& lemma, bool plural) const {
  if (!nouns_.count(lemma)) throw InputError("noun '" + lemma + "' is not in the lexicon");
  if (!plural) return lemma;
  std::string form = lemma + "s";
  for (const auto& [surface, l] : irregular_) {
    if (l == lemma) {
      form = surface;
      break;
    }
  }
  // Number carries no meaning, so fall back to the lemma on any clash.
  return Resolve(form, nouns_) == lemma && !Resolve(form, verbs_) ? form : lemma;
}

std::string Lexicon::VerbForm(const std::string& lemma, bool singular_subject) const {
  if (!verbs_.count(lemma)) throw InputError("verb '" + lemma + "' is not in the lexicon");
  if (!singular_subject) return lemma;
  std::string form = lemma + "s";
  for (const auto& [surface, l] : irregular_) {
    if (l == lemma) {
      form = surface;
      break;
    }
  }
  return Resolve(form, verbs_) == lemma && !Resolve(form, nouns_) ? form : lemma;
}

Lexicon ParseLexicon(std::string_view text) {
  std::set<std::string> nouns;
  std::set<std::string> verbs;
  std::map<std::string, std::string> irregular;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError(where + "expected 'key: entries'");
    const std::string key = Lower(Trim(line.substr(0, colon)));
    std::string body = line.substr(colon + 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream words(body);
    for (std::string w; words >> w;) {
      if (key == "nouns") {
        nouns.insert(w);
      } else if (key == "verbs") {
        verbs.insert(w);
      } else if (key == "plural" || key == "irregular") {
        const auto eq = w.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == w.size()) {
          throw InputError(where + "expected 'surface=lemma', got '" + w + "'");
        }
        irregular[w.substr(0, eq)] = w.substr(eq + 1);
      } else {
        throw InputError(where + "unknown key '" + key + "'");
      }
    }
  }
  return AtLine(line_no, [&] { return Lexicon(nouns, verbs, irregular); });
}

std::string FormatLexicon(const Lexicon& lex) {
  std::ostringstream out;
  auto list = [&](const char* key, const std::set<std::string>& words) {
    out << key << ":";
    bool first = true;
    for (const auto& w : words) {
      out << (first ? " " : ", ") << w;
      first = false;
    }
    out << "\n";
  };
  list("nouns", lex.nouns());
  list("verbs", lex.verbs());
  if (!lex.irregular().empty()) {
    out << "plural:";
    for (const auto& [s, l] : lex.irregular()) out << " " << s << "=" << l;
    out << "\n";
  }
  return out.str();
}

Lexicon LexiconFor(std::span<const CountingAtom> atoms) {
  std::set<std::string> nouns;
  std::set<std::string> verbs;
  for (const auto& a : atoms) {
    for (auto& p : a.unary_predicates()) nouns.insert(std::move(p));
    if (!a.is_unary()) verbs.insert(a.relational().verb);
  }
  return Lexicon(nouns, verbs);
}

// ---------------------------------------------------------------------------
// ArgumentFile

bool ArgumentFile::has_relational() const {
  auto rel = [](const CountingAtom& a) { return !a.is_unary(); };
  return std::any_of(premises.begin(), premises.end(), rel) ||
         (conclusion && rel(*conclusion));
}

std::vector<C1Formula> ArgumentFile::PremiseFormulas() const {
  std::vector<C1Formula> out;
  for (const auto& a : premises) out.push_back(ToC1(a));
  out.insert(out.end(), formulas.begin(), formulas.end());
  return out;
}

std::optional<C1Formula> ArgumentFile::ConclusionFormula() const {
  if (conclusion) return ToC1(*conclusion);
  return conclusion_formula;
}

// ---------------------------------------------------------------------------
// English

namespace {

class EnglishParser {
 public:
  EnglishParser(std::string_view sentence, const Lexicon& lex) : lex_(lex) {
    std::string s(sentence);
    while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
    std::istringstream words(s);
    for (std::string w; words >> w;) words_.push_back(w);
  }

  // One atom, or two for "exactly".
  std::vector<CountingAtom> Parse() {
    const std::string first = Peek();
    if (first == "at") {
      Next();
      const Direction d = Quantity();
      const std::int64_t c = ParseBound(Next(), false);
      const Literal subject = NounLiteral();
      if (Peek() == "are" || Peek() == "is") {
        Next();
        return {Finish(CountingAtom::MakeUnary(d, c, subject, Predicate()))};
      }
      if (!subject.positive) throw InputError("relational subjects cannot be negated");
      const std::string verb = lex_.Verb(Next());
      Expect("at");
      const Direction inner = Quantity();
      const std::int64_t dd = ParseBound(Next(), false);
      const Literal object = NounLiteral();
      if (!object.positive) throw InputError("relational objects cannot be negated");
      return {Finish(CountingAtom::MakeRelational(d, c, subject.predicate, verb, inner, dd,
                                                  object.predicate))};
    }
    if (first == "exactly") {
      Next();
      const std::int64_t c = ParseBound(Next(), false);
      const Literal subject = NounLiteral();
      ExpectCopula();
      return Exactly(c, subject, Predicate());
    }
    if (first == "there") {
      Next();
      ExpectCopula();
      if (Peek() == "exactly") {
        Next();
        const std::int64_t c = ParseBound(Next(), false);
        const Literal l = NounLiteral();
        Finish(0);
        return Exactly(c, l, l);
      }
      Expect("at");
      const Direction d = Quantity();
      const std::int64_t c = ParseBound(Next(), false);
      const Literal l = NounLiteral();
      return {Finish(CountingAtom::MakeCount(d, c, l))};
    }
    if (first == "some" || first == "all" || first == "every" || first == "no") {
      Next();
      const Literal subject = NounLiteral();
      ExpectCopula();
      const Literal object = Predicate();
      if (first == "some") return {Finish(CountingAtom::MakeUnary(Direction::kAtLeast, 1, subject, object))};
      // "All p are q": no p is a non-q. "No p are q": no p is a q.
      const Literal excluded = first == "no" ? object : object.opposite();
      return {Finish(CountingAtom::MakeUnary(Direction::kAtMost, 0, subject, excluded))};
    }
    throw InputError("unrecognized sentence start '" + Raw(0) + "'");
  }

 private:
  std::string Peek() const { return pos_ < words_.size() ? Lower(words_[pos_]) : ""; }
  std::string Raw(std::size_t i) const { return i < words_.size() ? words_[i] : "<end>"; }
  std::string Next() {
    if (pos_ >= words_.size()) throw InputError("sentence ends too early");
    return words_[pos_++];
  }
  void Expect(const char* word) {
    if (Peek() != word) throw InputError(std::string("expected '") + word + "', got '" + Raw(pos_) + "'");
    ++pos_;
  }
  void ExpectCopula() {
    if (Peek() != "are" && Peek() != "is") {
      throw InputError("expected 'are' or 'is', got '" + Raw(pos_) + "'");
    }
    ++pos_;
  }
  Direction Quantity() {
    const std::string w = Peek();
    if (w == "least") {
      ++pos_;
      return Direction::kAtLeast;
    }
    if (w == "most") {
      ++pos_;
      return Direction::kAtMost;
    }
    throw InputError("expected 'least' or 'most', got '" + Raw(pos_) + "'");
  }
  Literal NounLiteral() {
    std::string w = Next();
    bool positive = true;
    if (Lower(w).rfind("non-", 0) == 0) {
      positive = false;
      w = w.substr(4);
    }
    return Literal{lex_.Noun(w), positive};
  }
  // "[not] [a|an] [non-]NOUN" after the copula.
  Literal Predicate() {
    bool negated = false;
    if (Peek() == "not") {
      negated = true;
      ++pos_;
    }
    if (Peek() == "a" || Peek() == "an") ++pos_;
    Literal l = NounLiteral();
    return negated ? l.opposite() : l;
  }
  template <typename T>
  T Finish(T value) {
    if (pos_ != words_.size()) throw InputError("unexpected '" + Raw(pos_) + "'");
    return value;
  }
  std::vector<CountingAtom> Exactly(std::int64_t c, const Literal& a, const Literal& b) {
    Finish(0);
    return {CountingAtom::MakeUnary(Direction::kAtMost, c, a, b),
            CountingAtom::MakeUnary(Direction::kAtLeast, c, a, b)};
  }

  const Lexicon& lex_;
  std::vector<std::string> words_;
  std::size_t pos_ = 0;
};

std::string Article(const std::string& noun) {
  return std::string("aeiou").find(static_cast<char>(std::tolower(
             static_cast<unsigned char>(noun.front())))) != std::string::npos
             ? "an "
             : "a ";
}

}  // namespace

ArgumentFile ParseEnglish(std::string_view text, const Lexicon& lex) {
  ArgumentFile file;
  const Sections sections = SplitLines(text);
  for (const auto* part : {&sections.premises, &sections.conclusion}) {
    for (const auto& [line_no, line] : *part) {
      auto atoms = AtLine(line_no, [&] { return EnglishParser(line, lex).Parse(); });
      Store(file, std::move(atoms), part == &sections.conclusion);
    }
  }
  return file;
}

std::string RenderEnglish(const CountingAtom& atom, const Lexicon& lex) {
  if (atom.bound() < 0) {
    throw InputError("negative bounds have no English form: " + atom.str());
  }
  const std::string quantity =
      std::string(atom.direction() == Direction::kAtLeast ? "at least " : "at most ") +
      std::to_string(atom.bound());
  const bool singular = atom.bound() == 1;
  auto noun = [&](const Literal& l, bool plural) {
    return (l.positive ? "" : "non-") + lex.NounForm(l.predicate, plural);
  };
  if (!atom.is_unary()) {
    const auto& r = atom.relational();
    return "At " + quantity.substr(3) + " " + noun(Literal{r.subject, true}, !singular) + " " +
           lex.VerbForm(r.verb, singular) + " " +
           (r.inner_direction == Direction::kAtLeast ? "at least " : "at most ") +
           std::to_string(r.inner_bound) + " " +
           noun(Literal{r.object, true}, r.inner_bound != 1);
  }
  const auto& [first, second] = atom.unary();
  if (first == second) {
    return std::string(singular ? "There is " : "There are ") + quantity + " " +
           noun(first, !singular);
  }
  std::string object = noun(Literal{second.predicate, true}, !singular);
  if (singular) object = Article(object) + object;
  return "At " + quantity.substr(3) + " " + noun(first, !singular) +
         (singular ? " is " : " are ") + (second.positive ? "" : "not ") + object;
}

// ---------------------------------------------------------------------------
// Symbolic

namespace {

enum class Tok { kIdent, kNum, kGe, kLe, kEq, kLParen, kRParen, kAnd, kOr, kNot, kLBracket, kRBracket, kEnd };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> Lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kNum, std::string(s.substr(i, j - i))});
      i = j;
    } else if ((c == '>' || c == '<') && i + 1 < s.size() && s[i + 1] == '=') {
      out.push_back({c == '>' ? Tok::kGe : Tok::kLe, std::string(s.substr(i, 2))});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '=': k = Tok::kEq; break;
        case '(': k = Tok::kLParen; break;
        case ')': k = Tok::kRParen; break;
        case '&': k = Tok::kAnd; break;
        case '|': k = Tok::kOr; break;
        case '!':
        case '~': k = Tok::kNot; break;
        case '[': k = Tok::kLBracket; break;
        case ']': k = Tok::kRBracket; break;
        default:
          throw InputError(std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c)});
      ++i;
    }
  }
  out.push_back({Tok::kEnd, ""});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  C1Formula ParseAll() {
    C1Formula f = Or();
    if (t_[pos_].kind != Tok::kEnd) throw InputError("unexpected '" + t_[pos_].text + "'");
    return f;
  }

 private:
  bool Accept(Tok k) {
    if (t_[pos_].kind != k) return false;
    ++pos_;
    return true;
  }
  C1Formula Or() {
    std::vector<C1Formula> parts{And()};
    while (Accept(Tok::kOr)) parts.push_back(And());
    return parts.size() == 1 ? parts.front() : C1Formula::Or(std::move(parts));
  }
  C1Formula And() {
    std::vector<C1Formula> parts{Unary()};
    while (Accept(Tok::kAnd)) parts.push_back(Unary());
    return parts.size() == 1 ? parts.front() : C1Formula::And(std::move(parts));
  }
  C1Formula Unary() {
    if (Accept(Tok::kNot)) return C1Formula::Not(Unary());
    const Tok k = t_[pos_].kind;
    if (k == Tok::kGe || k == Tok::kLe || k == Tok::kEq) {
      ++pos_;
      if (t_[pos_].kind != Tok::kNum) throw InputError("expected a number after '" + t_[pos_ - 1].text + "'");
      const std::int64_t c = ParseBound(t_[pos_++].text, false);
      const Comparison cmp = k == Tok::kGe   ? Comparison::kAtLeast
                             : k == Tok::kLe ? Comparison::kAtMost
                                             : Comparison::kExactly;
      return C1Formula::Count(cmp, c, Unary());
    }
    return Primary();
  }
  C1Formula Primary() {
    const Token& tok = t_[pos_];
    if (tok.kind == Tok::kIdent) {
      ++pos_;
      if (tok.text == "true") return C1Formula::Constant(true);
      if (tok.text == "false") return C1Formula::Constant(false);
      return C1Formula::Atom(tok.text);
    }
    if (Accept(Tok::kLParen)) {
      C1Formula f = Or();
      if (!Accept(Tok::kRParen)) throw InputError("expected ')'");
      return f;
    }
    throw InputError(tok.kind == Tok::kEnd ? "formula ends too early"
                                           : "unexpected '" + tok.text + "'");
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// Matches the atom shapes; nullopt when the tokens are not atom-shaped.
// "=" yields an at-most/at-least pair.
std::optional<std::vector<CountingAtom>> MatchAtom(const std::vector<Token>& t) {
  std::size_t i = 0;
  auto at = [&](Tok k) { return i < t.size() && t[i].kind == k; };
  auto cmp = [&]() -> std::optional<Tok> {
    if (at(Tok::kGe) || at(Tok::kLe) || at(Tok::kEq)) return t[i++].kind;
    return std::nullopt;
  };
  auto literal = [&]() -> std::optional<Literal> {
    const bool neg = at(Tok::kNot);
    if (neg) ++i;
    if (!at(Tok::kIdent)) return std::nullopt;
    return Literal{t[i++].text, !neg};
  };
  const auto outer = cmp();
  if (!outer || !at(Tok::kNum)) return std::nullopt;
  const std::string bound_text = t[i++].text;
  std::optional<Literal> a;
  std::optional<Literal> b;
  std::optional<CountingAtom> relational;
  if (at(Tok::kLParen)) {
    ++i;
    a = literal();
    if (!a || !at(Tok::kAnd)) return std::nullopt;
    ++i;
    b = literal();
    if (!b || !at(Tok::kRParen)) return std::nullopt;
    ++i;
  } else if (at(Tok::kIdent) && i + 1 < t.size() && t[i + 1].kind == Tok::kLBracket) {
    const std::string subject = t[i].text;
    i += 2;
    if (!at(Tok::kIdent)) return std::nullopt;
    const std::string verb = t[i++].text;
    const auto inner = cmp();
    if (!inner || *inner == Tok::kEq || !at(Tok::kNum)) return std::nullopt;
    const std::string inner_text = t[i++].text;
    if (!at(Tok::kIdent)) return std::nullopt;
    const std::string object = t[i++].text;
    if (!at(Tok::kRBracket)) return std::nullopt;
    ++i;
    if (*outer == Tok::kEq) throw InputError("'=' is not available for relational atoms");
    relational = CountingAtom::MakeRelational(
        *outer == Tok::kGe ? Direction::kAtLeast : Direction::kAtMost,
        ParseBound(bound_text, true), subject, verb,
        *inner == Tok::kGe ? Direction::kAtLeast : Direction::kAtMost,
        ParseBound(inner_text, false), object);
  } else {
    a = literal();
    if (!a) return std::nullopt;
    b = a;
  }
  if (!at(Tok::kEnd)) return std::nullopt;
  if (relational) return std::vector<CountingAtom>{*relational};
  const std::int64_t c = ParseBound(bound_text, *outer != Tok::kEq);
  if (*a == *b && a->predicate == "true") return std::nullopt;
  for (const auto* l : {&*a, &*b}) {
    if (l->predicate == "true" || l->predicate == "false") return std::nullopt;
  }
  if (*outer == Tok::kEq) {
    return std::vector<CountingAtom>{CountingAtom::MakeUnary(Direction::kAtMost, c, *a, *b),
                                     CountingAtom::MakeUnary(Direction::kAtLeast, c, *a, *b)};
  }
  return std::vector<CountingAtom>{CountingAtom::MakeUnary(
      *outer == Tok::kGe ? Direction::kAtLeast : Direction::kAtMost, c, *a, *b)};
}

// Every predicate occurrence sits under a counting quantifier.
bool Closed(const C1Formula& f) {
  switch (f.kind()) {
    case C1Formula::Kind::kAtom:
      return false;
    case C1Formula::Kind::kCount:
    case C1Formula::Kind::kTrue:
    case C1Formula::Kind::kFalse:
      return true;
    default:
      return std::all_of(f.children().begin(), f.children().end(), Closed);
  }
}

}  // namespace

C1Formula ParseFormula(std::string_view text) { return FormulaParser(Lex(text)).ParseAll(); }

CountingAtom ParseAtom(std::string_view text) {
  const auto atoms = MatchAtom(Lex(text));
  if (!atoms || atoms->size() != 1) {
    throw InputError("not a counting atom: '" + std::string(text) + "'");
  }
  return atoms->front();
}

std::string RenderSymbolic(const CountingAtom& atom) { return atom.str(); }

ArgumentFile ParseSymbolic(std::string_view text) {
  ArgumentFile file;
  const Sections sections = SplitLines(text);
  for (const auto* part : {&sections.premises, &sections.conclusion}) {
    const bool is_conclusion = part == &sections.conclusion;
    for (const auto& [line_no, line] : *part) {
      AtLine(line_no, [&] {
        const auto tokens = Lex(line);
        if (auto atoms = MatchAtom(tokens)) {
          Store(file, std::move(*atoms), is_conclusion);
          return 0;
        }
        C1Formula f = FormulaParser(tokens).ParseAll();
        if (!Closed(f)) throw InputError("formula has a free occurrence of x: " + f.str());
        if (is_conclusion) {
          file.conclusion_formula = std::move(f);
        } else {
          file.formulas.push_back(std::move(f));
        }
        return 0;
      });
    }
  }
  return file;
}

std::string FormatSymbolic(const ArgumentFile& file) {
  std::ostringstream out;
  for (const auto& a : file.premises) out << RenderSymbolic(a) << "\n";
  for (const auto& f : file.formulas) out << f.str() << "\n";
  if (file.has_conclusion()) {
    out << "Therefore:\n";
    if (file.conclusion) {
      out << RenderSymbolic(*file.conclusion) << "\n";
    } else {
      out << file.conclusion_formula->str() << "\n";
    }
  }
  return out.str();
}

}  // namespace numsyl
