// Copyright 2026 The causemap Authors.
//
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

// Exception table first, then part-of-speech specific suffix stripping.
// Stripping candidates are checked against the lexicon so that "caused"
// becomes "cause" but "warmed" becomes "warm". An exception entry is final
// and the rules are applied once; the exception table holds identity
// entries for lemmas the rules would alter, so lemmas map to themselves.
//
// scripts/build_lexicon.py mirrors these rules to decide which forms need
// exception entries; change both together.

#include <algorithm>
#include <array>

#include "causemap/base.h"
#include "causemap/textproc.h"
#include "textproc_internal.h"

namespace causemap {

namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <typename... S>
bool EndsWithAny(std::string_view s, S... suffixes) {
  return (EndsWith(s, suffixes) || ...);
}

bool IsLowerAlpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string Drop(std::string_view s, size_t n) {
  return std::string(s.substr(0, s.size() - n));
}

// "runn" -> "run"; l, s, f and z doublings are usually part of the stem.
std::optional<std::string> Undouble(std::string_view stem) {
  size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      std::string_view("lsfz").find(stem[n - 1]) == std::string_view::npos) {
    return Drop(stem, 1);
  }
  return std::nullopt;
}

std::vector<std::string> StripCandidates(std::string_view stem) {
  std::vector<std::string> out;
  if (auto u = Undouble(stem)) out.push_back(*u);
  out.push_back(std::string(stem) + "e");
  out.push_back(std::string(stem));
  return out;
}

// Guess for stems the lexicon does not know.
std::string FallbackStem(std::string_view stem) {
  if (auto u = Undouble(stem)) return *u;
  static constexpr std::array<std::string_view, 17> kNeedsE = {
      "at", "iz", "is", "yz", "v", "c", "g", "ur", "ut",
      "ud", "bl", "pl", "tl", "dl", "gl", "kl", "fl"};
  for (std::string_view e : kNeedsE) {
    if (EndsWith(stem, e)) return std::string(stem) + "e";
  }
  return std::string(stem);
}

std::string StripPluralS(std::string_view w, Pos pos, const Lexicon &lex) {
  std::string one = Drop(w, 1);
  if (lex.Admits(one, pos)) return one;
  if (EndsWith(w, "es") && lex.Admits(Drop(w, 2), pos)) return Drop(w, 2);
  if (EndsWithAny(w, "sses", "xes", "ches", "shes", "zes")) return Drop(w, 2);
  return one;
}

bool StripsS(std::string_view w) {
  return EndsWith(w, "s") && !EndsWithAny(w, "ss", "us", "is");
}

std::string VerbRule(std::string_view w, const Lexicon &lex) {
  if (w.size() > 4 && EndsWithAny(w, "ies", "ied")) return Drop(w, 3) + "y";
  for (std::string_view suffix : {std::string_view("ing"), std::string_view("ed")}) {
    if (w.size() > suffix.size() + 2 && EndsWith(w, suffix)) {
      std::string_view stem = w.substr(0, w.size() - suffix.size());
      for (const std::string &c : StripCandidates(stem)) {
        if (lex.Admits(c, Pos::kVerb)) return c;
      }
      return FallbackStem(stem);
    }
  }
  if (w.size() > 3 && StripsS(w)) return StripPluralS(w, Pos::kVerb, lex);
  return std::string(w);
}

std::string NounRule(std::string_view w, const Lexicon &lex) {
  if (w.size() > 4 && EndsWith(w, "ies")) return Drop(w, 3) + "y";
  if (w.size() > 2 && StripsS(w)) return StripPluralS(w, Pos::kNoun, lex);
  return std::string(w);
}

std::string AdjRule(std::string_view w, const Lexicon &lex) {
  for (std::string_view suffix : {std::string_view("est"), std::string_view("er")}) {
    if (w.size() > suffix.size() + 2 && EndsWith(w, suffix)) {
      std::string_view stem = w.substr(0, w.size() - suffix.size());
      std::vector<std::string> candidates;
      if (EndsWith(stem, "i")) candidates.push_back(Drop(stem, 1) + "y");
      for (std::string &c : StripCandidates(stem)) candidates.push_back(std::move(c));
      for (const std::string &c : candidates) {
        if (lex.Admits(c, Pos::kAdj)) return c;
      }
      return std::string(w);
    }
  }
  return std::string(w);
}

std::string ApplyOnce(const std::string &w, Pos pos, const Lexicon &lex) {
  if (const std::string *e = lex.Exception(w, pos)) return *e;
  if (!IsLowerAlpha(w)) return w;
  switch (pos) {
    case Pos::kNoun: return NounRule(w, lex);
    case Pos::kVerb: return VerbRule(w, lex);
    case Pos::kAdj: return AdjRule(w, lex);
    default: return w;
  }
}

}  // namespace

std::string Lemmatize(std::string_view surface, Pos pos, const Lexicon &lexicon) {
  std::string word = AsciiLower(internal::NormalizeApostrophes(surface));
  std::string lemma = ApplyOnce(word, pos, lexicon);
  return lemma.empty() ? word : lemma;
}

void LemmatizeAll(std::span<Token> tokens, const Lexicon &lexicon) {
  for (Token &t : tokens) t.lemma = Lemmatize(t.surface, t.pos, lexicon);
}

LemmaSet ContentLemmas(std::span<const Token> tokens, const Lexicon &lexicon) {
  LemmaSet out;
  for (const Token &t : tokens) {
    if (t.pos != Pos::kNoun && t.pos != Pos::kVerb && t.pos != Pos::kAdj) {
      continue;
    }
    std::string lemma = t.lemma.empty() ? Lemmatize(t, lexicon) : t.lemma;
    if (lemma.empty() || lexicon.IsStopVerb(lemma)) continue;
    out.insert(std::move(lemma));
  }
  return out;
}

std::vector<Sentence> Analyze(std::string_view text, const Lexicon &lexicon) {
  std::vector<Sentence> sentences = SplitSentences(text);
  for (Sentence &s : sentences) {
    PosTag(s.tokens, lexicon);
    LemmatizeAll(s.tokens, lexicon);
  }
  return sentences;
}

std::vector<Token> AnalyzeTokens(std::string_view text, const Lexicon &lexicon) {
  std::vector<Token> tokens = Tokenize(text);
  PosTag(tokens, lexicon);
  LemmatizeAll(tokens, lexicon);
  return tokens;
}

}  // namespace causemap
