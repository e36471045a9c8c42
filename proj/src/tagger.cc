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

// Two-stage tagger in the style of Brill's: every token first gets its
// lexical tag (lexicon, suffix, capitalization, default), then a few
// contextual rules resolve the noun/verb ambiguities that matter for
// trigger detection and content-word filtering.

#include <algorithm>
#include <array>

#include "causemap/base.h"
#include "causemap/textproc.h"
#include "textproc_internal.h"

namespace causemap {

namespace {

using internal::Decode;

struct SuffixRule {
  std::string_view suffix;
  Pos pos;
};

// First match wins; longer, more specific suffixes come first.
constexpr std::array<SuffixRule, 31> kSuffixRules = {{
    {"tions", Pos::kNoun}, {"tion", Pos::kNoun}, {"sions", Pos::kNoun},
    {"sion", Pos::kNoun}, {"ments", Pos::kNoun}, {"ment", Pos::kNoun},
    {"nesses", Pos::kNoun}, {"ness", Pos::kNoun}, {"ities", Pos::kNoun},
    {"ity", Pos::kNoun}, {"isms", Pos::kNoun}, {"ism", Pos::kNoun},
    {"izing", Pos::kVerb}, {"ized", Pos::kVerb}, {"izes", Pos::kVerb},
    {"ize", Pos::kVerb}, {"ifying", Pos::kVerb}, {"ified", Pos::kVerb},
    {"ifies", Pos::kVerb}, {"ify", Pos::kVerb},
    {"ous", Pos::kAdj}, {"able", Pos::kAdj}, {"ible", Pos::kAdj},
    {"ful", Pos::kAdj}, {"less", Pos::kAdj}, {"ical", Pos::kAdj},
    {"ly", Pos::kAdv},
    {"ing", Pos::kVerb}, {"ed", Pos::kVerb},
    {"ists", Pos::kNoun}, {"ist", Pos::kNoun},
}};

constexpr std::array<std::string_view, 13> kModals = {
    "can", "could", "will", "would", "shall", "should", "may",
    "might", "must", "ca", "wo", "'ll", "'d"};
constexpr std::array<std::string_view, 3> kNegations = {"not", "n't", "never"};
constexpr std::array<std::string_view, 3> kDoForms = {"do", "does", "did"};
constexpr std::array<std::string_view, 15> kAuxiliaries = {
    "be", "am", "is", "are", "was", "were", "been", "being", "'s", "'re",
    "'m", "have", "has", "had", "'ve"};
constexpr std::array<std::string_view, 7> kPossessives = {
    "my", "your", "his", "her", "its", "our", "their"};
constexpr std::array<std::string_view, 7> kSingularSubjects = {
    "it", "he", "she", "this", "that", "which", "who"};
constexpr std::array<std::string_view, 9> kPluralSubjects = {
    "i", "you", "we", "they", "these", "those", "which", "who", "that"};
constexpr std::array<std::string_view, 6> kNonWordAbbreviations = {
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "approx."};

template <size_t N>
bool In(const std::array<std::string_view, N> &set, std::string_view word) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsAlphabetic(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

bool HasWordChar(std::string_view s) {
  for (size_t i = 0; i < s.size();) {
    auto c = Decode(s, i);
    if (internal::IsWordChar(c.cp)) return true;
    i += c.len;
  }
  return false;
}

bool IsNumber(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

bool IsPunctuation(std::string_view s) {
  for (size_t i = 0; i < s.size();) {
    auto c = Decode(s, i);
    bool punct = (c.cp < 0x80 && c.cp > 0x20 && c.cp != 0x7F) ||
                 (c.cp >= 0x2010 && c.cp <= 0x205E) || c.cp == 0xAB ||
                 c.cp == 0xBB || c.cp == 0xA1 || c.cp == 0xBF;
    if (!punct) return false;
    i += c.len;
  }
  return true;
}

Pos LexicalTag(const Token &token, const std::string &key,
               const Lexicon &lexicon) {
  if (internal::IsUrl(token.surface)) return Pos::kOther;
  if (!HasWordChar(token.surface)) {
    return IsPunctuation(token.surface) ? Pos::kPunct : Pos::kOther;
  }
  if (IsNumber(key)) return Pos::kNum;
  if (auto pos = lexicon.Lookup(key)) return *pos;
  if (internal::IsAbbreviation(token.surface)) {
    return In(kNonWordAbbreviations, key) ? Pos::kOther : Pos::kNoun;
  }
  if (IsAlphabetic(key)) {
    for (const SuffixRule &rule : kSuffixRules) {
      if (key.size() > rule.suffix.size() + 1 && EndsWith(key, rule.suffix)) {
        return rule.pos;
      }
    }
  }
  // Capitalized non-initial words are proper nouns; everything else that is
  // still unresolved also defaults to NOUN, so the two cases coincide.
  return Pos::kNoun;
}

class Context {
 public:
  Context(std::span<Token> tokens, const Lexicon &lexicon)
      : tokens_(tokens), lexicon_(lexicon) {
    keys_.reserve(tokens.size());
    for (const Token &t : tokens) {
      keys_.push_back(AsciiLower(internal::NormalizeApostrophes(t.surface)));
    }
  }

  void TagLexical() {
    for (size_t i = 0; i < tokens_.size(); ++i) {
      tokens_[i].pos = LexicalTag(tokens_[i], keys_[i], lexicon_);
    }
  }

  // Brill-style: each rule sweeps the sentence left to right, seeing the
  // updates it has already made to the left context.
  void ApplyContextRules() {
    NominalAfterDeterminer();
    VerbAfterAuxiliary();
    VerbAfterSubject();
  }

 private:
  Pos tag(size_t i) const { return tokens_[i].pos; }
  void set(size_t i, Pos pos) { tokens_[i].pos = pos; }
  bool admits(size_t i, Pos pos) const { return lexicon_.Admits(keys_[i], pos); }
  const std::string &key(size_t i) const { return keys_[i]; }

  // "the warming", "a rise", "their cause": verb-tagged words read as nouns.
  void NominalAfterDeterminer() {
    for (size_t i = 1; i < tokens_.size(); ++i) {
      if (tag(i) != Pos::kVerb) continue;
      if (!admits(i, Pos::kNoun) && !EndsWith(key(i), "ing")) continue;
      bool det_like = tag(i - 1) == Pos::kDet || tag(i - 1) == Pos::kAdj ||
                      In(kPossessives, key(i - 1));
      if (det_like) set(i, Pos::kNoun);
    }
  }

  // "could cause", "does not cause", "to cause".
  void VerbAfterAuxiliary() {
    for (size_t i = 1; i < tokens_.size(); ++i) {
      if (tag(i) == Pos::kVerb || !admits(i, Pos::kVerb)) continue;
      const std::string &prev = key(i - 1);
      bool aux = In(kModals, prev) || In(kNegations, prev) ||
                 (In(kDoForms, prev) && tag(i - 1) == Pos::kVerb);
      bool infinitive = prev == "to" && !EndsWith(key(i), "s") &&
                        !EndsWith(key(i), "ed") && !EndsWith(key(i), "ing");
      if (aux || infinitive) set(i, Pos::kVerb);
    }
  }

  // "global warming causes rises", "emissions cause warming",
  // "this causes flooding".
  void VerbAfterSubject() {
    for (size_t i = 1; i + 1 < tokens_.size(); ++i) {
      if (tag(i) != Pos::kNoun || !admits(i, Pos::kVerb)) continue;
      const std::string &prev = key(i - 1);
      Pos prev_tag = tag(i - 1);
      bool third_person = EndsWith(key(i), "s");
      bool subject;
      if (prev_tag == Pos::kNoun) {
        // "emissions" is plural; "powerlessness", "virus", "crisis" are not.
        bool prev_plural = EndsWith(prev, "s") && !EndsWith(prev, "ss") &&
                           !EndsWith(prev, "us") && !EndsWith(prev, "is");
        subject = third_person != prev_plural;
      } else if (prev_tag == Pos::kPron || prev_tag == Pos::kDet) {
        subject = third_person ? In(kSingularSubjects, prev)
                               : In(kPluralSubjects, prev);
      } else {
        subject = false;
      }
      if (!subject) continue;
      Pos next = tag(i + 1);
      bool object_follows = next == Pos::kDet || next == Pos::kNoun ||
                            next == Pos::kAdj || next == Pos::kNum ||
                            next == Pos::kPron;
      bool nominal_verb_follows = next == Pos::kVerb &&
                                  admits(i + 1, Pos::kNoun) &&
                                  !In(kAuxiliaries, key(i + 1)) &&
                                  !In(kDoForms, key(i + 1));
      if (!object_follows && !nominal_verb_follows) continue;
      set(i, Pos::kVerb);
      if (nominal_verb_follows) set(i + 1, Pos::kNoun);
    }
  }

  std::span<Token> tokens_;
  const Lexicon &lexicon_;
  std::vector<std::string> keys_;
};

}  // namespace

void PosTag(std::span<Token> tokens, const Lexicon &lexicon) {
  Context context(tokens, lexicon);
  context.TagLexical();
  context.ApplyContextRules();
}

}  // namespace causemap
