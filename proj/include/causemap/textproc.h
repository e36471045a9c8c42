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

// Rule-based English text processing: tokenization, sentence splitting,
// coarse part-of-speech tagging, lemmatization and content-word extraction.
//
// Everything here is a pure function of its input and an immutable Lexicon,
// so results are identical across runs and safe to compute in parallel.
// Offsets are byte offsets into the UTF-8 source.

#ifndef CAUSEMAP_TEXTPROC_H_
#define CAUSEMAP_TEXTPROC_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace causemap {

enum class Pos : uint8_t {
  kNoun,
  kVerb,
  kAdj,
  kAdv,
  kDet,
  kPron,
  kAdp,
  kConj,
  kNum,
  kPunct,
  kOther,
};

// "NOUN", "VERB", ...
std::string_view PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view name);

struct Token {
  std::string surface;
  size_t start = 0;  // byte offset, inclusive
  size_t end = 0;    // byte offset, exclusive
  Pos pos = Pos::kOther;
  std::string lemma;
};

struct Sentence {
  std::vector<Token> tokens;
  // Sentences partition the source: trailing whitespace belongs to the
  // sentence it follows.
  size_t start = 0;
  size_t end = 0;
};

// Lemmas of content words (nouns, verbs, adjectives) minus stop verbs.
using LemmaSet = std::set<std::string>;

// Word/tag lexicon, lemma exception table and stop-verb list.
class Lexicon {
 public:
  // The lexicon compiled into the library from data/.
  static const Lexicon &Default();

  // Loads from text files in the formats of data/lexicon.tsv,
  // data/lemma_exceptions.tsv and data/stop_verbs.txt. Throws DataError on
  // malformed lines.
  static Lexicon Load(std::istream &lexicon, std::istream &exceptions,
                      std::istream &stop_verbs);

  // Most frequent tag of a lower-cased word.
  std::optional<Pos> Lookup(std::string_view word) const;

  // True if the lexicon lists |pos| among the word's tags.
  bool Admits(std::string_view word, Pos pos) const;

  // Frequency rank (0 = most frequent); nullopt for unknown words.
  std::optional<size_t> Rank(std::string_view word) const;

  const std::string *Exception(std::string_view word, Pos pos) const;

  bool IsStopVerb(std::string_view lemma) const;

  size_t size() const { return words_.size(); }

 private:
  struct Entry {
    Pos primary;
    uint16_t tags;  // bit per Pos
    size_t rank;
  };

  std::unordered_map<std::string, Entry> words_;
  std::unordered_map<std::string, std::string> exceptions_;  // "word\tPOS"
  std::unordered_set<std::string> stop_verbs_;
};

// Splits text into tokens with pos and lemma unset. Punctuation is split
// from words, contractions are split at the apostrophe ("don't" -> "do",
// "n't"), and abbreviations such as "e.g." or "Mr." stay whole.
std::vector<Token> Tokenize(std::string_view text);

// Sentence boundaries fall after ".", "!" or "?" when followed by
// whitespace and an upper-case word, or at the end of the text, and at
// blank lines. Abbreviation tokens never end a sentence. Tokens are
// returned untagged.
std::vector<Sentence> SplitSentences(std::string_view text);

// Assigns one coarse tag per token: lexicon, then suffix rules, then
// capitalization, then NOUN; followed by contextual corrections.
void PosTag(std::span<Token> tokens, const Lexicon &lexicon = Lexicon::Default());

// Dictionary form of a tagged token, lower case.
std::string Lemmatize(std::string_view surface, Pos pos,
                      const Lexicon &lexicon = Lexicon::Default());

inline std::string Lemmatize(const Token &token,
                             const Lexicon &lexicon = Lexicon::Default()) {
  return Lemmatize(token.surface, token.pos, lexicon);
}

// Fills Token::lemma for every token.
void LemmatizeAll(std::span<Token> tokens,
                  const Lexicon &lexicon = Lexicon::Default());

LemmaSet ContentLemmas(std::span<const Token> tokens,
                       const Lexicon &lexicon = Lexicon::Default());

// Split, tag and lemmatize.
std::vector<Sentence> Analyze(std::string_view text,
                              const Lexicon &lexicon = Lexicon::Default());

// Tags and lemmatizes one token sequence taken as a single sentence.
std::vector<Token> AnalyzeTokens(std::string_view text,
                                 const Lexicon &lexicon = Lexicon::Default());

}  // namespace causemap

#endif  // CAUSEMAP_TEXTPROC_H_
