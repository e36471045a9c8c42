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

// Causation frame extraction. A fixed set of lexical units evokes the frame;
// per-unit span rules fill its Cause and Effect slots.

#ifndef CAUSEMAP_FRAMEX_H_
#define CAUSEMAP_FRAMEX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causemap/corpus.h"
#include "causemap/textproc.h"

namespace causemap {

enum class LexicalUnit {
  kCauseV,
  kDueToPrep,
  kBecauseC,
  kBecauseOfPrep,
  kGiveRiseToV,
  kLeadToV,
  kResultInV,
};

// "CAUSE_V", "DUE_TO_PREP", ...
std::string_view LexicalUnitName(LexicalUnit unit);
// FrameNet-style label: "cause.v", "due to.prep", ...
std::string_view LexicalUnitLabel(LexicalUnit unit);
// Accepts either spelling.
std::optional<LexicalUnit> ParseLexicalUnit(std::string_view text);
// Number of tokens the unit spans.
size_t LexicalUnitLength(LexicalUnit unit);
bool IsVerbal(LexicalUnit unit);

enum class Voice { kActive, kPassive, kNa };

std::string_view VoiceName(Voice voice);

struct Trigger {
  LexicalUnit unit;
  size_t begin = 0;  // token indices within the sentence, [begin, end)
  size_t end = 0;
  Voice voice = Voice::kNa;

  friend bool operator==(const Trigger &, const Trigger &) = default;
};

struct CausalRelation {
  std::string relation_id;
  std::string comment_id;
  std::string commenter_id;
  std::string utterance;  // the source sentence, whitespace-trimmed
  std::string cause;
  std::string effect;
  Trigger trigger;
  // Cause is a bare pronoun ("this causes flooding").
  bool pronominal = false;

  friend bool operator==(const CausalRelation &,
                         const CausalRelation &) = default;
};

// Maximal non-overlapping lexical unit matches, left to right. The sentence
// must be tagged and lemmatized.
std::vector<Trigger> FindTriggers(const Sentence &sentence,
                                  const Lexicon &lexicon = Lexicon::Default());

// Lower-cased source slice with leading determiners, surrounding punctuation
// and participial lead-ins ("emanating from") removed. May be empty.
std::string NormalizeSpan(std::span<const Token> tokens);

// |text| is the text the sentence was split from. Relation ids and comment
// provenance are left empty.
std::optional<CausalRelation> ExtractRelation(
    std::string_view text, const Sentence &sentence, const Trigger &trigger,
    const Lexicon &lexicon = Lexicon::Default());

// All relations of one text, in sentence then trigger order.
std::vector<CausalRelation> ExtractText(
    std::string_view text, const Lexicon &lexicon = Lexicon::Default());

std::vector<CausalRelation> ExtractComment(
    const Comment &comment, const Lexicon &lexicon = Lexicon::Default());

struct ExtractionReport {
  size_t comments = 0;
  // Comments whose processing threw; they contribute no relations.
  std::vector<std::pair<std::string, std::string>> failures;  // id, message
};

// Relations of every comment in canonical comment order.
std::vector<CausalRelation> ExtractCorpus(
    const Corpus &corpus, ExtractionReport *report = nullptr,
    const Lexicon &lexicon = Lexicon::Default());

// {"causalRelations":[...]} in a fixed key order. |compact| keeps
// only utterance, cause and effect.
std::string RelationsToJson(std::span<const CausalRelation> relations,
                            bool compact = false);

}  // namespace causemap

#endif  // CAUSEMAP_FRAMEX_H_
