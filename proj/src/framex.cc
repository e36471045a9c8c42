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

#include "causemap/framex.h"

#include <algorithm>
#include <iterator>

#include "causemap/base.h"
#include "json.hpp"
#include "textproc_internal.h"

namespace causemap {

namespace {

template <size_t N>
bool In(const std::string_view (&set)[N], std::string_view word) {
  return std::find(std::begin(set), std::end(set), word) != std::end(set);
}

constexpr std::string_view kBeForms[] = {"be", "am", "is", "are", "was", "were",
                            "been", "being", "'s", "'re", "'m"};
constexpr std::string_view kAuxiliaries[] = {
    "be", "am", "is", "are", "was", "were", "been", "being", "'s", "'re",
    "'m", "have", "has", "had", "'ve", "do", "does", "did", "can", "could",
    "will", "would", "shall", "should", "may", "might", "must", "ca", "wo",
    "'ll", "'d", "not", "n't", "never"};
constexpr std::string_view kNegations[] = {"not", "n't", "never"};
constexpr std::string_view kSubordinators[] = {
    "if", "when", "whenever", "whether", "although", "though", "while",
    "since", "unless", "whereas", "that", "which", "who", "where"};
constexpr std::string_view kRelativePronouns[] = {"that", "which", "who"};
constexpr std::string_view kClauseConjunctions[] = {"but", "yet", "so", "nor"};
constexpr std::string_view kDeterminers[] = {"the", "a", "an", "this", "that",
                                "such", "some", "any", "all"};
constexpr std::string_view kPossessives[] = {"my", "your", "his", "her",
                                "its", "our", "their"};
constexpr std::string_view kLeadIns[] = {"emanating", "arising", "stemming", "resulting"};
constexpr std::string_view kPronouns[] = {"it", "this", "that", "these", "those", "they",
                             "them", "which", "what", "who", "he", "she",
                             "him", "her", "we", "us", "you", "i", "me"};

std::string Key(const Token &token) {
  return AsciiLower(internal::NormalizeApostrophes(token.surface));
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsPunctuation(std::string_view s) {
  if (internal::IsUrl(s)) return false;
  for (size_t i = 0; i < s.size();) {
    internal::CodePoint c = internal::Decode(s, i);
    if (internal::IsWordChar(c.cp)) return false;
    i += c.len;
  }
  return true;
}

bool IsPunctuationToken(const Token &token) {
  return IsPunctuation(token.surface);
}

bool IsOpening(std::string_view key) { return key == "(" || key == "["; }
bool IsClosing(std::string_view key) { return key == ")" || key == "]"; }

struct Span {
  size_t begin = 0;
  size_t end = 0;
  // Token that stopped the scan, if any.
  std::optional<size_t> boundary;
};

class SentenceView {
 public:
  SentenceView(const Sentence &sentence, std::span<const Trigger> triggers)
      : tokens_(sentence.tokens), owner_(tokens_.size(), -1) {
    keys_.reserve(tokens_.size());
    for (const Token &t : tokens_) keys_.push_back(Key(t));
    for (size_t k = 0; k < triggers.size(); ++k) {
      for (size_t i = triggers[k].begin; i < triggers[k].end; ++i) {
        owner_[i] = static_cast<int>(k);
      }
    }
  }

  size_t size() const { return tokens_.size(); }
  const std::string &key(size_t i) const { return keys_[i]; }
  Pos tag(size_t i) const { return tokens_[i].pos; }

  // Scans left from |end| (exclusive) to the nearest clause boundary.
  Span Left(size_t end, int self) const {
    Span span{end, end, std::nullopt};
    int depth = 0;
    while (span.begin > 0) {
      size_t k = span.begin - 1;
      if (IsClosing(key(k))) {
        ++depth;
      } else if (IsOpening(key(k))) {
        if (depth == 0) {
          span.boundary = k;
          break;
        }
        --depth;
      } else if (depth == 0 && IsBoundary(k, self)) {
        span.boundary = k;
        break;
      }
      span.begin = k;
    }
    return span;
  }

  // Scans right from |begin|. With |noun_phrase| the scan also stops at
  // auxiliaries, which start a new predicate.
  Span Right(size_t begin, int self, bool noun_phrase) const {
    Span span{begin, begin, std::nullopt};
    int depth = 0;
    while (span.end < size()) {
      size_t k = span.end;
      if (IsOpening(key(k))) {
        ++depth;
      } else if (IsClosing(key(k))) {
        if (depth == 0) {
          span.boundary = k;
          break;
        }
        --depth;
      } else if (depth == 0) {
        // A leading "that" is a determiner ("leads to that outcome").
        bool stop = k == begin ? IsBoundary(k, self) && key(k) != "that"
                               : IsBoundary(k, self) ||
                                     (noun_phrase && In(kAuxiliaries, key(k)));
        if (stop) {
          span.boundary = k;
          break;
        }
      }
      ++span.end;
    }
    return span;
  }

  // Drops auxiliaries, negations and (optionally) adverbs at the end of a
  // left span: "methane leaks could", "the floods were".
  void StripTrailingAuxiliaries(Span *span, bool adverbs) const {
    while (span->end > span->begin) {
      size_t k = span->end - 1;
      bool aux = In(kAuxiliaries, key(k)) || (adverbs && tag(k) == Pos::kAdv);
      if (!aux) break;
      --span->end;
    }
  }

  std::string Normalize(const Span &span) const {
    return NormalizeSpan(std::span<const Token>(tokens_).subspan(
        span.begin, span.end - span.begin));
  }

 private:
  bool IsBoundary(size_t k, int self) const {
    if (owner_[k] >= 0 && owner_[k] != self) return true;
    const std::string &w = key(k);
    if (w == "," || w == ";" || w == ":" || internal::IsTerminal(w)) {
      return true;
    }
    if (In(kSubordinators, w) || In(kClauseConjunctions, w)) return true;
    if ((w == "and" || w == "or") && k + 1 < size()) {
      Pos next = tag(k + 1);
      if (next == Pos::kPron || next == Pos::kVerb) return true;
    }
    return false;
  }

  std::span<const Token> tokens_;
  std::vector<std::string> keys_;
  std::vector<int> owner_;  // trigger index per token, -1 if none
};

std::string VerbLemma(const Token &token, const Lexicon &lexicon) {
  return Lemmatize(token.surface, Pos::kVerb, lexicon);
}

bool IsFrontedPosition(const SentenceView &view, size_t begin) {
  for (size_t i = 0; i < begin; ++i) {
    if (!IsPunctuation(view.key(i))) return false;
  }
  return true;
}

std::string RelationId(std::string_view comment_id, const Sentence &sentence,
                       const Trigger &trigger) {
  const Token &first = sentence.tokens[trigger.begin];
  const Token &last = sentence.tokens[trigger.end - 1];
  std::string key(comment_id);
  key += '\x1f';
  key += std::to_string(sentence.start) + ":" + std::to_string(sentence.end);
  key += '\x1f';
  key += std::to_string(first.start) + ":" + std::to_string(last.end);
  return Hex64(Fnv1a64(key));
}

std::vector<CausalRelation> Extract(std::string_view text,
                                    std::string_view comment_id,
                                    const Lexicon &lexicon) {
  std::vector<CausalRelation> out;
  for (const Sentence &sentence : Analyze(text, lexicon)) {
    for (const Trigger &trigger : FindTriggers(sentence, lexicon)) {
      auto relation = ExtractRelation(text, sentence, trigger, lexicon);
      if (!relation) continue;
      relation->comment_id = std::string(comment_id);
      relation->relation_id = RelationId(comment_id, sentence, trigger);
      out.push_back(std::move(*relation));
    }
  }
  return out;
}

}  // namespace

std::string_view LexicalUnitName(LexicalUnit unit) {
  switch (unit) {
    case LexicalUnit::kCauseV: return "CAUSE_V";
    case LexicalUnit::kDueToPrep: return "DUE_TO_PREP";
    case LexicalUnit::kBecauseC: return "BECAUSE_C";
    case LexicalUnit::kBecauseOfPrep: return "BECAUSE_OF_PREP";
    case LexicalUnit::kGiveRiseToV: return "GIVE_RISE_TO_V";
    case LexicalUnit::kLeadToV: return "LEAD_TO_V";
    case LexicalUnit::kResultInV: return "RESULT_IN_V";
  }
  return "";
}

std::string_view LexicalUnitLabel(LexicalUnit unit) {
  switch (unit) {
    case LexicalUnit::kCauseV: return "cause.v";
    case LexicalUnit::kDueToPrep: return "due to.prep";
    case LexicalUnit::kBecauseC: return "because.c";
    case LexicalUnit::kBecauseOfPrep: return "because of.prep";
    case LexicalUnit::kGiveRiseToV: return "give rise to.v";
    case LexicalUnit::kLeadToV: return "lead to.v";
    case LexicalUnit::kResultInV: return "result in.v";
  }
  return "";
}

std::optional<LexicalUnit> ParseLexicalUnit(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(LexicalUnit::kResultInV); ++i) {
    auto unit = static_cast<LexicalUnit>(i);
    if (text == LexicalUnitName(unit) || text == LexicalUnitLabel(unit)) {
      return unit;
    }
  }
  return std::nullopt;
}

size_t LexicalUnitLength(LexicalUnit unit) {
  switch (unit) {
    case LexicalUnit::kCauseV:
    case LexicalUnit::kBecauseC:
      return 1;
    case LexicalUnit::kGiveRiseToV:
      return 3;
    default:
      return 2;
  }
}

bool IsVerbal(LexicalUnit unit) {
  return unit == LexicalUnit::kCauseV || unit == LexicalUnit::kGiveRiseToV ||
         unit == LexicalUnit::kLeadToV || unit == LexicalUnit::kResultInV;
}

std::string_view VoiceName(Voice voice) {
  switch (voice) {
    case Voice::kActive: return "ACTIVE";
    case Voice::kPassive: return "PASSIVE";
    case Voice::kNa: return "NA";
  }
  return "";
}

std::vector<Trigger> FindTriggers(const Sentence &sentence,
                                  const Lexicon &lexicon) {
  const std::vector<Token> &tokens = sentence.tokens;
  const size_t n = tokens.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (const Token &t : tokens) keys.push_back(Key(t));
  auto key_is = [&](size_t i, std::string_view w) {
    return i < n && keys[i] == w;
  };
  // Verbal heads read as nouns after a determiner ("the result in ...").
  auto nominal_context = [&](size_t i) {
    return i > 0 && (tokens[i - 1].pos == Pos::kDet ||
                     In(kPossessives, keys[i - 1]));
  };

  std::vector<Trigger> out;
  for (size_t i = 0; i < n;) {
    std::optional<LexicalUnit> unit;
    if (keys[i] == "due" && key_is(i + 1, "to")) {
      unit = LexicalUnit::kDueToPrep;
    } else if (keys[i] == "because") {
      unit = key_is(i + 1, "of") ? LexicalUnit::kBecauseOfPrep
                                 : LexicalUnit::kBecauseC;
    } else if (tokens[i].surface.find_first_of("0123456789") ==
               std::string::npos) {
      std::string lemma = VerbLemma(tokens[i], lexicon);
      if (lemma == "give" && key_is(i + 1, "rise") && key_is(i + 2, "to") &&
          !nominal_context(i)) {
        unit = LexicalUnit::kGiveRiseToV;
      } else if (lemma == "lead" && key_is(i + 1, "to") &&
                 !nominal_context(i)) {
        unit = LexicalUnit::kLeadToV;
      } else if (lemma == "result" && key_is(i + 1, "in") &&
                 !nominal_context(i)) {
        unit = LexicalUnit::kResultInV;
      } else if (lemma == "cause" && tokens[i].pos == Pos::kVerb) {
        unit = LexicalUnit::kCauseV;
      }
    }
    if (!unit) {
      ++i;
      continue;
    }
    Trigger trigger;
    trigger.unit = *unit;
    trigger.begin = i;
    trigger.end = i + LexicalUnitLength(*unit);
    trigger.voice = Voice::kNa;
    if (IsVerbal(*unit)) {
      trigger.voice = Voice::kActive;
      if (!EndsWith(keys[i], "ing")) {
        size_t after = trigger.end;
        while (after < n && tokens[after].pos == Pos::kAdv) ++after;
        bool by = key_is(after, "by") && !key_is(after + 1, "far");
        size_t before = i;
        while (before > 0 && (tokens[before - 1].pos == Pos::kAdv ||
                              In(kNegations, keys[before - 1]))) {
          --before;
        }
        bool be = before > 0 && In(kBeForms, keys[before - 1]);
        if (by || be) trigger.voice = Voice::kPassive;
      }
    }
    out.push_back(trigger);
    i = trigger.end;
  }
  return out;
}

std::string NormalizeSpan(std::span<const Token> tokens) {
  size_t b = 0;
  size_t e = tokens.size();
  for (size_t i = 0; i + 1 < e; ++i) {
    if (In(kLeadIns, Key(tokens[i])) && Key(tokens[i + 1]) == "from") {
      b = i + 2;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    while (b < e && IsPunctuationToken(tokens[b])) ++b, changed = true;
    while (e > b && IsPunctuationToken(tokens[e - 1])) --e, changed = true;
    while (b < e) {
      std::string k = Key(tokens[b]);
      if (!In(kDeterminers, k)) break;
      // A lone demonstrative is the argument itself ("this causes ...").
      if (e - b == 1 && (k == "this" || k == "that")) break;
      ++b;
      changed = true;
    }
  }
  std::string out;
  for (size_t i = b; i < e; ++i) {
    if (i > b && tokens[i].start != tokens[i - 1].end) out += ' ';
    out += AsciiLower(tokens[i].surface);
  }
  return out;
}

std::optional<CausalRelation> ExtractRelation(std::string_view text,
                                              const Sentence &sentence,
                                              const Trigger &trigger,
                                              const Lexicon &lexicon) {
  if (trigger.end > sentence.tokens.size() || trigger.begin >= trigger.end) {
    return std::nullopt;
  }
  std::vector<Trigger> triggers = FindTriggers(sentence, lexicon);
  int self = -1;
  for (size_t k = 0; k < triggers.size(); ++k) {
    if (triggers[k].begin == trigger.begin && triggers[k].end == trigger.end) {
      self = static_cast<int>(k);
    }
  }
  SentenceView view(sentence, triggers);
  const bool verbal = IsVerbal(trigger.unit);

  // Left argument. When the scan stops right away at a relative pronoun
  // ("emissions which cause") or, for the non-verbal units, at a comma
  // ("the sea rose, because"), look past it once.
  Span left = view.Left(trigger.begin, self);
  view.StripTrailingAuxiliaries(&left, verbal);
  for (int tries = 0; tries < 2; ++tries) {
    if (!view.Normalize(left).empty() || !left.boundary) break;
    size_t at = *left.boundary;
    if (In(kRelativePronouns, view.key(at))) {
      if (at > 0 && view.key(at - 1) == ",") --at;
    } else if (!(view.key(at) == "," && !verbal)) {
      break;
    }
    left = view.Left(at, self);
    view.StripTrailingAuxiliaries(&left, verbal);
  }

  std::string cause;
  std::string effect;
  if (verbal) {
    if (trigger.voice == Voice::kPassive) {
      size_t by = trigger.end;
      while (by < view.size() && view.key(by) != "by" &&
             view.tag(by) == Pos::kAdv) {
        ++by;
      }
      if (by >= view.size() || view.key(by) != "by") return std::nullopt;
      effect = view.Normalize(left);
      cause = view.Normalize(view.Right(by + 1, self, true));
    } else {
      cause = view.Normalize(left);
      effect = view.Normalize(view.Right(trigger.end, self, true));
    }
  } else {
    bool clause = trigger.unit == LexicalUnit::kBecauseC;
    Span complement = view.Right(trigger.end, self, !clause);
    cause = view.Normalize(complement);
    effect = view.Normalize(left);
    if (effect.empty() && IsFrontedPosition(view, trigger.begin)) {
      // "Because of X, Y": the matrix clause follows the comma.
      if (complement.boundary && view.key(*complement.boundary) == ",") {
        effect = view.Normalize(
            view.Right(*complement.boundary + 1, self, false));
      }
    }
  }
  if (cause.empty() || effect.empty()) return std::nullopt;

  CausalRelation relation;
  relation.utterance = std::string(
      TrimWhitespace(text.substr(sentence.start, sentence.end - sentence.start)));
  relation.pronominal = In(kPronouns, cause);
  relation.cause = std::move(cause);
  relation.effect = std::move(effect);
  relation.trigger = trigger;
  return relation;
}

std::vector<CausalRelation> ExtractText(std::string_view text,
                                        const Lexicon &lexicon) {
  return Extract(text, "", lexicon);
}

std::vector<CausalRelation> ExtractComment(const Comment &comment,
                                           const Lexicon &lexicon) {
  std::vector<CausalRelation> out = Extract(comment.text, comment.comment_id,
                                            lexicon);
  for (CausalRelation &r : out) r.commenter_id = comment.commenter_id;
  return out;
}

std::vector<CausalRelation> ExtractCorpus(const Corpus &corpus,
                                          ExtractionReport *report,
                                          const Lexicon &lexicon) {
  std::vector<CausalRelation> out;
  ExtractionReport local;
  for (const Comment &comment : corpus.comments()) {
    ++local.comments;
    try {
      std::vector<CausalRelation> relations = ExtractComment(comment, lexicon);
      std::move(relations.begin(), relations.end(), std::back_inserter(out));
    } catch (const std::exception &e) {
      local.failures.emplace_back(comment.comment_id, e.what());
    }
  }
  if (report != nullptr) *report = std::move(local);
  return out;
}

std::string RelationsToJson(std::span<const CausalRelation> relations,
                            bool compact) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CausalRelation &r : relations) {
    nlohmann::ordered_json item;
    item["utterance"] = r.utterance;
    item["cause"] = r.cause;
    item["effect"] = r.effect;
    if (!compact) {
      item["trigger"] = LexicalUnitLabel(r.trigger.unit);
      item["commentId"] = r.comment_id;
      item["relationId"] = r.relation_id;
      item["commenterId"] = r.commenter_id;
      item["voice"] = VoiceName(r.trigger.voice);
      if (r.pronominal) item["pronominal"] = true;
    }
    list.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["causalRelations"] = std::move(list);
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace causemap
