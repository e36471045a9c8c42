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

// Belief graphs over cause or effect statements. A statement is identified
// by its set of content lemmas; two statements are linked with a weight
// equal to the number of lemmas they share.

#ifndef CAUSEMAP_LANDSCAPE_H_
#define CAUSEMAP_LANDSCAPE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causemap/corpus.h"
#include "causemap/framex.h"
#include "causemap/textproc.h"

namespace causemap {

enum class Role { kCause, kEffect };

std::string_view RoleName(Role role);  // "CAUSE", "EFFECT"
// Case-insensitive.
std::optional<Role> ParseRole(std::string_view text);

// U+241F SYMBOL FOR UNIT SEPARATOR, joins the lemmas of a statement key.
inline constexpr std::string_view kKeySeparator = "\xE2\x90\x9F";

struct Statement {
  std::string key;
  Role role = Role::kCause;
  // Span of the first contributing relation in input order.
  std::string display_text;
  LemmaSet lemmas;
  std::set<std::string> commenter_ids;
  std::set<std::string> relation_ids;
  size_t frequency = 0;

  friend bool operator==(const Statement &, const Statement &) = default;
};

using StatementMap = std::map<std::string, Statement>;

std::string StatementKey(const LemmaSet &lemmas);

// Content lemmas of a normalized cause or effect span.
LemmaSet SpanLemmas(std::string_view span,
                    const Lexicon &lexicon = Lexicon::Default());

// One statement per distinct lemma set. Relations whose span has no
// content lemma are skipped and counted in |dropped|.
StatementMap BuildStatements(std::span<const CausalRelation> relations,
                             Role role, size_t *dropped = nullptr,
                             const Lexicon &lexicon = Lexicon::Default());

size_t SharedLemmaWeight(const LemmaSet &a, const LemmaSet &b);
inline size_t SharedLemmaWeight(const Statement &a, const Statement &b) {
  return SharedLemmaWeight(a.lemmas, b.lemmas);
}

enum class NodeColor { kNeutral, kUserA, kUserB, kShared };

std::string_view NodeColorName(NodeColor color);  // "USER_A", ...
std::optional<NodeColor> ParseNodeColor(std::string_view text);

struct Edge {
  std::string source;  // source < target
  std::string target;
  size_t weight = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct BeliefGraph {
  StatementMap nodes;
  std::vector<Edge> edges;  // sorted by (source, target)
  std::map<std::string, std::string> labels;
  std::optional<std::map<std::string, NodeColor>> colors;
};

// Edges between all pairs sharing at least |min_weight| lemmas. Labels
// default to the display text.
BeliefGraph BuildGraph(StatementMap statements, size_t min_weight = 1);

// ceil(fraction * N) statements chosen by a seeded shuffle of the sorted
// keys. Throws ArgumentError unless 0 < fraction <= 1.
StatementMap Subsample(const StatementMap &statements, double fraction,
                       uint64_t seed);

// Summed statement frequency per lemma.
std::map<std::string, size_t> LemmaFrequencies(const StatementMap &statements);

// Per node, its lemma with the highest frequency; ties go to the
// lexicographically smallest lemma.
std::map<std::string, std::string> MacroLabels(
    const BeliefGraph &graph, const std::map<std::string, size_t> &frequencies);

// Normalizes a query the way spans are normalized. Throws ArgumentError if
// nothing is left.
std::string NormalizeQuery(std::string_view query);

// True if |query| occurs in |text| with no letter or digit directly before
// or after it.
bool ContainsAtTokenBoundary(std::string_view text, std::string_view query);

// Effect statements of relations whose cause contains the query. Node
// labels are the full display text.
BeliefGraph MicroView(std::span<const CausalRelation> relations,
                      std::string_view cause_query, size_t min_weight = 1,
                      const Lexicon &lexicon = Lexicon::Default());

// Statements of two commenters, colored by who uttered them. Throws
// ArgumentError for unknown or identical users.
BeliefGraph OverlayUsers(std::span<const CausalRelation> relations,
                         const Corpus &corpus, std::string_view user_a,
                         std::string_view user_b, Role role,
                         size_t min_weight = 1,
                         const Lexicon &lexicon = Lexicon::Default());

// Commenters by relation count, then comment count (both descending), then
// key. Throws ArgumentError if k is 0.
std::vector<std::string> TopCommenters(
    const Corpus &corpus, std::span<const CausalRelation> relations, size_t k);

}  // namespace causemap

#endif  // CAUSEMAP_LANDSCAPE_H_
