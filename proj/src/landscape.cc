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

#include "causemap/landscape.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "causemap/base.h"

namespace causemap {

namespace {

bool IsAsciiAlnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

// Bytes of multi-byte UTF-8 sequences count as word characters, so that a
// query never matches inside "nuclear powerés".
bool IsWordByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return IsAsciiAlnum(u) || u >= 0x80;
}

const std::string &SpanOf(const CausalRelation &r, Role role) {
  return role == Role::kCause ? r.cause : r.effect;
}

void DefaultLabels(BeliefGraph *graph) {
  for (const auto &[key, s] : graph->nodes) graph->labels[key] = s.display_text;
}

}  // namespace

std::string_view RoleName(Role role) {
  return role == Role::kCause ? "CAUSE" : "EFFECT";
}

std::optional<Role> ParseRole(std::string_view text) {
  std::string lower = AsciiLower(text);
  if (lower == "cause") return Role::kCause;
  if (lower == "effect") return Role::kEffect;
  return std::nullopt;
}

std::string StatementKey(const LemmaSet &lemmas) {
  std::string key;
  for (const std::string &lemma : lemmas) {
    if (!key.empty()) key += kKeySeparator;
    key += lemma;
  }
  return key;
}

LemmaSet SpanLemmas(std::string_view span, const Lexicon &lexicon) {
  std::vector<Token> tokens = AnalyzeTokens(span, lexicon);
  return ContentLemmas(tokens, lexicon);
}

StatementMap BuildStatements(std::span<const CausalRelation> relations,
                             Role role, size_t *dropped,
                             const Lexicon &lexicon) {
  StatementMap out;
  size_t skipped = 0;
  // Identical spans are frequent; analyze each once.
  std::unordered_map<std::string, LemmaSet> cache;
  for (const CausalRelation &r : relations) {
    const std::string &span = SpanOf(r, role);
    auto it = cache.find(span);
    if (it == cache.end()) it = cache.emplace(span, SpanLemmas(span, lexicon)).first;
    const LemmaSet &lemmas = it->second;
    if (lemmas.empty()) {
      ++skipped;
      continue;
    }
    std::string key = StatementKey(lemmas);
    auto [pos, inserted] = out.try_emplace(key);
    Statement &s = pos->second;
    if (inserted) {
      s.key = key;
      s.role = role;
      s.display_text = span;
      s.lemmas = lemmas;
    }
    if (!r.commenter_id.empty()) s.commenter_ids.insert(r.commenter_id);
    s.relation_ids.insert(r.relation_id);
    s.frequency = s.relation_ids.size();
  }
  if (dropped != nullptr) *dropped = skipped;
  return out;
}

size_t SharedLemmaWeight(const LemmaSet &a, const LemmaSet &b) {
  size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::string_view NodeColorName(NodeColor color) {
  switch (color) {
    case NodeColor::kNeutral: return "NEUTRAL";
    case NodeColor::kUserA: return "USER_A";
    case NodeColor::kUserB: return "USER_B";
    case NodeColor::kShared: return "SHARED";
  }
  return "";
}

std::optional<NodeColor> ParseNodeColor(std::string_view text) {
  for (NodeColor c : {NodeColor::kNeutral, NodeColor::kUserA, NodeColor::kUserB,
                      NodeColor::kShared}) {
    if (NodeColorName(c) == text) return c;
  }
  return std::nullopt;
}

BeliefGraph BuildGraph(StatementMap statements, size_t min_weight) {
  if (min_weight == 0) throw ArgumentError("min_weight must be positive");
  BeliefGraph graph;
  graph.nodes = std::move(statements);

  // Inverted index lemma -> node ordinals; a pair's weight is the number of
  // posting lists it shares.
  std::vector<const Statement *> nodes;
  nodes.reserve(graph.nodes.size());
  std::map<std::string_view, std::vector<uint32_t>> postings;
  for (const auto &[key, s] : graph.nodes) {
    auto ordinal = static_cast<uint32_t>(nodes.size());
    nodes.push_back(&s);
    for (const std::string &lemma : s.lemmas) postings[lemma].push_back(ordinal);
  }
  std::vector<size_t> counts(nodes.size(), 0);
  std::vector<uint32_t> touched;
  for (uint32_t i = 0; i < nodes.size(); ++i) {
    touched.clear();
    for (const std::string &lemma : nodes[i]->lemmas) {
      const std::vector<uint32_t> &list = postings[lemma];
      // Lists are ascending; only partners after i are counted.
      auto it = std::upper_bound(list.begin(), list.end(), i);
      for (; it != list.end(); ++it) {
        if (counts[*it]++ == 0) touched.push_back(*it);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (uint32_t j : touched) {
      if (counts[j] >= min_weight) {
        graph.edges.push_back(Edge{nodes[i]->key, nodes[j]->key, counts[j]});
      }
      counts[j] = 0;
    }
  }
  DefaultLabels(&graph);
  return graph;
}

StatementMap Subsample(const StatementMap &statements, double fraction,
                       uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ArgumentError("sample fraction must be in (0, 1]");
  }
  if (fraction == 1.0) return statements;
  std::vector<const std::string *> keys;
  keys.reserve(statements.size());
  for (const auto &[key, s] : statements) keys.push_back(&key);
  // The epsilon keeps 0.1 * 30 from rounding up to 4.
  double wanted = std::ceil(fraction * static_cast<double>(keys.size()) - 1e-9);
  size_t k = std::min(keys.size(), static_cast<size_t>(std::max(0.0, wanted)));
  std::mt19937_64 rng(seed);
  for (size_t i = keys.size(); i > 1; --i) {
    size_t j = UniformIndex(rng, i);
    std::swap(keys[i - 1], keys[j]);
  }
  StatementMap out;
  for (size_t i = 0; i < k; ++i) out.emplace(*keys[i], statements.at(*keys[i]));
  return out;
}

std::map<std::string, size_t> LemmaFrequencies(const StatementMap &statements) {
  std::map<std::string, size_t> out;
  for (const auto &[key, s] : statements) {
    for (const std::string &lemma : s.lemmas) out[lemma] += s.frequency;
  }
  return out;
}

std::map<std::string, std::string> MacroLabels(
    const BeliefGraph &graph, const std::map<std::string, size_t> &frequencies) {
  std::map<std::string, std::string> labels;
  for (const auto &[key, s] : graph.nodes) {
    const std::string *best = nullptr;
    size_t best_count = 0;
    // Lemmas iterate in ascending order, so a strict comparison keeps the
    // smallest lemma among equals.
    for (const std::string &lemma : s.lemmas) {
      auto it = frequencies.find(lemma);
      size_t count = it == frequencies.end() ? 0 : it->second;
      if (best == nullptr || count > best_count) {
        best = &lemma;
        best_count = count;
      }
    }
    labels[key] = best != nullptr ? *best : s.display_text;
  }
  return labels;
}

std::string NormalizeQuery(std::string_view query) {
  std::string normalized = NormalizeSpan(Tokenize(query));
  if (normalized.empty()) throw ArgumentError("empty cause query");
  return normalized;
}

bool ContainsAtTokenBoundary(std::string_view text, std::string_view query) {
  if (query.empty()) return false;
  for (size_t pos = text.find(query); pos != std::string_view::npos;
       pos = text.find(query, pos + 1)) {
    size_t end = pos + query.size();
    bool left_ok = pos == 0 || !IsWordByte(text[pos - 1]) ||
                   !IsWordByte(query.front());
    bool right_ok = end == text.size() || !IsWordByte(text[end]) ||
                    !IsWordByte(query.back());
    if (left_ok && right_ok) return true;
  }
  return false;
}

BeliefGraph MicroView(std::span<const CausalRelation> relations,
                      std::string_view cause_query, size_t min_weight,
                      const Lexicon &lexicon) {
  std::string query = NormalizeQuery(cause_query);
  std::vector<CausalRelation> selected;
  for (const CausalRelation &r : relations) {
    if (ContainsAtTokenBoundary(r.cause, query)) selected.push_back(r);
  }
  return BuildGraph(BuildStatements(selected, Role::kEffect, nullptr, lexicon),
                    min_weight);
}

BeliefGraph OverlayUsers(std::span<const CausalRelation> relations,
                         const Corpus &corpus, std::string_view user_a,
                         std::string_view user_b, Role role,
                         size_t min_weight, const Lexicon &lexicon) {
  for (std::string_view user : {user_a, user_b}) {
    if (!corpus.HasCommenter(user)) {
      throw ArgumentError("unknown commenter: " + std::string(user));
    }
  }
  if (user_a == user_b) throw ArgumentError("overlay needs two distinct users");
  std::vector<CausalRelation> selected;
  for (const CausalRelation &r : relations) {
    if (r.commenter_id == user_a || r.commenter_id == user_b) {
      selected.push_back(r);
    }
  }
  BeliefGraph graph = BuildGraph(
      BuildStatements(selected, role, nullptr, lexicon), min_weight);
  std::map<std::string, NodeColor> colors;
  for (const auto &[key, s] : graph.nodes) {
    bool a = s.commenter_ids.count(std::string(user_a)) > 0;
    bool b = s.commenter_ids.count(std::string(user_b)) > 0;
    colors[key] = a && b ? NodeColor::kShared
                  : a    ? NodeColor::kUserA
                         : NodeColor::kUserB;
  }
  graph.colors = std::move(colors);
  return graph;
}

std::vector<std::string> TopCommenters(
    const Corpus &corpus, std::span<const CausalRelation> relations, size_t k) {
  if (k == 0) throw ArgumentError("k must be positive");
  std::map<std::string, size_t, std::less<>> relation_counts;
  for (const CausalRelation &r : relations) ++relation_counts[r.commenter_id];
  struct Row {
    size_t relations;
    size_t comments;
    const std::string *key;
  };
  std::vector<Row> rows;
  for (const std::string &c : corpus.commenters()) {
    auto it = relation_counts.find(c);
    rows.push_back(Row{it == relation_counts.end() ? 0 : it->second,
                       corpus.CommentCount(c), &c});
  }
  std::sort(rows.begin(), rows.end(), [](const Row &x, const Row &y) {
    if (x.relations != y.relations) return x.relations > y.relations;
    if (x.comments != y.comments) return x.comments > y.comments;
    return *x.key < *y.key;
  });
  std::vector<std::string> out;
  for (size_t i = 0; i < rows.size() && i < k; ++i) out.push_back(*rows[i].key);
  return out;
}

}  // namespace causemap
