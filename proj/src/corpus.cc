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

#include "causemap/corpus.h"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

namespace causemap {

using nlohmann::json;

std::string_view ReasonCode(RejectReason reason) {
  switch (reason) {
    case RejectReason::kEmptyLine: return "empty_line";
    case RejectReason::kInvalidUtf8: return "invalid_utf8";
    case RejectReason::kMalformedJson: return "malformed_json";
    case RejectReason::kUnknownKind: return "unknown_kind";
    case RejectReason::kMissingField: return "missing_field";
    case RejectReason::kInvalidField: return "invalid_field";
    case RejectReason::kInvalidTimestamp: return "invalid_timestamp";
    case RejectReason::kEmptyId: return "empty_id";
    case RejectReason::kEmptySection: return "empty_section";
    case RejectReason::kDuplicateArticle: return "duplicate_article";
    case RejectReason::kEmptyText: return "empty_text";
    case RejectReason::kDuplicateComment: return "duplicate_comment";
    case RejectReason::kOrphanComment: return "orphan_comment";
    case RejectReason::kCapExceeded: return "cap_exceeded";
    case RejectReason::kOrphanParent: return "orphan_parent";
    case RejectReason::kParentArticleMismatch:
      return "parent_article_mismatch";
  }
  return "unknown";
}

std::map<std::string, size_t> IngestReport::CountsByReason() const {
  std::map<std::string, size_t> counts;
  for (const Rejection &r : rejections) ++counts[std::string(ReasonCode(r.reason))];
  return counts;
}

namespace {

// Field accessors return nullopt with |*error| set on failure.
std::optional<std::string> GetString(const json &obj, const char *key,
                                     RejectReason *error) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    *error = RejectReason::kMissingField;
    return std::nullopt;
  }
  if (!it->is_string()) {
    *error = RejectReason::kInvalidField;
    return std::nullopt;
  }
  return it->get<std::string>();
}

std::optional<Timestamp> GetTimestamp(const json &obj, const char *key,
                                      RejectReason *error) {
  auto s = GetString(obj, key, error);
  if (!s) return std::nullopt;
  auto ts = ParseTimestamp(*s);
  if (!ts) *error = RejectReason::kInvalidTimestamp;
  return ts;
}

std::variant<Record, RejectReason> ParseArticle(const json &obj) {
  RejectReason err{};
  Article a;
  auto id = GetString(obj, "article_id", &err);
  if (!id) return err;
  if (TrimWhitespace(*id).empty()) return RejectReason::kEmptyId;
  a.article_id = std::move(*id);
  // url and title are informational; absent means empty.
  for (auto [key, field] : {std::pair{"url", &a.url},
                            std::pair{"title", &a.title}}) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) continue;
    if (!it->is_string()) return RejectReason::kInvalidField;
    *field = it->get<std::string>();
  }
  auto sp = obj.find("section_path");
  if (sp == obj.end() || sp->is_null()) return RejectReason::kMissingField;
  if (!sp->is_array()) return RejectReason::kInvalidField;
  for (const json &s : *sp) {
    if (!s.is_string()) return RejectReason::kInvalidField;
    a.section_path.push_back(s.get<std::string>());
  }
  auto ts = GetTimestamp(obj, "published_at", &err);
  if (!ts) return err;
  a.published_at = *ts;
  return Record{ArticleRecord{std::move(a)}};
}

std::variant<Record, RejectReason> ParseComment(const json &obj) {
  RejectReason err{};
  Comment c;
  auto id = GetString(obj, "comment_id", &err);
  if (!id) return err;
  auto article = GetString(obj, "article_id", &err);
  if (!article) return err;
  auto commenter = GetString(obj, "commenter_id", &err);
  if (!commenter) return err;
  if (TrimWhitespace(*id).empty() || TrimWhitespace(*article).empty() ||
      TrimWhitespace(*commenter).empty()) {
    return RejectReason::kEmptyId;
  }
  c.comment_id = std::move(*id);
  c.article_id = std::move(*article);
  c.commenter_id = std::move(*commenter);
  auto parent = obj.find("parent_comment_id");
  if (parent != obj.end() && !parent->is_null()) {
    if (!parent->is_string()) return RejectReason::kInvalidField;
    std::string p = parent->get<std::string>();
    if (TrimWhitespace(p).empty()) return RejectReason::kEmptyId;
    c.parent_comment_id = std::move(p);
  }
  auto ts = GetTimestamp(obj, "posted_at", &err);
  if (!ts) return err;
  c.posted_at = *ts;
  auto text = GetString(obj, "text", &err);
  if (!text) return err;
  c.text = std::move(*text);
  return Record{CommentRecord{std::move(c)}};
}

bool CanonicalLess(const Comment &a, const Comment &b) {
  return std::tie(a.article_id, a.posted_at, a.comment_id) <
         std::tie(b.article_id, b.posted_at, b.comment_id);
}

}  // namespace

std::variant<Record, RejectReason> ParseRecord(std::string_view line) {
  if (TrimWhitespace(line).empty()) return RejectReason::kEmptyLine;
  if (!IsValidUtf8(line)) return RejectReason::kInvalidUtf8;
  json obj = json::parse(line.begin(), line.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    return RejectReason::kMalformedJson;
  }
  auto kind = obj.find("kind");
  if (kind == obj.end() || !kind->is_string()) {
    return RejectReason::kUnknownKind;
  }
  const std::string &k = kind->get_ref<const std::string &>();
  if (k == "article") return ParseArticle(obj);
  if (k == "comment") return ParseComment(obj);
  return RejectReason::kUnknownKind;
}

ValidationResult ValidateRecord(const Record &record, const Corpus &state) {
  if (const auto *ar = std::get_if<ArticleRecord>(&record)) {
    const Article &a = ar->article;
    if (TrimWhitespace(a.article_id).empty()) return RejectReason::kEmptyId;
    if (a.section_path.empty()) return RejectReason::kEmptySection;
    if (state.articles_.count(a.article_id)) {
      return RejectReason::kDuplicateArticle;
    }
    return std::nullopt;
  }
  const Comment &c = std::get<CommentRecord>(record).comment;
  if (TrimWhitespace(c.comment_id).empty()) return RejectReason::kEmptyId;
  if (TrimWhitespace(c.text).empty()) return RejectReason::kEmptyText;
  if (state.comment_index_.count(c.comment_id)) {
    return RejectReason::kDuplicateComment;
  }
  if (!state.articles_.count(c.article_id)) {
    return RejectReason::kOrphanComment;
  }
  return std::nullopt;
}

const Article *Corpus::FindArticle(std::string_view article_id) const {
  auto it = articles_.find(std::string(article_id));
  return it == articles_.end() ? nullptr : &it->second;
}

const Comment *Corpus::FindComment(std::string_view comment_id) const {
  auto it = comment_index_.find(std::string(comment_id));
  return it == comment_index_.end() ? nullptr : &comments_[it->second];
}

bool Corpus::HasCommenter(std::string_view commenter_id) const {
  return comments_per_commenter_.find(commenter_id) !=
         comments_per_commenter_.end();
}

size_t Corpus::CommentCount(std::string_view commenter_id) const {
  auto it = comments_per_commenter_.find(commenter_id);
  return it == comments_per_commenter_.end() ? 0 : it->second;
}

void Corpus::Finalize() {
  std::sort(comments_.begin(), comments_.end(), CanonicalLess);
  comment_index_.clear();
  comments_per_commenter_.clear();
  for (size_t i = 0; i < comments_.size(); ++i) {
    comment_index_[comments_[i].comment_id] = i;
    ++comments_per_commenter_[comments_[i].commenter_id];
  }
  commenters_.clear();
  for (const auto &[id, n] : comments_per_commenter_) commenters_.push_back(id);
}

Corpus Corpus::FromParts(std::vector<Article> articles,
                         std::vector<Comment> comments, IngestReport report) {
  Corpus corpus;
  for (Article &a : articles) {
    if (a.article_id.empty() || a.section_path.empty() ||
        !corpus.articles_.emplace(a.article_id, a).second) {
      throw DataError("invalid or duplicate article: " + a.article_id);
    }
  }
  corpus.comments_ = std::move(comments);
  corpus.report_ = std::move(report);
  corpus.Finalize();
  if (corpus.comment_index_.size() != corpus.comments_.size()) {
    throw DataError("duplicate comment id");
  }
  for (const Comment &c : corpus.comments_) {
    if (!corpus.articles_.count(c.article_id)) {
      throw DataError("comment " + c.comment_id + " has unknown article");
    }
    if (c.parent_comment_id) {
      const Comment *p = corpus.FindComment(*c.parent_comment_id);
      if (p == nullptr || p->article_id != c.article_id) {
        throw DataError("comment " + c.comment_id + " has invalid parent");
      }
    }
  }
  return corpus;
}

Corpus IngestJsonl(std::istream &input, const IngestConfig &config) {
  if (!input.good()) throw DataError("input stream is not readable");

  struct Pending {
    size_t line;
    Comment comment;
  };
  Corpus corpus;
  IngestReport &report = corpus.report_;
  std::vector<std::pair<size_t, Record>> records;
  auto reject = [&report](size_t line, RejectReason reason) {
    report.rejections.push_back({line, reason});
  };

  std::string line;
  size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto parsed = ParseRecord(line);
    if (auto *reason = std::get_if<RejectReason>(&parsed)) {
      reject(line_no, *reason);
    } else {
      records.emplace_back(line_no, std::move(std::get<Record>(parsed)));
    }
  }
  if (input.bad()) throw DataError("error while reading input stream");
  report.lines = line_no;

  // Articles first so comment order in the stream does not matter.
  for (auto &[ln, record] : records) {
    if (!std::holds_alternative<ArticleRecord>(record)) continue;
    if (auto reason = ValidateRecord(record, corpus)) {
      reject(ln, *reason);
      continue;
    }
    Article &a = std::get<ArticleRecord>(record).article;
    corpus.articles_.emplace(a.article_id, std::move(a));
  }

  std::vector<Pending> pending;
  for (auto &[ln, record] : records) {
    if (!std::holds_alternative<CommentRecord>(record)) continue;
    if (auto reason = ValidateRecord(record, corpus)) {
      reject(ln, *reason);
      continue;
    }
    Comment &c = std::get<CommentRecord>(record).comment;
    corpus.comment_index_.emplace(c.comment_id, pending.size());
    pending.push_back({ln, std::move(c)});
  }

  std::sort(pending.begin(), pending.end(),
            [](const Pending &a, const Pending &b) {
              return CanonicalLess(a.comment, b.comment);
            });
  std::vector<Pending> kept;
  size_t run = 0;
  std::string article;
  for (size_t i = 0; i < pending.size(); ++i) {
    if (i > 0 && pending[i].comment.article_id == article) {
      ++run;
    } else {
      run = 0;
      article = pending[i].comment.article_id;
    }
    if (run >= config.max_comments_per_article) {
      reject(pending[i].line, RejectReason::kCapExceeded);
    } else {
      kept.push_back(std::move(pending[i]));
    }
  }

  // Reply links must resolve to a retained comment on the same article.
  // Dropping one comment can orphan its replies, so iterate to a fixpoint.
  std::unordered_map<std::string, const Pending *> by_id;
  std::vector<bool> alive(kept.size(), true);
  for (const Pending &p : kept) by_id.emplace(p.comment.comment_id, &p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      if (!alive[i] || !kept[i].comment.parent_comment_id) continue;
      auto it = by_id.find(*kept[i].comment.parent_comment_id);
      std::optional<RejectReason> reason;
      if (it == by_id.end()) {
        reason = RejectReason::kOrphanParent;
      } else if (it->second->comment.article_id != kept[i].comment.article_id) {
        reason = RejectReason::kParentArticleMismatch;
      }
      if (reason) {
        reject(kept[i].line, *reason);
        alive[i] = false;
        by_id.erase(kept[i].comment.comment_id);
        changed = true;
      }
    }
  }

  corpus.comments_.clear();
  for (size_t i = 0; i < kept.size(); ++i) {
    if (alive[i]) corpus.comments_.push_back(std::move(kept[i].comment));
  }
  corpus.Finalize();

  std::sort(report.rejections.begin(), report.rejections.end(),
            [](const Rejection &a, const Rejection &b) { return a.line < b.line; });
  report.rejected = report.rejections.size();
  report.accepted = report.lines - report.rejected;
  return corpus;
}

std::vector<const Comment *> IterComments(const Corpus &corpus,
                                          const CommentFilter &filter) {
  std::vector<const Comment *> out;
  for (const Comment &c : corpus.comments()) {
    if (filter.commenter_id && c.commenter_id != *filter.commenter_id) continue;
    if (filter.article_id && c.article_id != *filter.article_id) continue;
    if (filter.from && c.posted_at < *filter.from) continue;
    if (filter.until && !(c.posted_at < *filter.until)) continue;
    out.push_back(&c);
  }
  return out;
}

}  // namespace causemap
