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

// Comment corpus: line-delimited ingestion, validation and canonical
// iteration.
//
// Each input line is one JSON record:
//
//   {"kind":"article","article_id":"a1","url":"...","title":"...",
//    "section_path":["environment","climate-change"],
//    "published_at":"2019-04-01T12:00:00Z"}
//   {"kind":"comment","comment_id":"c1","article_id":"a1",
//    "commenter_id":"u1","parent_comment_id":null,
//    "posted_at":"2019-04-01T13:00:00Z","text":"..."}
//
// Unknown fields are ignored. Malformed lines are rejected with a reason
// code and never abort the ingest. Records may appear in any order: articles
// are registered first, then comments are checked against them, capped per
// article in (posted_at, comment_id) order, and finally reply links are
// resolved against the retained set.

#ifndef CAUSEMAP_CORPUS_H_
#define CAUSEMAP_CORPUS_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "causemap/base.h"

namespace causemap {

struct Article {
  std::string article_id;
  std::string url;
  std::string title;
  std::vector<std::string> section_path;
  Timestamp published_at;

  friend bool operator==(const Article &, const Article &) = default;
};

struct Comment {
  std::string comment_id;
  std::string article_id;
  // Pseudonymous key. Display names are never stored.
  std::string commenter_id;
  std::optional<std::string> parent_comment_id;
  Timestamp posted_at;
  std::string text;

  friend bool operator==(const Comment &, const Comment &) = default;
};

enum class RejectReason {
  kEmptyLine,
  kInvalidUtf8,
  kMalformedJson,
  kUnknownKind,
  kMissingField,
  kInvalidField,
  kInvalidTimestamp,
  kEmptyId,
  kEmptySection,
  kDuplicateArticle,
  kEmptyText,
  kDuplicateComment,
  kOrphanComment,
  kCapExceeded,
  kOrphanParent,
  kParentArticleMismatch,
};

// Machine-readable code, e.g. "orphan_comment".
std::string_view ReasonCode(RejectReason reason);

struct Rejection {
  size_t line = 0;  // 1-based input line
  RejectReason reason;
};

struct IngestReport {
  size_t lines = 0;
  size_t accepted = 0;
  size_t rejected = 0;
  std::vector<Rejection> rejections;  // sorted by line

  // Rejection counts keyed by reason code.
  std::map<std::string, size_t> CountsByReason() const;
};

struct IngestConfig {
  size_t max_comments_per_article = 200;
};

// One parsed input line.
struct ArticleRecord {
  Article article;
};
struct CommentRecord {
  Comment comment;
};
using Record = std::variant<ArticleRecord, CommentRecord>;

// Parses one line into a record. Field-level problems are returned as the
// rejection reason.
std::variant<Record, RejectReason> ParseRecord(std::string_view line);

class Corpus;

// Outcome of validating one record: nullopt means ok.
using ValidationResult = std::optional<RejectReason>;

// Validates a parsed record against the corpus state accumulated so far.
// Articles must have a unique non-empty id and a non-empty section path.
// Comments need a non-blank text, a unique id and a known article. Reply
// links and the per-article cap are checked by IngestJsonl after all
// records are seen.
ValidationResult ValidateRecord(const Record &record, const Corpus &state);

// Immutable once built; safe to share between threads.
class Corpus {
 public:
  Corpus() = default;

  const std::map<std::string, Article> &articles() const { return articles_; }

  // All comments in canonical (article_id, posted_at, comment_id) order.
  std::span<const Comment> comments() const { return comments_; }

  const Article *FindArticle(std::string_view article_id) const;
  const Comment *FindComment(std::string_view comment_id) const;

  // Sorted, unique.
  const std::vector<std::string> &commenters() const { return commenters_; }
  bool HasCommenter(std::string_view commenter_id) const;
  size_t CommentCount(std::string_view commenter_id) const;

  const IngestReport &report() const { return report_; }

  // Assembles a corpus from already validated parts (deserialization).
  // Throws DataError if referential integrity does not hold.
  static Corpus FromParts(std::vector<Article> articles,
                          std::vector<Comment> comments, IngestReport report);

  friend bool operator==(const Corpus &a, const Corpus &b) {
    return a.articles_ == b.articles_ && a.comments_ == b.comments_;
  }

 private:
  friend Corpus IngestJsonl(std::istream &input, const IngestConfig &config);
  friend ValidationResult ValidateRecord(const Record &, const Corpus &);

  void Finalize();

  std::map<std::string, Article> articles_;
  std::vector<Comment> comments_;
  std::unordered_map<std::string, size_t> comment_index_;
  std::vector<std::string> commenters_;
  std::map<std::string, size_t, std::less<>> comments_per_commenter_;
  IngestReport report_;
};

// Reads line-delimited records. Throws DataError if the stream cannot be
// read; bad lines are counted in the report instead.
Corpus IngestJsonl(std::istream &input, const IngestConfig &config = {});

struct CommentFilter {
  std::optional<std::string> commenter_id;
  std::optional<std::string> article_id;
  std::optional<Timestamp> from;  // inclusive
  std::optional<Timestamp> until;  // exclusive
};

// Comments matching |filter| in canonical order.
std::vector<const Comment *> IterComments(const Corpus &corpus,
                                          const CommentFilter &filter = {});

}  // namespace causemap

#endif  // CAUSEMAP_CORPUS_H_
