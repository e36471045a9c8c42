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

// Snapshot files are CBOR maps:
//   format, formatVersion, buildInfo, articles, comments, report, relations.

#include <fstream>
#include <iterator>

#include "canonical_json.h"
#include "causemap/base.h"
#include "causemap/observatory.h"
#include "embedded_data.h"
#include "json.hpp"

namespace causemap {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "causemap-snapshot";
constexpr int kFormatVersion = 1;

json ArticleToJson(const Article &a) {
  return {{"articleId", a.article_id},
          {"url", a.url},
          {"title", a.title},
          {"sectionPath", a.section_path},
          {"publishedAt", FormatTimestamp(a.published_at)}};
}

json CommentToJson(const Comment &c) {
  json j = {{"commentId", c.comment_id},
            {"articleId", c.article_id},
            {"commenterId", c.commenter_id},
            {"parentCommentId", nullptr},
            {"postedAt", FormatTimestamp(c.posted_at)},
            {"text", c.text}};
  if (c.parent_comment_id) j["parentCommentId"] = *c.parent_comment_id;
  return j;
}

json RelationToJson(const CausalRelation &r) {
  return {{"relationId", r.relation_id},
          {"commentId", r.comment_id},
          {"commenterId", r.commenter_id},
          {"utterance", r.utterance},
          {"cause", r.cause},
          {"effect", r.effect},
          {"unit", LexicalUnitName(r.trigger.unit)},
          {"begin", r.trigger.begin},
          {"end", r.trigger.end},
          {"voice", VoiceName(r.trigger.voice)},
          {"pronominal", r.pronominal}};
}

Timestamp TimestampFromJson(const json &j) {
  auto ts = ParseTimestamp(j.get<std::string>());
  if (!ts) throw DataError("bad timestamp in snapshot");
  return *ts;
}

Article ArticleFromJson(const json &j) {
  Article a;
  a.article_id = j.at("articleId").get<std::string>();
  a.url = j.at("url").get<std::string>();
  a.title = j.at("title").get<std::string>();
  a.section_path = j.at("sectionPath").get<std::vector<std::string>>();
  a.published_at = TimestampFromJson(j.at("publishedAt"));
  return a;
}

Comment CommentFromJson(const json &j) {
  Comment c;
  c.comment_id = j.at("commentId").get<std::string>();
  c.article_id = j.at("articleId").get<std::string>();
  c.commenter_id = j.at("commenterId").get<std::string>();
  if (!j.at("parentCommentId").is_null()) {
    c.parent_comment_id = j.at("parentCommentId").get<std::string>();
  }
  c.posted_at = TimestampFromJson(j.at("postedAt"));
  c.text = j.at("text").get<std::string>();
  return c;
}

Voice ParseVoice(std::string_view name) {
  for (Voice v : {Voice::kActive, Voice::kPassive, Voice::kNa}) {
    if (VoiceName(v) == name) return v;
  }
  throw DataError("bad voice in snapshot");
}

CausalRelation RelationFromJson(const json &j) {
  CausalRelation r;
  r.relation_id = j.at("relationId").get<std::string>();
  r.comment_id = j.at("commentId").get<std::string>();
  r.commenter_id = j.at("commenterId").get<std::string>();
  r.utterance = j.at("utterance").get<std::string>();
  r.cause = j.at("cause").get<std::string>();
  r.effect = j.at("effect").get<std::string>();
  auto unit = ParseLexicalUnit(j.at("unit").get<std::string>());
  if (!unit) throw DataError("bad lexical unit in snapshot");
  r.trigger.unit = *unit;
  r.trigger.begin = j.at("begin").get<size_t>();
  r.trigger.end = j.at("end").get<size_t>();
  r.trigger.voice = ParseVoice(j.at("voice").get<std::string>());
  r.pronominal = j.at("pronominal").get<bool>();
  return r;
}

json ReportToJson(const IngestReport &report) {
  json rejections = json::array();
  for (const Rejection &r : report.rejections) {
    rejections.push_back({{"line", r.line}, {"reason", ReasonCode(r.reason)}});
  }
  return {{"lines", report.lines},
          {"accepted", report.accepted},
          {"rejected", report.rejected},
          {"rejections", rejections}};
}

IngestReport ReportFromJson(const json &j) {
  IngestReport report;
  report.lines = j.at("lines").get<size_t>();
  report.accepted = j.at("accepted").get<size_t>();
  report.rejected = j.at("rejected").get<size_t>();
  for (const json &r : j.at("rejections")) {
    std::string code = r.at("reason").get<std::string>();
    std::optional<RejectReason> reason;
    for (int i = 0; i <= static_cast<int>(RejectReason::kParentArticleMismatch);
         ++i) {
      if (ReasonCode(static_cast<RejectReason>(i)) == code) {
        reason = static_cast<RejectReason>(i);
      }
    }
    if (!reason) throw DataError("bad rejection reason in snapshot");
    report.rejections.push_back({r.at("line").get<size_t>(), *reason});
  }
  return report;
}

json ContentJson(const Snapshot &s) {
  json articles = json::array();
  for (const auto &[id, a] : s.corpus.articles()) articles.push_back(ArticleToJson(a));
  json comments = json::array();
  for (const Comment &c : s.corpus.comments()) comments.push_back(CommentToJson(c));
  json relations = json::array();
  for (const CausalRelation &r : s.relations) relations.push_back(RelationToJson(r));
  return {{"articles", std::move(articles)},
          {"comments", std::move(comments)},
          {"relations", std::move(relations)}};
}

std::string Digest(const Snapshot &s, const json &content) {
  json bound = {
      {"version", s.build_info.version},
      {"maxCommentsPerArticle", s.build_info.max_comments_per_article},
      {"lexicon", Hex64(Fnv1a64(embedded::LexiconData()))},
      {"exceptions", Hex64(Fnv1a64(embedded::LemmaExceptionsData()))},
      {"stopVerbs", Hex64(Fnv1a64(embedded::StopVerbsData()))},
      {"content", Hex64(Fnv1a64(internal::CanonicalDump(content)))}};
  return Hex64(Fnv1a64(internal::CanonicalDump(bound)));
}

}  // namespace

Snapshot MakeSnapshot(Corpus corpus, const IngestConfig &config,
                      Timestamp created_at) {
  Snapshot s;
  s.relations = ExtractCorpus(corpus);
  s.corpus = std::move(corpus);
  s.build_info.version = std::string(kVersion);
  s.build_info.created_at = created_at;
  s.build_info.max_comments_per_article = config.max_comments_per_article;
  s.build_info.config_digest = SnapshotDigest(s);
  return s;
}

std::string SnapshotDigest(const Snapshot &snapshot) {
  return Digest(snapshot, ContentJson(snapshot));
}

void SaveSnapshot(const Snapshot &s, std::ostream &out) {
  json doc = ContentJson(s);
  doc["format"] = kFormat;
  doc["formatVersion"] = kFormatVersion;
  doc["buildInfo"] = {
      {"version", s.build_info.version},
      {"configDigest", s.build_info.config_digest},
      {"createdAt", FormatTimestamp(s.build_info.created_at)},
      {"maxCommentsPerArticle", s.build_info.max_comments_per_article}};
  doc["report"] = ReportToJson(s.corpus.report());
  std::vector<uint8_t> bytes = json::to_cbor(doc);
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("cannot write snapshot");
}

Snapshot LoadSnapshot(std::istream &in) {
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  Snapshot s;
  try {
    json doc = json::from_cbor(bytes);
    if (doc.value("format", "") != kFormat) throw DataError("not a snapshot file");
    if (doc.at("formatVersion").get<int>() != kFormatVersion) {
      throw DataError("unsupported snapshot format version");
    }
    std::vector<Article> articles;
    for (const json &a : doc.at("articles")) articles.push_back(ArticleFromJson(a));
    std::vector<Comment> comments;
    for (const json &c : doc.at("comments")) comments.push_back(CommentFromJson(c));
    s.corpus = Corpus::FromParts(std::move(articles), std::move(comments),
                                 ReportFromJson(doc.at("report")));
    for (const json &r : doc.at("relations")) {
      s.relations.push_back(RelationFromJson(r));
    }
    const json &info = doc.at("buildInfo");
    s.build_info.version = info.at("version").get<std::string>();
    s.build_info.config_digest = info.at("configDigest").get<std::string>();
    s.build_info.created_at = TimestampFromJson(info.at("createdAt"));
    s.build_info.max_comments_per_article =
        info.at("maxCommentsPerArticle").get<size_t>();
  } catch (const json::exception &e) {
    throw DataError(std::string("corrupt snapshot: ") + e.what());
  }
  if (SnapshotDigest(s) != s.build_info.config_digest) {
    throw DataError("snapshot digest mismatch: relations do not belong to "
                    "this corpus or were built by a different version");
  }
  return s;
}

void SaveSnapshotFile(const Snapshot &snapshot, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");
  SaveSnapshot(snapshot, out);
}

Snapshot LoadSnapshotFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return LoadSnapshot(in);
}

}  // namespace causemap
