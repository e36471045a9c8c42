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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Runs the real command line tool for the end-to-end checks.

#include <sys/resource.h>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "causemap/base.h"
#include "causemap/framex.h"
#include "causemap/graphio.h"
#include "causemap/landscape.h"
#include "causemap/observatory.h"
#include "httplib.h"
#include "test_support.h"

namespace causemap {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Quote(const std::string &arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// Runs the causemap binary; returns its exit status and stdout.
std::pair<int, std::string> RunTool(const std::vector<std::string> &args) {
  std::string command = Quote(CAUSEMAP_CLI_PATH);
  for (const std::string &a : args) command += " " + Quote(a);
  command += " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[65536];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string OneCommentCorpus(const std::string &text) {
  return R"({"kind":"article","article_id":"a1","url":"https://news.example/a1","title":"t",)"
         R"("section_path":["environment","climate-change"],"published_at":"2019-04-01T12:00:00Z"})"
         "\n"
         R"({"kind":"comment","comment_id":"c1","article_id":"a1","commenter_id":"u1",)"
         R"("parent_comment_id":null,"posted_at":"2019-04-01T13:00:00Z","text":")" +
         text + "\"}\n";
}

constexpr std::string_view kRebellion =
    "Has anyone totted up the extra pollution on London streets emanating from "
    "traffic jams caused by Extinction Rebellion ?";

Outcome RelationReproduction() {
  const std::string expected =
      "{\"causalRelations\":[{\"utterance\":\"" + std::string(kRebellion) +
      "\",\"cause\":\"extinction rebellion\",\"effect\":\"traffic jams\"}]}";
  auto start = Clock::now();
  std::string in_process = RelationsToJson(ExtractText(kRebellion), true);
  double library_seconds = Seconds(start);

  std::string corpus = testing::TempPath("er_corpus.jsonl");
  std::string snap = testing::TempPath("er_corpus.snap");
  testing::WriteFile(corpus, OneCommentCorpus(std::string(kRebellion)));
  start = Clock::now();
  int ingest = RunTool({"ingest", "--in", corpus, "--out", snap}).first;
  auto [code, out] = RunTool({"extract", "--snapshot", snap, "--paper-shape"});
  double tool_seconds = Seconds(start);

  Outcome o;
  o.pass = in_process == expected && ingest == 0 && code == 0 &&
           out == expected + "\n" && tool_seconds < 1.0;
  std::ostringstream d;
  d << "library " << (in_process == expected ? "exact" : "MISMATCH") << " in "
    << library_seconds * 1e3 << " ms; tool ingest+extract "
    << (out == expected + "\n" ? "exact" : "MISMATCH") << " in " << tool_seconds << " s";
  o.detail = d.str();
  return o;
}

Outcome EarthquakeIllustration() {
  auto r = ExtractText("If such a small earthquake CAUSES problems, just imagine a big one!");
  Outcome o;
  o.pass = r.size() == 1 && r[0].cause == "small earthquake" && r[0].effect == "problems" &&
           r[0].trigger.unit == LexicalUnit::kCauseV;
  o.detail = r.empty() ? "no relation"
                       : "cause \"" + r[0].cause + "\", effect \"" + r[0].effect + "\"";
  return o;
}

Outcome TriggerFixtures() {
  auto fixtures = testing::LoadTriggerFixtures();
  size_t annotated = 0, agree = 0, negatives = 0, negatives_ok = 0;
  std::map<std::string, size_t> per_unit;
  bool passive = false;
  std::string first_miss;
  for (const auto &f : fixtures) {
    auto r = ExtractText(f.sentence);
    if (f.cause.empty()) {
      ++negatives;
      negatives_ok += r.empty();
      continue;
    }
    ++annotated;
    ++per_unit[f.unit];
    passive = passive || (f.unit == "cause.v" && f.voice == "PASSIVE");
    if (!r.empty() && r[0].cause == f.cause && r[0].effect == f.effect) {
      ++agree;
    } else if (first_miss.empty()) {
      first_miss = f.sentence;
    }
  }
  size_t min_per_unit = per_unit.size() == 7 ? SIZE_MAX : 0;
  for (const auto &[unit, n] : per_unit) min_per_unit = std::min(min_per_unit, n);
  Outcome o;
  o.pass = annotated >= 21 && min_per_unit >= 3 && passive && agree == annotated &&
           negatives_ok == negatives;
  std::ostringstream d;
  d << agree << "/" << annotated << " exact, " << per_unit.size()
    << " units with at least " << min_per_unit << " each, passive "
    << (passive ? "covered" : "MISSING") << ", " << negatives_ok << "/" << negatives
    << " negatives";
  if (!first_miss.empty()) d << "; first miss: " << first_miss;
  o.detail = d.str();
  return o;
}

Outcome EdgeWeightOracle() {
  auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  size_t collections = 0, pairs = 0, mismatches = 0;
  for (; collections < 100; ++collections) {
    size_t vocabulary = 1 + UniformIndex(rng, 20);
    size_t count = 1 + UniformIndex(rng, 50);
    size_t min_weight = 1 + UniformIndex(rng, 3);
    StatementMap map;
    for (size_t i = 0; i < count; ++i) {
      Statement s;
      size_t size = 1 + UniformIndex(rng, std::min<size_t>(vocabulary, 6));
      for (size_t j = 0; j < size; ++j) {
        s.lemmas.insert("v" + std::to_string(UniformIndex(rng, vocabulary)));
      }
      s.key = StatementKey(s.lemmas);
      s.frequency = 1;
      map.emplace(s.key, s);
    }
    // Brute force: every ordered key pair, intersection by linear scans.
    std::vector<std::pair<std::string, std::vector<std::string>>> flat;
    for (const auto &[key, s] : map) flat.emplace_back(key, std::vector<std::string>(s.lemmas.begin(), s.lemmas.end()));
    std::vector<Edge> expected;
    for (size_t i = 0; i < flat.size(); ++i) {
      for (size_t j = i + 1; j < flat.size(); ++j) {
        ++pairs;
        size_t shared = 0;
        for (const std::string &a : flat[i].second) {
          for (const std::string &b : flat[j].second) shared += a == b;
        }
        if (shared >= min_weight) expected.push_back({flat[i].first, flat[j].first, shared});
      }
    }
    if (BuildGraph(map, min_weight).edges != expected) ++mismatches;
  }
  double seconds = Seconds(start);
  Outcome o;
  o.pass = mismatches == 0 && seconds < 10.0;
  std::ostringstream d;
  d << collections << " collections, " << pairs << " pairs, " << mismatches
    << " mismatching collections, " << seconds << " s";
  o.detail = d.str();
  return o;
}

std::string RegexEscape(const std::string &s) {
  static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
  return std::regex_replace(s, special, R"(\$&)");
}

Outcome MicroViewProperty() {
  const std::vector<std::string> cause_words = {
      "nuclear", "power", "powerlessness", "plants", "global", "warming",
      "co2", "anti-nuclear", "coal", "the", "wind", "power-plants", "solar",
      "warming's", "nuclear-power", "emissions"};
  const std::vector<std::string> effect_words = {
      "cancer", "cheap", "energy", "floods", "jobs", "smog", "deaths", "it",
      "rising", "prices", "heat", "storms"};
  const std::vector<std::string> queries = {
      "nuclear power", "power", "nuclear", "global warming", "coal", "co2",
      "power plants", "warming", "wind power", "plants", "solar"};
  std::mt19937_64 rng(99);
  size_t violations = 0, checked = 0, matched = 0;
  for (size_t round = 0; round < 1000; ++round) {
    std::vector<CausalRelation> relations;
    size_t n = 1 + UniformIndex(rng, 20);
    for (size_t i = 0; i < n; ++i) {
      std::string cause, effect;
      size_t cl = 1 + UniformIndex(rng, 4), el = 1 + UniformIndex(rng, 3);
      for (size_t k = 0; k < cl; ++k) {
        cause += (k ? " " : "") + cause_words[UniformIndex(rng, cause_words.size())];
      }
      for (size_t k = 0; k < el; ++k) {
        effect += (k ? " " : "") + effect_words[UniformIndex(rng, effect_words.size())];
      }
      relations.push_back(testing::MakeRelation("r" + std::to_string(i), "u1", cause, effect));
    }
    std::string query = queries[UniformIndex(rng, queries.size())];
    // Vary case and spacing of the request; the oracle pattern is built
    // from the plain lower-case words.
    std::string request;
    for (char c : query) {
      if (c == ' ') {
        request += std::string(1 + UniformIndex(rng, 2), ' ');
      } else {
        request += UniformIndex(rng, 2) ? static_cast<char>(std::toupper(c)) : c;
      }
    }
    std::regex pattern("(^|[^a-z0-9])" + RegexEscape(query) + "($|[^a-z0-9])");
    BeliefGraph g = MicroView(relations, request);

    std::set<std::string> in_view;
    for (const auto &[key, s] : g.nodes) in_view.insert(s.relation_ids.begin(), s.relation_ids.end());
    for (const CausalRelation &r : relations) {
      ++checked;
      bool contains = std::regex_search(r.cause, pattern);
      matched += contains;
      bool member = in_view.count(r.relation_id) > 0;
      // A matching relation may be absent only when its effect has no
      // content lemmas and so forms no statement.
      bool droppable = SpanLemmas(r.effect).empty();
      if (member && !contains) ++violations;
      if (contains && !member && !droppable) ++violations;
    }
  }
  Outcome o;
  o.pass = violations == 0 && matched > 0 && matched < checked;
  std::ostringstream d;
  d << "1000 relation sets, " << checked << " relations (" << matched
    << " matching), " << violations << " violations";
  o.detail = d.str();
  return o;
}

Outcome OverlayPartition() {
  const std::vector<std::string> words = {"coal", "smog", "meat", "methane", "cars",
                                          "noise", "wind", "jobs", "solar", "tax"};
  std::mt19937_64 rng(5150);
  size_t violations = 0, nodes = 0, shared = 0;
  for (size_t round = 0; round < 300; ++round) {
    size_t users = 2 + UniformIndex(rng, 3);
    std::string jsonl =
        R"({"kind":"article","article_id":"a1","url":"u","title":"t","section_path":["s"],)"
        R"("published_at":"2019-04-01T12:00:00Z"})" "\n";
    for (size_t u = 0; u < users; ++u) {
      jsonl += R"({"kind":"comment","comment_id":"c)" + std::to_string(u) +
               R"(","article_id":"a1","commenter_id":"u)" + std::to_string(u) +
               R"(","parent_comment_id":null,"posted_at":"2019-04-01T13:00:00Z","text":"x"})"
               "\n";
    }
    std::istringstream in(jsonl);
    Corpus corpus = IngestJsonl(in);
    std::vector<CausalRelation> relations;
    std::map<std::string, std::string> author;
    size_t n = 1 + UniformIndex(rng, 25);
    for (size_t i = 0; i < n; ++i) {
      std::string user = "u" + std::to_string(UniformIndex(rng, users));
      std::string cause = words[UniformIndex(rng, words.size())];
      if (UniformIndex(rng, 2)) cause += " " + words[UniformIndex(rng, words.size())];
      std::string id = "r" + std::to_string(i);
      relations.push_back(testing::MakeRelation(id, user, cause, "effects"));
      author[id] = user;
    }
    std::string a = "u0", b = "u1";
    if (UniformIndex(rng, 2)) std::swap(a, b);
    Role role = UniformIndex(rng, 2) ? Role::kCause : Role::kEffect;
    BeliefGraph g = OverlayUsers(relations, corpus, a, b, role);
    if (!g.colors || g.colors->size() != g.nodes.size()) {
      ++violations;
      continue;
    }
    size_t red = 0, blue = 0, green = 0;
    std::set<std::string> covered;
    for (const auto &[key, s] : g.nodes) {
      ++nodes;
      bool by_a = false, by_b = false;
      for (const std::string &id : s.relation_ids) {
        covered.insert(id);
        by_a = by_a || author[id] == a;
        by_b = by_b || author[id] == b;
        if (author[id] != a && author[id] != b) ++violations;
      }
      NodeColor c = g.colors->at(key);
      red += c == NodeColor::kUserA;
      blue += c == NodeColor::kUserB;
      green += c == NodeColor::kShared;
      NodeColor expected = by_a && by_b ? NodeColor::kShared
                           : by_a       ? NodeColor::kUserA
                                        : NodeColor::kUserB;
      if (c != expected || (!by_a && !by_b)) ++violations;
    }
    shared += green;
    if (red + blue + green != g.nodes.size()) ++violations;
    for (const CausalRelation &r : relations) {
      bool mine = r.commenter_id == a || r.commenter_id == b;
      if (mine != (covered.count(r.relation_id) > 0)) ++violations;
    }
  }
  Outcome o;
  o.pass = violations == 0 && shared > 0;
  std::ostringstream d;
  d << "300 corpora, " << nodes << " nodes (" << shared << " shared), " << violations
    << " violations";
  o.detail = d.str();
  return o;
}

struct EndToEnd {
  Outcome outcome;
  std::vector<std::string> gexf_files;
};

EndToEnd Determinism() {
  EndToEnd result;
  auto start = Clock::now();
  std::string corpus = testing::TempPath("synthetic10k.jsonl");
  std::string snap = testing::TempPath("synthetic10k.snap");
  testing::WriteFile(corpus, testing::SyntheticCorpus(10000, 42));
  int ingest = RunTool({"ingest", "--in", corpus, "--out", snap}).first;
  std::vector<std::string> outputs;
  bool all_ok = ingest == 0;
  for (const char *format : {"gexf", "json"}) {
    for (int run = 0; run < 2; ++run) {
      std::string out = testing::TempPath("macro_" + std::to_string(run) + "." + format);
      std::remove(out.c_str());
      all_ok = all_ok && RunTool({"graph", "macro", "--snapshot", snap, "--sample", "0.1",
                                  "--seed", "42", "--format", format, "--out", out})
                                 .first == 0;
      outputs.push_back(out);
    }
  }
  double seconds = Seconds(start);
  struct rusage usage {};
  getrusage(RUSAGE_CHILDREN, &usage);
  struct rusage self {};
  getrusage(RUSAGE_SELF, &self);
  double child_mb = static_cast<double>(usage.ru_maxrss) / 1024.0;
  double self_mb = static_cast<double>(self.ru_maxrss) / 1024.0;

  bool gexf_same = false, json_same = false;
  size_t nodes = 0;
  if (all_ok) {
    std::string g0 = testing::ReadFile(outputs[0]), g1 = testing::ReadFile(outputs[1]);
    std::string j0 = testing::ReadFile(outputs[2]), j1 = testing::ReadFile(outputs[3]);
    gexf_same = g0 == g1 && !g0.empty();
    json_same = j0 == j1 && !j0.empty();
    nodes = ParseViewJson(j0).node_count;
    result.gexf_files = {outputs[0]};
  }
  Snapshot loaded = LoadSnapshotFile(snap);
  result.outcome.pass = all_ok && gexf_same && json_same && seconds < 60.0 &&
                        child_mb < 1024.0 && loaded.corpus.comments().size() == 10000;
  std::ostringstream d;
  d << loaded.corpus.comments().size() << " comments, " << loaded.relations.size()
    << " relations, " << nodes << " sampled nodes; GEXF "
    << (gexf_same ? "identical" : "DIFFERENT") << ", JSON "
    << (json_same ? "identical" : "DIFFERENT") << "; " << seconds << " s, peak tool RSS "
    << child_mb << " MB (runner " << self_mb << " MB)";
  result.outcome.detail = d.str();
  return result;
}

Outcome GexfValidity(const std::vector<std::string> &extra_files) {
  std::vector<std::pair<std::string, std::string>> docs;
  docs.emplace_back("golden two_nodes.gexf",
                    testing::ReadFile(testing::DataPath("two_nodes.gexf")));
  docs.emplace_back("empty graph", ExportGexf(BeliefGraph{}));

  // Views over a corpus built from the annotated fixture sentences plus
  // synthetic comments.
  std::string jsonl = testing::SyntheticCorpus(400, 7);
  size_t i = 0;
  for (const auto &f : testing::LoadTriggerFixtures()) {
    std::string text = f.sentence;
    std::string escaped;
    for (char c : text) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    jsonl += R"({"kind":"comment","comment_id":"f)" + std::to_string(i++) +
             R"(","article_id":"a00000","commenter_id":"fixture","parent_comment_id":null,)"
             R"("posted_at":"2019-04-03T00:00:00Z","text":")" + escaped + "\"}\n";
  }
  std::istringstream in(jsonl);
  IngestConfig config;
  config.max_comments_per_article = 1000;
  Snapshot snap = MakeSnapshot(IngestJsonl(in, config), config, Timestamp{0});
  auto top = TopCommenters(snap.corpus, snap.relations, 2);
  std::vector<std::pair<std::string, ViewSpec>> views;
  for (Role role : {Role::kCause, Role::kEffect}) {
    ViewSpec macro;
    macro.role = role;
    macro.iterations = 50;
    views.emplace_back(std::string("macro ") + std::string(RoleName(role)), macro);
    ViewSpec overlay = macro;
    overlay.kind = ViewKind::kOverlay;
    overlay.user_a = top[0];
    overlay.user_b = top[1];
    views.emplace_back(std::string("overlay ") + std::string(RoleName(role)), overlay);
  }
  for (const char *q : {"coal", "global warming", "extinction rebellion", "nothing here"}) {
    ViewSpec micro;
    micro.kind = ViewKind::kMicro;
    micro.cause_query = q;
    micro.iterations = 50;
    views.emplace_back(std::string("micro ") + q, micro);
  }
  for (const auto &[name, spec] : views) {
    docs.emplace_back(name, RenderView(snap, spec, ViewFormat::kGexf));
    docs.emplace_back(name + " without layout", ExportGexf(BuildView(snap, spec)));
  }
  for (const std::string &file : extra_files) {
    docs.emplace_back("10k macro sample", testing::ReadFile(file));
  }

  size_t valid = 0;
  std::string first_error;
  for (const auto &[name, doc] : docs) {
    auto errors = testing::ValidateGexf(doc);
    if (errors.empty()) {
      ++valid;
    } else if (first_error.empty()) {
      first_error = name + ": " + errors[0];
    }
  }
  Outcome o;
  o.pass = valid == docs.size() && extra_files.size() == 1;
  std::ostringstream d;
  d << valid << "/" << docs.size() << " documents valid against GEXF 1.2draft structure";
  if (!first_error.empty()) d << "; " << first_error;
  o.detail = d.str();
  return o;
}

std::string UrlEncode(const std::string &s) {
  static const char hex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

Outcome CliHttpEquivalence() {
  std::string corpus = testing::TempPath("equivalence.jsonl");
  std::string snap_path = testing::TempPath("equivalence.snap");
  testing::WriteFile(corpus, testing::SyntheticCorpus(2000, 1234));
  if (RunTool({"ingest", "--in", corpus, "--out", snap_path}).first != 0) {
    return {false, "ingest failed"};
  }
  auto snapshot = std::make_shared<const Snapshot>(LoadSnapshotFile(snap_path));
  Service service(snapshot);
  int port = service.BindToAnyPort("127.0.0.1");
  if (port <= 0) return {false, "cannot bind"};
  std::thread server([&] { service.ListenAfterBind(); });
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(60, 0);

  auto top = TopCommenters(snapshot->corpus, snapshot->relations, 6);
  const std::vector<std::string> queries = {"coal", "nuclear power", "global warming",
                                            "heavy traffic", "taxes", "prices"};
  std::mt19937_64 rng(777);
  size_t equal = 0;
  std::vector<std::string> kinds;
  std::string first_diff;
  for (int set = 0; set < 10; ++set) {
    const char *kind = set < 4 ? "macro" : set < 7 ? "micro" : "overlay";
    kinds.push_back(kind);
    std::vector<std::string> args = {"graph", kind, "--snapshot", snap_path, "--format", "json"};
    std::vector<std::pair<std::string, std::string>> params;
    auto both = [&](const std::string &flag, const std::string &param, const std::string &v) {
      args.push_back(flag);
      args.push_back(v);
      params.emplace_back(param, v);
    };
    char sample[32];
    std::snprintf(sample, sizeof sample, "%.2f", 0.05 + 0.45 * UniformUnit(rng));
    both("--sample", "sample", sample);
    both("--seed", "seed", std::to_string(rng()));
    both("--iterations", "iterations", std::to_string(1 + UniformIndex(rng, 300)));
    both("--min-weight", "minWeight", std::to_string(1 + UniformIndex(rng, 2)));
    if (std::string(kind) != "micro") {
      both("--role", "role", UniformIndex(rng, 2) ? "cause" : "effect");
    }
    if (std::string(kind) == "micro") {
      both("--cause", "cause", queries[UniformIndex(rng, queries.size())]);
    }
    if (std::string(kind) == "overlay") {
      size_t x = UniformIndex(rng, top.size()), y = UniformIndex(rng, top.size() - 1);
      if (y >= x) ++y;
      both("--user-a", "userA", top[x]);
      both("--user-b", "userB", top[y]);
    }
    std::string out = testing::TempPath("equivalence_" + std::to_string(set) + ".json");
    args.push_back("--out");
    args.push_back(out);
    std::remove(out.c_str());
    int code = RunTool(args).first;
    std::string path = std::string("/api/v1/graph/") + kind + "?";
    for (size_t i = 0; i < params.size(); ++i) {
      path += (i ? "&" : "") + params[i].first + "=" + UrlEncode(params[i].second);
    }
    auto response = client.Get(path);
    bool same = code == 0 && response && response->status == 200 &&
                response->body == testing::ReadFile(out);
    equal += same;
    if (!same && first_diff.empty()) first_diff = path;
  }
  service.Stop();
  server.join();
  Outcome o;
  o.pass = equal == 10;
  std::ostringstream d;
  d << equal << "/10 parameter sets byte-identical (4 macro, 3 micro, 3 overlay) over HTTP on port "
    << port;
  if (!first_diff.empty()) d << "; first difference: " << first_diff;
  o.detail = d.str();
  return o;
}

}  // namespace
}  // namespace causemap

int main() {
  using namespace causemap;
  int failures = 0;
  int index = 0;
  auto report = [&](const char *name, const std::function<Outcome()> &check) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  };
  report("Extinction Rebellion relation reproduction", RelationReproduction);
  report("earthquake illustration", EarthquakeIllustration);
  report("trigger fixture suite", TriggerFixtures);
  report("edge-weight oracle", EdgeWeightOracle);
  report("micro-view soundness and completeness", MicroViewProperty);
  report("overlay partition", OverlayPartition);
  EndToEnd e2e;
  report("end-to-end determinism (10k comments)", [&] {
    e2e = Determinism();
    return e2e.outcome;
  });
  report("GEXF validity", [&] { return GexfValidity(e2e.gexf_files); });
  report("CLI/HTTP equivalence", CliHttpEquivalence);
  std::printf("%d of %d acceptance criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
