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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "causemap/base.h"
#include "causemap/framex.h"
#include "causemap/graphio.h"
#include "causemap/landscape.h"
#include "causemap/observatory.h"
#include "causemap/textproc.h"

namespace py = pybind11;

namespace causemap {
namespace {

py::dict TokenDict(const Token &t) {
  py::dict d;
  d["surface"] = t.surface;
  d["start"] = t.start;
  d["end"] = t.end;
  d["pos"] = std::string(PosName(t.pos));
  d["lemma"] = t.lemma;
  return d;
}

py::dict RelationDict(const CausalRelation &r) {
  py::dict d;
  d["relation_id"] = r.relation_id;
  d["comment_id"] = r.comment_id;
  d["commenter_id"] = r.commenter_id;
  d["utterance"] = r.utterance;
  d["cause"] = r.cause;
  d["effect"] = r.effect;
  d["trigger"] = std::string(LexicalUnitLabel(r.trigger.unit));
  d["voice"] = std::string(VoiceName(r.trigger.voice));
  d["pronominal"] = r.pronominal;
  return d;
}

Pos PosArg(const std::string &name) {
  auto pos = ParsePos(name);
  if (!pos) throw ArgumentError("unknown POS tag: " + name);
  return *pos;
}

Role RoleArg(const std::string &name) {
  auto role = ParseRole(name);
  if (!role) throw ArgumentError("unknown role: " + name);
  return *role;
}

// Statements keyed by caller-chosen ids with the given lemma sets.
StatementMap StatementsFrom(const std::map<std::string, std::set<std::string>> &sets) {
  StatementMap map;
  for (const auto &[key, lemmas] : sets) {
    Statement s;
    s.key = key;
    s.display_text = key;
    s.lemmas = lemmas;
    s.frequency = 1;
    map.emplace(key, std::move(s));
  }
  return map;
}

std::vector<std::tuple<std::string, std::string, size_t>> EdgeTuples(
    const BeliefGraph &graph) {
  std::vector<std::tuple<std::string, std::string, size_t>> out;
  for (const Edge &e : graph.edges) out.emplace_back(e.source, e.target, e.weight);
  return out;
}

ViewSpec MakeSpec(const std::string &kind, const std::string &role, double sample,
                  uint64_t seed, size_t min_weight, size_t iterations,
                  std::optional<std::string> cause,
                  std::optional<std::string> user_a,
                  std::optional<std::string> user_b) {
  ViewSpec spec;
  auto parsed = ParseViewKind(kind);
  if (!parsed) throw ArgumentError("unknown view kind: " + kind);
  spec.kind = *parsed;
  spec.role = RoleArg(role);
  spec.sample_fraction = sample;
  spec.seed = seed;
  spec.min_weight = min_weight;
  spec.iterations = iterations;
  spec.cause_query = std::move(cause);
  spec.user_a = std::move(user_a);
  spec.user_b = std::move(user_b);
  return spec;
}

}  // namespace
}  // namespace causemap

PYBIND11_MODULE(_causemap, m) {
  using namespace causemap;
  m.doc() = "Causation frames and belief graphs from comment corpora";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

  m.def(
      "tokenize",
      [](const std::string &text) {
        py::list out;
        for (const Token &t : Tokenize(text)) out.append(TokenDict(t));
        return out;
      },
      py::arg("text"));
  m.def(
      "split_sentences",
      [](const std::string &text) {
        std::vector<std::pair<size_t, size_t>> out;
        for (const Sentence &s : SplitSentences(text)) out.emplace_back(s.start, s.end);
        return out;
      },
      py::arg("text"));
  m.def(
      "analyze",
      [](const std::string &text) {
        py::list out;
        for (const Sentence &s : Analyze(text)) {
          py::list tokens;
          for (const Token &t : s.tokens) tokens.append(TokenDict(t));
          out.append(tokens);
        }
        return out;
      },
      py::arg("text"));
  m.def(
      "lemmatize",
      [](const std::string &word, const std::string &pos) {
        return Lemmatize(word, PosArg(pos));
      },
      py::arg("word"), py::arg("pos"));
  m.def(
      "content_lemmas",
      [](const std::string &text) { return ContentLemmas(AnalyzeTokens(text)); },
      py::arg("text"));

  m.def(
      "extract",
      [](const std::string &text) {
        py::list out;
        for (const CausalRelation &r : ExtractText(text)) out.append(RelationDict(r));
        return out;
      },
      py::arg("text"));
  m.def(
      "relations_json",
      [](const std::string &text, bool compact) {
        return RelationsToJson(ExtractText(text), compact);
      },
      py::arg("text"), py::arg("compact") = false);

  m.def(
      "shared_lemma_weight",
      [](const std::set<std::string> &a, const std::set<std::string> &b) {
        return SharedLemmaWeight(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "build_graph",
      [](const std::map<std::string, std::set<std::string>> &statements,
         size_t min_weight) {
        return EdgeTuples(BuildGraph(StatementsFrom(statements), min_weight));
      },
      py::arg("statements"), py::arg("min_weight") = 1,
      "Edges (source, target, weight) between statements given as lemma sets.");
  m.def(
      "export_gexf",
      [](const std::map<std::string, std::set<std::string>> &statements,
         size_t min_weight, std::optional<uint64_t> layout_seed,
         size_t iterations) {
        BeliefGraph graph = BuildGraph(StatementsFrom(statements), min_weight);
        if (!layout_seed) return ExportGexf(graph);
        LayoutResult layout = Layout(graph, *layout_seed, iterations);
        return ExportGexf(graph, &layout);
      },
      py::arg("statements"), py::arg("min_weight") = 1,
      py::arg("layout_seed") = py::none(), py::arg("iterations") = kDefaultIterations);

  py::class_<Snapshot, std::shared_ptr<Snapshot>>(m, "Snapshot")
      .def_static(
          "ingest",
          [](const std::string &jsonl, size_t cap, int64_t created_at) {
            std::istringstream in(jsonl);
            IngestConfig config;
            config.max_comments_per_article = cap;
            Corpus corpus = IngestJsonl(in, config);
            return std::make_shared<Snapshot>(
                MakeSnapshot(std::move(corpus), config, Timestamp{created_at}));
          },
          py::arg("jsonl"), py::arg("cap") = 200, py::arg("created_at") = 0)
      .def_static(
          "load",
          [](const std::string &path) {
            return std::make_shared<Snapshot>(LoadSnapshotFile(path));
          },
          py::arg("path"))
      .def("save", [](const Snapshot &s, const std::string &path) {
        SaveSnapshotFile(s, path);
      })
      .def_property_readonly("digest",
                             [](const Snapshot &s) { return s.build_info.config_digest; })
      .def_property_readonly("comment_count",
                             [](const Snapshot &s) { return s.corpus.comments().size(); })
      .def_property_readonly("relations",
                             [](const Snapshot &s) {
                               py::list out;
                               for (const CausalRelation &r : s.relations) {
                                 out.append(RelationDict(r));
                               }
                               return out;
                             })
      .def(
          "relations_json",
          [](const Snapshot &s, bool compact) {
            return RelationsToJson(s.relations, compact);
          },
          py::arg("compact") = false)
      .def(
          "top_commenters",
          [](const Snapshot &s, size_t k) {
            return TopCommenters(s.corpus, s.relations, k);
          },
          py::arg("k"))
      .def(
          "render",
          [](const Snapshot &s, const std::string &kind, const std::string &role,
             double sample, uint64_t seed, size_t min_weight, size_t iterations,
             std::optional<std::string> cause, std::optional<std::string> user_a,
             std::optional<std::string> user_b, const std::string &format) {
            ViewSpec spec = MakeSpec(kind, role, sample, seed, min_weight, iterations,
                                     std::move(cause), std::move(user_a),
                                     std::move(user_b));
            if (format != "json" && format != "gexf") {
              throw ArgumentError("format must be json or gexf");
            }
            py::gil_scoped_release release;
            return RenderView(s, spec,
                              format == "gexf" ? ViewFormat::kGexf : ViewFormat::kJson);
          },
          py::arg("kind") = "macro", py::arg("role") = "cause", py::arg("sample") = 1.0,
          py::arg("seed") = 0, py::arg("min_weight") = 1,
          py::arg("iterations") = kDefaultIterations, py::arg("cause") = py::none(),
          py::arg("user_a") = py::none(), py::arg("user_b") = py::none(),
          py::arg("format") = "json");
}
