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

#include <cmath>
#include <cstdio>

#include "canonical_json.h"
#include "causemap/base.h"
#include "causemap/graphio.h"

namespace causemap {

namespace internal {

std::string FormatReal(double value) {
  if (!std::isfinite(value)) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);
  }
  return out;
}

namespace {

void Dump(const nlohmann::json &value, std::string *out) {
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      *out += '{';
      bool first = true;
      // nlohmann::json keeps object keys in a std::map, already sorted.
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) *out += ',';
        first = false;
        *out += nlohmann::json(it.key()).dump(
            -1, ' ', false, nlohmann::json::error_handler_t::replace);
        *out += ':';
        Dump(it.value(), out);
      }
      *out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      *out += '[';
      bool first = true;
      for (const auto &item : value) {
        if (!first) *out += ',';
        first = false;
        Dump(item, out);
      }
      *out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float:
      *out += FormatReal(value.get<double>());
      break;
    case nlohmann::json::value_t::string:
      *out += value.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
      break;
    default:
      *out += value.dump();
  }
}

}  // namespace

std::string CanonicalDump(const nlohmann::json &value) {
  std::string out;
  Dump(value, &out);
  return out;
}

}  // namespace internal

std::string_view ViewKindName(ViewKind kind) {
  switch (kind) {
    case ViewKind::kMacro: return "MACRO";
    case ViewKind::kMicro: return "MICRO";
    case ViewKind::kOverlay: return "OVERLAY";
  }
  return "";
}

std::optional<ViewKind> ParseViewKind(std::string_view text) {
  std::string lower = AsciiLower(text);
  if (lower == "macro") return ViewKind::kMacro;
  if (lower == "micro") return ViewKind::kMicro;
  if (lower == "overlay") return ViewKind::kOverlay;
  return std::nullopt;
}

void ViewSpec::Validate() const {
  if (!(sample_fraction > 0.0 && sample_fraction <= 1.0)) {
    throw ArgumentError("sample fraction must be in (0, 1]");
  }
  if (min_weight == 0) throw ArgumentError("min weight must be positive");
  if (kind == ViewKind::kMicro &&
      (!cause_query || TrimWhitespace(*cause_query).empty())) {
    throw ArgumentError("micro view needs a cause query");
  }
  if (kind == ViewKind::kOverlay && (!user_a || !user_b)) {
    throw ArgumentError("overlay view needs two users");
  }
}

std::string ExportViewJson(const BeliefGraph &graph, const LayoutResult &layout,
                           const ViewSpec &view) {
  using nlohmann::json;
  json nodes = json::array();
  for (const auto &[key, s] : graph.nodes) {
    json node;
    node["id"] = key;
    auto label = graph.labels.find(key);
    node["label"] = label != graph.labels.end() ? label->second : s.display_text;
    node["displayText"] = s.display_text;
    node["frequency"] = s.frequency;
    NodeColor color = NodeColor::kNeutral;
    if (graph.colors) {
      auto c = graph.colors->find(key);
      if (c != graph.colors->end()) color = c->second;
    }
    node["color"] = NodeColorName(color);
    Point p;
    auto pos = layout.positions.find(key);
    if (pos != layout.positions.end()) p = pos->second;
    node["x"] = p.x;
    node["y"] = p.y;
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const Edge &e : graph.edges) {
    edges.push_back({{"source", e.source}, {"target", e.target}, {"weight", e.weight}});
  }
  json meta;
  meta["kind"] = ViewKindName(view.kind);
  meta["role"] = RoleName(view.role);
  meta["sampleFraction"] = view.sample_fraction;
  meta["seed"] = view.seed;
  meta["minWeight"] = view.min_weight;
  meta["iterations"] = view.iterations;
  meta["nodeCount"] = graph.nodes.size();
  meta["edgeCount"] = graph.edges.size();
  if (view.cause_query) meta["causeQuery"] = *view.cause_query;
  if (view.user_a) meta["userA"] = *view.user_a;
  if (view.user_b) meta["userB"] = *view.user_b;

  json doc;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  doc["meta"] = std::move(meta);
  return internal::CanonicalDump(doc);
}

ViewDocument ParseViewJson(std::string_view text) {
  using nlohmann::json;
  ViewDocument doc;
  try {
    json root = json::parse(text);
    for (const json &n : root.at("nodes")) {
      ViewNode node;
      node.id = n.at("id").get<std::string>();
      node.label = n.at("label").get<std::string>();
      node.display_text = n.at("displayText").get<std::string>();
      node.frequency = n.at("frequency").get<size_t>();
      node.x = n.at("x").get<double>();
      node.y = n.at("y").get<double>();
      auto color = ParseNodeColor(n.at("color").get<std::string>());
      if (!color) throw DataError("unknown node color");
      node.color = *color;
      doc.nodes.push_back(std::move(node));
    }
    for (const json &e : root.at("edges")) {
      doc.edges.push_back(Edge{e.at("source").get<std::string>(),
                               e.at("target").get<std::string>(),
                               e.at("weight").get<size_t>()});
    }
    const json &meta = root.at("meta");
    auto kind = ParseViewKind(meta.at("kind").get<std::string>());
    auto role = ParseRole(meta.at("role").get<std::string>());
    if (!kind || !role) throw DataError("unknown view kind or role");
    doc.view.kind = *kind;
    doc.view.role = *role;
    doc.view.sample_fraction = meta.at("sampleFraction").get<double>();
    doc.view.seed = meta.at("seed").get<uint64_t>();
    doc.view.min_weight = meta.at("minWeight").get<size_t>();
    doc.view.iterations = meta.at("iterations").get<size_t>();
    if (meta.contains("causeQuery")) {
      doc.view.cause_query = meta["causeQuery"].get<std::string>();
    }
    if (meta.contains("userA")) doc.view.user_a = meta["userA"].get<std::string>();
    if (meta.contains("userB")) doc.view.user_b = meta["userB"].get<std::string>();
    doc.node_count = meta.at("nodeCount").get<size_t>();
    doc.edge_count = meta.at("edgeCount").get<size_t>();
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed view JSON: ") + e.what());
  }
  return doc;
}

}  // namespace causemap
