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

#include "canonical_json.h"
#include "causemap/base.h"
#include "causemap/graphio.h"
#include "textproc_internal.h"

namespace causemap {

namespace {

// Escapes XML attribute text. Characters XML 1.0 cannot carry are dropped.
std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    internal::CodePoint c = internal::Decode(text, i);
    std::string_view raw = text.substr(i, c.len);
    i += c.len;
    if (c.cp == 0xFFFD && raw != "\xEF\xBF\xBD") continue;  // invalid byte
    if (c.cp < 0x20 && c.cp != '\t' && c.cp != '\n' && c.cp != '\r') continue;
    if (c.cp == 0xFFFE || c.cp == 0xFFFF) continue;
    switch (c.cp) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += raw;
    }
  }
  return out;
}

}  // namespace

Rgb ColorRgb(NodeColor color) {
  switch (color) {
    case NodeColor::kUserA: return {228, 26, 28};
    case NodeColor::kUserB: return {55, 126, 184};
    case NodeColor::kShared: return {77, 175, 74};
    case NodeColor::kNeutral: return {153, 153, 153};
  }
  return {0, 0, 0};
}

std::string ExportGexf(const BeliefGraph &graph, const LayoutResult *layout) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out +=
      "<gexf xmlns=\"http://www.gexf.net/1.2draft\" "
      "xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" "
      "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
      "xsi:schemaLocation=\"http://www.gexf.net/1.2draft "
      "http://www.gexf.net/1.2draft/gexf.xsd\" version=\"1.2\">\n";
  out += "  <meta>\n";
  out += "    <creator>causemap " + std::string(kVersion) + "</creator>\n";
  out += "    <description>belief graph</description>\n";
  out += "  </meta>\n";
  out += "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n";
  out += "    <attributes class=\"node\" mode=\"static\">\n";
  out += "      <attribute id=\"frequency\" title=\"frequency\" type=\"integer\"/>\n";
  out += "      <attribute id=\"displayText\" title=\"displayText\" type=\"string\"/>\n";
  out += "      <attribute id=\"role\" title=\"role\" type=\"string\"/>\n";
  out += "    </attributes>\n";

  out += "    <nodes>\n";
  for (const auto &[key, s] : graph.nodes) {
    auto label = graph.labels.find(key);
    out += "      <node id=\"" + Escape(key) + "\" label=\"" +
           Escape(label != graph.labels.end() ? label->second : s.display_text) +
           "\">\n";
    out += "        <attvalues>\n";
    out += "          <attvalue for=\"frequency\" value=\"" +
           std::to_string(s.frequency) + "\"/>\n";
    out += "          <attvalue for=\"displayText\" value=\"" +
           Escape(s.display_text) + "\"/>\n";
    out += "          <attvalue for=\"role\" value=\"" +
           std::string(RoleName(s.role)) + "\"/>\n";
    out += "        </attvalues>\n";
    if (graph.colors) {
      auto c = graph.colors->find(key);
      Rgb rgb = ColorRgb(c != graph.colors->end() ? c->second : NodeColor::kNeutral);
      out += "        <viz:color r=\"" + std::to_string(rgb.r) + "\" g=\"" +
             std::to_string(rgb.g) + "\" b=\"" + std::to_string(rgb.b) + "\"/>\n";
    }
    if (layout != nullptr) {
      auto p = layout->positions.find(key);
      if (p != layout->positions.end()) {
        out += "        <viz:position x=\"" + internal::FormatReal(p->second.x) +
               "\" y=\"" + internal::FormatReal(p->second.y) +
               "\" z=\"0.000000\"/>\n";
      }
    }
    out += "      </node>\n";
  }
  out += "    </nodes>\n";

  out += "    <edges>\n";
  size_t id = 0;
  for (const Edge &e : graph.edges) {
    out += "      <edge id=\"" + std::to_string(id++) + "\" source=\"" +
           Escape(e.source) + "\" target=\"" + Escape(e.target) +
           "\" weight=\"" + std::to_string(e.weight) + "\"/>\n";
  }
  out += "    </edges>\n";
  out += "  </graph>\n";
  out += "</gexf>\n";
  return out;
}

}  // namespace causemap
