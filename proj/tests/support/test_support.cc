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

#include "test_support.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "causemap/base.h"

namespace causemap::testing {

std::string DataPath(std::string_view relative) {
  return std::string(CAUSEMAP_TEST_DATA_DIR) + "/" + std::string(relative);
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string &path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string TempPath(std::string_view name) {
  auto dir = std::filesystem::temp_directory_path() / "causemap_tests";
  std::filesystem::create_directories(dir);
  return (dir / std::string(name)).string();
}

std::vector<TriggerFixture> LoadTriggerFixtures() {
  std::istringstream in(ReadFile(DataPath("causal_triggers.tsv")));
  std::vector<TriggerFixture> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      f.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (f.size() != 5) throw std::runtime_error("bad fixture row: " + line);
    TriggerFixture row{f[0], f[1], f[2], f[3], f[4]};
    if (row.cause == "-") row.cause.clear();
    if (row.effect == "-") row.effect.clear();
    rows.push_back(std::move(row));
  }
  return rows;
}

// GEXF structure checks.

namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kGexfNs = "http://www.gexf.net/1.2draft";
constexpr std::string_view kVizNs = "http://www.gexf.net/1.2draft/viz";

class GexfChecker {
 public:
  std::vector<std::string> errors;

  void Document(std::string_view text) {
    if (!IsValidUtf8(text)) errors.push_back("document is not valid UTF-8");
    if (text.substr(0, 38) != R"(<?xml version="1.0" encoding="UTF-8"?>)") {
      errors.push_back("missing UTF-8 XML declaration");
    }
    pt::ptree tree;
    try {
      std::istringstream in{std::string(text)};
      pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error &e) {
      errors.push_back(std::string("not well-formed: ") + e.what());
      return;
    }
    size_t roots = 0;
    for (const auto &[name, child] : tree) {
      if (name == "<xmlcomment>") continue;
      ++roots;
      if (name != "gexf") {
        errors.push_back("root element is " + name);
        continue;
      }
      Gexf(child);
    }
    if (roots != 1) errors.push_back("expected one root element");
  }

 private:
  std::string viz_prefix_;
  std::map<std::string, std::string> node_attr_types_;
  std::map<std::string, std::string> edge_attr_types_;
  std::set<std::string> node_ids_;
  std::set<std::string> edge_ids_;
  std::vector<std::pair<std::string, std::string>> endpoints_;

  static std::map<std::string, std::string> Attrs(const pt::ptree &e) {
    std::map<std::string, std::string> out;
    if (auto a = e.get_child_optional("<xmlattr>")) {
      for (const auto &[k, v] : *a) out.emplace(k, v.data());
    }
    return out;
  }

  static std::vector<std::pair<std::string, const pt::ptree *>> Children(
      const pt::ptree &e) {
    std::vector<std::pair<std::string, const pt::ptree *>> out;
    for (const auto &[name, child] : e) {
      if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
      out.emplace_back(name, &child);
    }
    return out;
  }

  void Fail(const std::string &where, const std::string &what) {
    errors.push_back(where + ": " + what);
  }

  void AllowedAttrs(const std::string &where,
                    const std::map<std::string, std::string> &attrs,
                    std::initializer_list<std::string_view> allowed,
                    std::initializer_list<std::string_view> required) {
    for (const auto &[k, v] : attrs) {
      bool ok = false;
      for (std::string_view a : allowed) ok = ok || k == a;
      if (!ok) Fail(where, "undeclared attribute " + k);
    }
    for (std::string_view r : required) {
      if (!attrs.count(std::string(r))) {
        Fail(where, "missing required attribute " + std::string(r));
      }
    }
  }

  void NoText(const std::string &where, const pt::ptree &e) {
    if (e.data().find_first_not_of(" \t\r\n") != std::string::npos) {
      Fail(where, "unexpected character content");
    }
  }

  void Enum(const std::string &where, const std::map<std::string, std::string> &attrs,
            const std::string &name, std::initializer_list<std::string_view> values) {
    auto it = attrs.find(name);
    if (it == attrs.end()) return;
    for (std::string_view v : values) {
      if (it->second == v) return;
    }
    Fail(where, name + "=\"" + it->second + "\" is not an allowed value");
  }

  static bool IsFloat(const std::string &s) {
    static const std::regex re(
        R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?|[+-]?INF|NaN)");
    return std::regex_match(s, re);
  }
  static bool IsInteger(const std::string &s) {
    static const std::regex re(R"([+-]?[0-9]+)");
    return std::regex_match(s, re);
  }
  static bool IsNonNegativeInteger(const std::string &s) {
    static const std::regex re(R"(\+?[0-9]+)");
    return std::regex_match(s, re);
  }

  bool TypedValue(const std::string &type, const std::string &value) {
    if (type == "integer" || type == "long") return IsInteger(value);
    if (type == "float" || type == "double") return IsFloat(value);
    if (type == "boolean") {
      return value == "true" || value == "false" || value == "1" || value == "0";
    }
    return true;
  }

  void Gexf(const pt::ptree &root) {
    auto attrs = Attrs(root);
    for (const auto &[k, v] : attrs) {
      if (k.rfind("xmlns:", 0) == 0 && v == kVizNs) viz_prefix_ = k.substr(6);
      bool ok = k == "xmlns" || k.rfind("xmlns:", 0) == 0 || k == "version" ||
                k == "variant" || k == "xsi:schemaLocation";
      if (!ok) Fail("gexf", "undeclared attribute " + k);
    }
    if (attrs["xmlns"] != kGexfNs) Fail("gexf", "default namespace is not GEXF 1.2");
    if (attrs["version"] != "1.2") Fail("gexf", "version must be 1.2");
    NoText("gexf", root);
    auto children = Children(root);
    size_t i = 0;
    if (i < children.size() && children[i].first == "meta") Meta(*children[i++].second);
    if (i < children.size() && children[i].first == "graph") {
      Graph(*children[i++].second);
    } else {
      Fail("gexf", "graph element required after optional meta");
    }
    for (; i < children.size(); ++i) Fail("gexf", "unexpected element " + children[i].first);
  }

  void Meta(const pt::ptree &meta) {
    auto attrs = Attrs(meta);
    AllowedAttrs("meta", attrs, {"lastmodifieddate"}, {});
    if (attrs.count("lastmodifieddate") &&
        !std::regex_match(attrs["lastmodifieddate"],
                          std::regex(R"([0-9]{4}-[0-9]{2}-[0-9]{2})"))) {
      Fail("meta", "lastmodifieddate is not an xs:date");
    }
    for (const auto &[name, child] : Children(meta)) {
      if (name != "creator" && name != "keywords" && name != "description") {
        Fail("meta", "unexpected element " + name);
      } else if (!Children(*child).empty()) {
        Fail("meta/" + name, "must contain text only");
      }
    }
  }

  void Graph(const pt::ptree &graph) {
    auto attrs = Attrs(graph);
    AllowedAttrs("graph", attrs,
                 {"timeformat", "start", "startopen", "end", "endopen",
                  "defaultedgetype", "idtype", "mode"},
                 {});
    Enum("graph", attrs, "defaultedgetype", {"directed", "undirected", "mutual"});
    Enum("graph", attrs, "idtype", {"integer", "string"});
    Enum("graph", attrs, "mode", {"static", "dynamic"});
    Enum("graph", attrs, "timeformat", {"integer", "double", "date", "dateTime"});
    NoText("graph", graph);
    auto children = Children(graph);
    size_t i = 0, declarations = 0;
    for (; i < children.size() && children[i].first == "attributes"; ++i) {
      if (++declarations > 2) Fail("graph", "more than two attributes elements");
      Attributes(*children[i].second);
    }
    bool nodes = false, edges = false;
    for (; i < children.size(); ++i) {
      const std::string &name = children[i].first;
      if (name == "nodes" && !nodes && !edges) {
        nodes = true;
        Nodes(*children[i].second, "graph/nodes");
      } else if (name == "edges" && !edges) {
        edges = true;
        Edges(*children[i].second);
      } else {
        Fail("graph", "unexpected or repeated element " + name);
      }
    }
    for (const auto &[source, target] : endpoints_) {
      if (!node_ids_.count(source)) Fail("edge", "unknown source node " + source);
      if (!node_ids_.count(target)) Fail("edge", "unknown target node " + target);
    }
  }

  void Attributes(const pt::ptree &decl) {
    auto attrs = Attrs(decl);
    AllowedAttrs("attributes", attrs, {"class", "mode", "start", "end"}, {"class"});
    Enum("attributes", attrs, "class", {"node", "edge"});
    Enum("attributes", attrs, "mode", {"static", "dynamic"});
    auto &types = attrs["class"] == "edge" ? edge_attr_types_ : node_attr_types_;
    for (const auto &[name, child] : Children(decl)) {
      if (name != "attribute") {
        Fail("attributes", "unexpected element " + name);
        continue;
      }
      auto a = Attrs(*child);
      AllowedAttrs("attribute", a, {"id", "title", "type"}, {"id", "title", "type"});
      Enum("attribute", a, "type",
           {"integer", "long", "double", "float", "boolean", "liststring", "string",
            "anyURI"});
      if (!types.emplace(a["id"], a["type"]).second) {
        Fail("attribute", "duplicate attribute id " + a["id"]);
      }
      for (const auto &[sub, grand] : Children(*child)) {
        if (sub != "default" && sub != "options") Fail("attribute", "unexpected " + sub);
      }
    }
  }

  void Nodes(const pt::ptree &nodes, const std::string &where) {
    auto attrs = Attrs(nodes);
    AllowedAttrs(where, attrs, {"count"}, {});
    auto children = Children(nodes);
    if (attrs.count("count")) {
      if (!IsNonNegativeInteger(attrs["count"])) {
        Fail(where, "count is not a non-negative integer");
      } else if (std::stoul(attrs["count"]) != children.size()) {
        Fail(where, "count does not match the number of nodes");
      }
    }
    NoText(where, nodes);
    for (const auto &[name, child] : children) {
      if (name != "node") {
        Fail(where, "unexpected element " + name);
        continue;
      }
      Node(*child);
    }
  }

  void Node(const pt::ptree &node) {
    auto attrs = Attrs(node);
    AllowedAttrs("node", attrs, {"id", "label", "pid", "start", "startopen", "end",
                                 "endopen"},
                 {"id"});
    const std::string where = "node " + attrs["id"];
    if (!node_ids_.insert(attrs["id"]).second) Fail(where, "duplicate node id");
    NoText(where, node);
    const std::string viz = viz_prefix_.empty() ? "\x01" : viz_prefix_ + ":";
    for (const auto &[name, child] : Children(node)) {
      if (name == "attvalues") {
        AttValues(*child, node_attr_types_, where);
      } else if (name == "spells" || name == "parents") {
      } else if (name == "nodes") {
        Nodes(*child, where + "/nodes");
      } else if (name == "edges") {
        Edges(*child);
      } else if (name == viz + "color") {
        Color(*child, where);
      } else if (name == viz + "position") {
        auto p = Attrs(*child);
        AllowedAttrs(where + " position", p, {"x", "y", "z", "start", "end"}, {});
        for (const auto &[k, v] : p) {
          if ((k == "x" || k == "y" || k == "z") && !IsFloat(v)) {
            Fail(where + " position", k + " is not an xs:float");
          }
        }
      } else if (name == viz + "size") {
        auto s = Attrs(*child);
        AllowedAttrs(where + " size", s, {"value", "start", "end"}, {"value"});
        if (!IsFloat(s["value"]) || std::stod(s["value"]) < 0) {
          Fail(where + " size", "value is not a non-negative float");
        }
      } else if (name == viz + "shape") {
        auto s = Attrs(*child);
        Enum(where + " shape", s, "value", {"disc", "square", "triangle", "diamond", "image"});
      } else {
        Fail(where, "unexpected element " + name);
      }
    }
  }

  void Color(const pt::ptree &color, const std::string &where) {
    auto c = Attrs(color);
    AllowedAttrs(where + " color", c, {"r", "g", "b", "a", "start", "end"},
                 {"r", "g", "b"});
    for (const char *ch : {"r", "g", "b"}) {
      const std::string &v = c[ch];
      if (!IsNonNegativeInteger(v) || std::stoul(v) > 255) {
        Fail(where + " color", std::string(ch) + " is not an unsigned byte");
      }
    }
    if (c.count("a") && (!IsFloat(c["a"]) || std::stod(c["a"]) < 0 ||
                         std::stod(c["a"]) > 1)) {
      Fail(where + " color", "alpha outside [0, 1]");
    }
  }

  void AttValues(const pt::ptree &values,
                 const std::map<std::string, std::string> &types,
                 const std::string &where) {
    NoText(where + " attvalues", values);
    for (const auto &[name, child] : Children(values)) {
      if (name != "attvalue") {
        Fail(where + " attvalues", "unexpected element " + name);
        continue;
      }
      auto a = Attrs(*child);
      AllowedAttrs(where + " attvalue", a, {"for", "value", "start", "startopen", "end",
                                            "endopen"},
                   {"for", "value"});
      auto type = types.find(a["for"]);
      if (type == types.end()) {
        Fail(where + " attvalue", "undeclared attribute " + a["for"]);
      } else if (!TypedValue(type->second, a["value"])) {
        Fail(where + " attvalue", a["for"] + " value does not match type " +
                                      type->second);
      }
    }
  }

  void Edges(const pt::ptree &edges) {
    auto attrs = Attrs(edges);
    AllowedAttrs("edges", attrs, {"count"}, {});
    auto children = Children(edges);
    if (attrs.count("count") &&
        (!IsNonNegativeInteger(attrs["count"]) ||
         std::stoul(attrs["count"]) != children.size())) {
      Fail("edges", "count does not match the number of edges");
    }
    NoText("edges", edges);
    const std::string viz = viz_prefix_.empty() ? "\x01" : viz_prefix_ + ":";
    for (const auto &[name, child] : children) {
      if (name != "edge") {
        Fail("edges", "unexpected element " + name);
        continue;
      }
      auto a = Attrs(*child);
      AllowedAttrs("edge", a, {"id", "source", "target", "type", "label", "weight",
                               "start", "startopen", "end", "endopen"},
                   {"id", "source", "target"});
      const std::string where = "edge " + a["id"];
      if (!edge_ids_.insert(a["id"]).second) Fail(where, "duplicate edge id");
      Enum(where, a, "type", {"directed", "undirected", "mutual"});
      if (a.count("weight") && !IsFloat(a["weight"])) {
        Fail(where, "weight is not an xs:float");
      }
      endpoints_.emplace_back(a["source"], a["target"]);
      for (const auto &[sub, grand] : Children(*child)) {
        if (sub == "attvalues") {
          AttValues(*grand, edge_attr_types_, where);
        } else if (sub == viz + "color") {
          Color(*grand, where);
        } else if (sub != "spells" && sub != viz + "thickness" && sub != viz + "shape") {
          Fail(where, "unexpected element " + sub);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::string> ValidateGexf(std::string_view document) {
  GexfChecker checker;
  checker.Document(document);
  return checker.errors;
}

// Synthetic corpora.

namespace {

constexpr std::string_view kAdjectives[] = {
    "global", "nuclear", "extreme", "higher", "rising", "cheap", "renewable",
    "heavy", "local", "political", "economic", "severe", "massive", "poor",
    "clean", "dirty", "modern", "urban", "public", "private"};
constexpr std::string_view kNouns[] = {
    "warming", "power", "emissions", "pollution", "traffic", "storms",
    "floods", "droughts", "prices", "taxes", "subsidies", "coal", "oil",
    "gas", "energy", "policy", "weather", "temperatures", "fires",
    "migration", "poverty", "growth", "demand", "protests", "jobs",
    "investment", "deforestation", "agriculture", "farming", "transport",
    "industry", "consumption", "waste", "plastic", "health", "deaths",
    "disease", "crops", "water", "levels"};
constexpr std::string_view kFiller[] = {
    "I completely agree with this.",
    "What a mess.",
    "Nobody reads the article anyway!",
    "This is the best comment here.",
    "Where did you get that number?",
    "The government should act now.",
    "It rose by 2 p.p. since e.g. 1990.",
    "Mr. Smith disagrees."};

template <typename T, size_t N>
std::string_view Pick(std::mt19937_64 &rng, const T (&items)[N]) {
  return items[UniformIndex(rng, N)];
}

std::string NounPhrase(std::mt19937_64 &rng) {
  std::string np;
  switch (UniformIndex(rng, 4)) {
    case 0:
      np = std::string(Pick(rng, kNouns));
      break;
    case 1:
    case 2:
      np = std::string(Pick(rng, kAdjectives)) + " " + std::string(Pick(rng, kNouns));
      break;
    default:
      np = std::string(Pick(rng, kNouns)) + " " + std::string(Pick(rng, kNouns));
      break;
  }
  if (UniformIndex(rng, 5) == 0) np = "the " + np;
  return np;
}

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::string CausalSentence(std::mt19937_64 &rng) {
  std::string a = NounPhrase(rng);
  std::string b = NounPhrase(rng);
  std::string s;
  switch (UniformIndex(rng, 11)) {
    case 0: s = a + " causes " + b; break;
    case 1: s = a + " caused " + b; break;
    case 2: s = b + " are caused by " + a; break;
    case 3: s = a + " leads to " + b; break;
    case 4: s = a + " led to " + b; break;
    case 5: s = a + " results in " + b; break;
    case 6: s = a + " gave rise to " + b; break;
    case 7: s = b + " increased due to " + a; break;
    case 8: s = "we got " + b + " because of " + a; break;
    case 9: s = b + " happened because " + a + " changed"; break;
    default: s = a + " will cause " + b; break;
  }
  return Capitalize(s) + (UniformIndex(rng, 6) == 0 ? "!" : ".");
}

}  // namespace

std::string SyntheticCorpus(size_t comments, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const size_t per_article = 150;
  const size_t articles = comments / per_article + 1;
  const size_t commenters = comments / 20 + 2;
  std::string out;
  out.reserve(comments * 260);
  char buf[64];
  for (size_t a = 0; a < articles; ++a) {
    std::snprintf(buf, sizeof buf, "a%05zu", a);
    out += R"({"kind":"article","article_id":")" + std::string(buf) +
           R"(","url":"https://news.example/)" + buf +
           R"(","title":"Climate story","section_path":["environment","climate-change"],)"
           R"("published_at":"2019-04-01T12:00:00Z"})" "\n";
  }
  for (size_t c = 0; c < comments; ++c) {
    size_t article = c % articles;
    // Skewed activity: low ids post far more often.
    double u = UniformUnit(rng);
    size_t user = static_cast<size_t>(static_cast<double>(commenters) * u * u * u);
    std::string text;
    size_t sentences = 1 + UniformIndex(rng, 3);
    for (size_t s = 0; s < sentences; ++s) {
      if (!text.empty()) text += " ";
      text += UniformIndex(rng, 3) == 0 ? std::string(Pick(rng, kFiller))
                                        : CausalSentence(rng);
    }
    char id[32], uid[32], ts[32];
    std::snprintf(id, sizeof id, "c%07zu", c);
    std::snprintf(uid, sizeof uid, "u%05zu", user);
    std::snprintf(ts, sizeof ts, "2019-04-%02zuT%02zu:%02zu:%02zuZ", 2 + c % 27,
                  (c / 3600) % 24, (c / 60) % 60, c % 60);
    std::string parent = "null";
    if (c >= articles && UniformIndex(rng, 3) == 0) {
      std::snprintf(buf, sizeof buf, "\"c%07zu\"", c - articles);
      parent = buf;
    }
    std::snprintf(buf, sizeof buf, "a%05zu", article);
    out += R"({"kind":"comment","comment_id":")" + std::string(id) +
           R"(","article_id":")" + buf + R"(","commenter_id":")" + uid +
           R"(","parent_comment_id":)" + parent + R"(,"posted_at":")" + ts +
           R"(","text":")" + text + "\"}\n";
  }
  return out;
}

CausalRelation MakeRelation(std::string id, std::string commenter, std::string cause,
                            std::string effect) {
  CausalRelation r;
  r.relation_id = std::move(id);
  r.comment_id = "c-" + r.relation_id;
  r.commenter_id = std::move(commenter);
  r.cause = std::move(cause);
  r.effect = std::move(effect);
  r.utterance = r.cause + " causes " + r.effect;
  r.trigger = Trigger{LexicalUnit::kCauseV, 0, 1, Voice::kActive};
  return r;
}

}  // namespace causemap::testing
