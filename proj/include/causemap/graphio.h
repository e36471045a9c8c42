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

// Layout and serialization of belief graphs: a seeded force-directed
// layout, GEXF 1.2 export and the canonical view JSON served to clients.

#ifndef CAUSEMAP_GRAPHIO_H_
#define CAUSEMAP_GRAPHIO_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causemap/landscape.h"

namespace causemap {

inline constexpr size_t kDefaultIterations = 500;

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point &, const Point &) = default;
};

struct LayoutResult {
  std::map<std::string, Point> positions;
  size_t iterations = 0;
  uint64_t seed = 0;
};

// Fruchterman-Reingold on a square of side 100 * sqrt(N): nodes start at
// seeded random points of the inscribed disc; repulsion k^2/d between all
// pairs, attraction w * d^2 / k along edges, step length capped by a
// temperature falling linearly to zero. Nodes never leave the disc. Same
// inputs, same bits.
LayoutResult Layout(const BeliefGraph &graph, uint64_t seed,
                    size_t iterations = kDefaultIterations);

// GEXF 1.2 document, nodes and edges ordered by key. Positions are written
// when |layout| is given, colors when the graph has them.
std::string ExportGexf(const BeliefGraph &graph,
                       const LayoutResult *layout = nullptr);

// RGB triple used for a node color in GEXF output.
struct Rgb {
  int r, g, b;
};
Rgb ColorRgb(NodeColor color);

enum class ViewKind { kMacro, kMicro, kOverlay };

std::string_view ViewKindName(ViewKind kind);  // "MACRO", ...
// Case-insensitive.
std::optional<ViewKind> ParseViewKind(std::string_view text);

struct ViewSpec {
  ViewKind kind = ViewKind::kMacro;
  Role role = Role::kCause;
  double sample_fraction = 1.0;
  uint64_t seed = 0;
  std::optional<std::string> cause_query;  // MICRO
  std::optional<std::string> user_a;       // OVERLAY
  std::optional<std::string> user_b;
  size_t min_weight = 1;
  size_t iterations = kDefaultIterations;

  // Throws ArgumentError if a required parameter is missing or out of range.
  void Validate() const;
};

// Canonical JSON: keys sorted, no whitespace, reals with six decimals.
std::string ExportViewJson(const BeliefGraph &graph, const LayoutResult &layout,
                           const ViewSpec &view);

struct ViewNode {
  std::string id;
  std::string label;
  std::string display_text;
  size_t frequency = 0;
  double x = 0;
  double y = 0;
  NodeColor color = NodeColor::kNeutral;

  friend bool operator==(const ViewNode &, const ViewNode &) = default;
};

struct ViewDocument {
  std::vector<ViewNode> nodes;
  std::vector<Edge> edges;
  ViewSpec view;
  size_t node_count = 0;
  size_t edge_count = 0;
};

// Inverse of ExportViewJson. Throws DataError on malformed input.
ViewDocument ParseViewJson(std::string_view json);

}  // namespace causemap

#endif  // CAUSEMAP_GRAPHIO_H_
