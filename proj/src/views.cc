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

#include "causemap/base.h"
#include "causemap/observatory.h"

namespace causemap {

namespace {

// Drops nodes outside a seeded sample, keeping labels and colors.
BeliefGraph Resample(const BeliefGraph &graph, const ViewSpec &view) {
  if (view.sample_fraction == 1.0) return graph;
  BeliefGraph out = BuildGraph(
      Subsample(graph.nodes, view.sample_fraction, view.seed), view.min_weight);
  for (auto &[key, label] : out.labels) label = graph.labels.at(key);
  if (graph.colors) {
    out.colors.emplace();
    for (const auto &[key, s] : out.nodes) (*out.colors)[key] = graph.colors->at(key);
  }
  return out;
}

}  // namespace

BeliefGraph BuildView(const Snapshot &snapshot, const ViewSpec &view) {
  view.Validate();
  const std::vector<CausalRelation> &relations = snapshot.relations;
  switch (view.kind) {
    case ViewKind::kMacro: {
      StatementMap statements = BuildStatements(relations, view.role);
      // Label frequencies come from the whole role, not the sample.
      std::map<std::string, size_t> frequencies = LemmaFrequencies(statements);
      BeliefGraph graph = BuildGraph(
          Subsample(statements, view.sample_fraction, view.seed),
          view.min_weight);
      graph.labels = MacroLabels(graph, frequencies);
      return graph;
    }
    case ViewKind::kMicro:
      return Resample(MicroView(relations, *view.cause_query, view.min_weight),
                      view);
    case ViewKind::kOverlay:
      return Resample(OverlayUsers(relations, snapshot.corpus, *view.user_a,
                                   *view.user_b, view.role, view.min_weight),
                      view);
  }
  throw ArgumentError("unknown view kind");
}

std::string RenderGraph(const BeliefGraph &graph, const ViewSpec &view,
                        ViewFormat format) {
  ViewSpec effective = view;
  if (effective.kind == ViewKind::kMicro) effective.role = Role::kEffect;
  LayoutResult layout = Layout(graph, effective.seed, effective.iterations);
  if (format == ViewFormat::kGexf) return ExportGexf(graph, &layout);
  return ExportViewJson(graph, layout, effective);
}

std::string RenderView(const Snapshot &snapshot, const ViewSpec &view,
                       ViewFormat format) {
  return RenderGraph(BuildView(snapshot, view), view, format);
}

}  // namespace causemap
