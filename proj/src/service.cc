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

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "canonical_json.h"
#include "causemap/base.h"
#include "causemap/observatory.h"
#include "httplib.h"
#include "json.hpp"

namespace causemap {

namespace {

using nlohmann::json;
using Params = std::multimap<std::string, std::string>;

constexpr std::string_view kApiPrefix = "/api/v1/";
constexpr size_t kMaxIterations = 5000;

HttpResponse JsonResponse(int status, const json &body) {
  HttpResponse r;
  r.status = status;
  r.body = internal::CanonicalDump(body);
  return r;
}

HttpResponse Error(int status, std::string_view error, std::string_view reason) {
  return JsonResponse(status, {{"error", error}, {"reason", reason}});
}

std::optional<std::string> Param(const Params &params, const std::string &name) {
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

uint64_t ParseUnsigned(const std::string &name, const std::string &text) {
  uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ArgumentError("invalid " + name + ": " + text);
  }
  return value;
}

double ParseReal(const std::string &name, const std::string &text) {
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ArgumentError("invalid " + name + ": " + text);
  }
  return value;
}

ViewSpec SpecFromParams(ViewKind kind, const Params &params) {
  ViewSpec spec;
  spec.kind = kind;
  if (auto role = Param(params, "role")) {
    auto parsed = ParseRole(*role);
    if (!parsed) throw ArgumentError("invalid role: " + *role);
    spec.role = *parsed;
  }
  if (auto v = Param(params, "sample")) spec.sample_fraction = ParseReal("sample", *v);
  if (auto v = Param(params, "seed")) spec.seed = ParseUnsigned("seed", *v);
  if (auto v = Param(params, "minWeight")) {
    spec.min_weight = ParseUnsigned("minWeight", *v);
  }
  if (auto v = Param(params, "iterations")) {
    spec.iterations = ParseUnsigned("iterations", *v);
    if (spec.iterations > kMaxIterations) {
      throw ArgumentError("iterations above " + std::to_string(kMaxIterations));
    }
  }
  if (kind == ViewKind::kMicro) spec.cause_query = Param(params, "cause");
  if (kind == ViewKind::kOverlay) {
    spec.user_a = Param(params, "userA");
    spec.user_b = Param(params, "userB");
  }
  spec.Validate();
  return spec;
}

}  // namespace

struct Service::Impl {
  httplib::Server server;
  std::unordered_map<std::string, size_t> relation_index;
};

Service::Service(std::shared_ptr<const Snapshot> snapshot, ServiceConfig config)
    : snapshot_(std::move(snapshot)),
      config_(std::move(config)),
      impl_(std::make_unique<Impl>()) {
  causes_ = BuildStatements(snapshot_->relations, Role::kCause);
  effects_ = BuildStatements(snapshot_->relations, Role::kEffect);
  for (size_t i = 0; i < snapshot_->relations.size(); ++i) {
    impl_->relation_index.emplace(snapshot_->relations[i].relation_id, i);
  }

  impl_->server.Get(".*", [this](const httplib::Request &req,
                                 httplib::Response &res) {
    Params params(req.params.begin(), req.params.end());
    HttpResponse r = Handle(req.path, params);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  });
  if (!config_.static_dir.empty() &&
      !impl_->server.set_mount_point("/", config_.static_dir)) {
    throw DataError("static directory not found: " + config_.static_dir);
  }
}

Service::~Service() = default;

HttpResponse Service::Handle(std::string_view path, const Params &params) const {
  if (path.substr(0, kApiPrefix.size()) != kApiPrefix) {
    return Error(404, "not_found", "unknown route");
  }
  std::string_view route = path.substr(kApiPrefix.size());
  const Snapshot &snap = *snapshot_;
  try {
    if (route == "corpus/stats") {
      return JsonResponse(200, {{"articles", snap.corpus.articles().size()},
                                {"comments", snap.corpus.comments().size()},
                                {"commenters", snap.corpus.commenters().size()},
                                {"relations", snap.relations.size()}});
    }
    if (route == "commenters/top") {
      size_t k = 10;
      if (auto v = Param(params, "k")) k = ParseUnsigned("k", *v);
      std::map<std::string, size_t> counts;
      for (const CausalRelation &r : snap.relations) ++counts[r.commenter_id];
      json list = json::array();
      for (const std::string &id : TopCommenters(snap.corpus, snap.relations, k)) {
        list.push_back({{"id", id},
                        {"relations", counts[id]},
                        {"comments", snap.corpus.CommentCount(id)}});
      }
      return JsonResponse(200, {{"commenters", list}});
    }
    if (route.substr(0, 6) == "graph/") {
      auto kind = ParseViewKind(route.substr(6));
      if (!kind || route.substr(6) != AsciiLower(route.substr(6))) {
        return Error(404, "not_found", "unknown view kind");
      }
      ViewSpec spec = SpecFromParams(*kind, params);
      BeliefGraph graph = BuildView(snap, spec);
      if (graph.nodes.size() > config_.node_cap) {
        return JsonResponse(
            413, {{"error", "graph_too_large"},
                  {"reason", "graph has " + std::to_string(graph.nodes.size()) +
                                 " nodes, above the cap of " +
                                 std::to_string(config_.node_cap) +
                                 "; request a smaller sample fraction"},
                  {"nodeCount", graph.nodes.size()},
                  {"nodeCap", config_.node_cap}});
      }
      HttpResponse r;
      r.body = RenderGraph(graph, spec, ViewFormat::kJson);
      return r;
    }
    if (route.substr(0, 11) == "statements/" && route.size() > 11) {
      std::string key(route.substr(11));
      std::optional<Role> only;
      if (auto role = Param(params, "role")) {
        only = ParseRole(*role);
        if (!only) throw ArgumentError("invalid role: " + *role);
      }
      // A cause query scopes the lookup to the relations of that micro view.
      std::optional<StatementMap> scoped;
      if (auto cause = Param(params, "cause")) {
        if (only && *only != Role::kEffect) {
          throw ArgumentError("a cause query selects EFFECT statements");
        }
        only = Role::kEffect;
        std::string query = NormalizeQuery(*cause);
        std::vector<CausalRelation> selected;
        for (const CausalRelation &r : snap.relations) {
          if (ContainsAtTokenBoundary(r.cause, query)) selected.push_back(r);
        }
        scoped = BuildStatements(selected, Role::kEffect);
      }
      const Statement *first = nullptr;
      std::vector<std::pair<size_t, Role>> hits;
      for (Role role : {Role::kCause, Role::kEffect}) {
        if (only && *only != role) continue;
        const StatementMap &map =
            scoped ? *scoped : role == Role::kCause ? causes_ : effects_;
        auto it = map.find(key);
        if (it == map.end()) continue;
        if (first == nullptr) first = &it->second;
        for (const std::string &id : it->second.relation_ids) {
          hits.emplace_back(impl_->relation_index.at(id), role);
        }
      }
      if (first == nullptr) return Error(404, "not_found", "unknown statement");
      std::sort(hits.begin(), hits.end());
      json relations = json::array();
      for (const auto &[index, role] : hits) {
        const CausalRelation &r = snap.relations[index];
        relations.push_back({{"role", RoleName(role)},
                             {"utterance", r.utterance},
                             {"commentId", r.comment_id},
                             {"commenterId", r.commenter_id},
                             {"relationId", r.relation_id},
                             {"cause", r.cause},
                             {"effect", r.effect},
                             {"trigger", LexicalUnitLabel(r.trigger.unit)}});
      }
      return JsonResponse(200, {{"key", key},
                                {"lemmas", first->lemmas},
                                {"displayText", first->display_text},
                                {"relations", relations}});
    }
  } catch (const ArgumentError &e) {
    return Error(400, "bad_request", e.what());
  }
  return Error(404, "not_found", "unknown route");
}

bool Service::Listen(const std::string &host, int port) {
  return impl_->server.listen(host, port);
}

int Service::BindToAnyPort(const std::string &host) {
  return impl_->server.bind_to_any_port(host);
}

bool Service::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void Service::Stop() { impl_->server.stop(); }

bool Service::IsRunning() const { return impl_->server.is_running(); }

}  // namespace causemap
