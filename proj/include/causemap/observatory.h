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

// Snapshots (corpus plus extracted relations), view rendering shared by the
// command line tool and the HTTP service, and the service itself.

#ifndef CAUSEMAP_OBSERVATORY_H_
#define CAUSEMAP_OBSERVATORY_H_

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "causemap/corpus.h"
#include "causemap/framex.h"
#include "causemap/graphio.h"
#include "causemap/landscape.h"

namespace causemap {

struct BuildInfo {
  std::string version;
  // Digest over the tool version, ingest settings, lexicon, corpus and
  // relations. Loading recomputes and compares it.
  std::string config_digest;
  Timestamp created_at;
  size_t max_comments_per_article = 0;

  friend bool operator==(const BuildInfo &, const BuildInfo &) = default;
};

struct Snapshot {
  Corpus corpus;
  std::vector<CausalRelation> relations;
  BuildInfo build_info;
};

// Runs extraction over |corpus| and stamps the result.
Snapshot MakeSnapshot(Corpus corpus, const IngestConfig &config,
                      Timestamp created_at);

std::string SnapshotDigest(const Snapshot &snapshot);

// CBOR encoding. LoadSnapshot throws DataError on corrupt input or a digest
// mismatch.
void SaveSnapshot(const Snapshot &snapshot, std::ostream &out);
Snapshot LoadSnapshot(std::istream &in);
void SaveSnapshotFile(const Snapshot &snapshot, const std::string &path);
Snapshot LoadSnapshotFile(const std::string &path);

// Builds the graph a view describes. Throws ArgumentError for invalid
// parameters (unknown users, empty query).
BeliefGraph BuildView(const Snapshot &snapshot, const ViewSpec &view);

enum class ViewFormat { kJson, kGexf };

// Lays out |graph| and serializes it as canonical JSON or GEXF.
std::string RenderGraph(const BeliefGraph &graph, const ViewSpec &view,
                        ViewFormat format = ViewFormat::kJson);

// BuildView followed by RenderGraph. The CLI writes these bytes to files
// and the service returns them as response bodies.
std::string RenderView(const Snapshot &snapshot, const ViewSpec &view,
                       ViewFormat format = ViewFormat::kJson);

struct ServiceConfig {
  size_t node_cap = 5000;
  std::string static_dir;  // served under "/" when non-empty
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Read-only API over an immutable snapshot.
class Service {
 public:
  Service(std::shared_ptr<const Snapshot> snapshot, ServiceConfig config = {});

  // Routes one GET request. |path| excludes the query string; |params| holds
  // the decoded query parameters.
  HttpResponse Handle(std::string_view path,
                      const std::multimap<std::string, std::string> &params) const;

  // Serves until Stop() is called. Returns false if the port cannot be
  // bound.
  bool Listen(const std::string &host, int port);
  // Binds an ephemeral port; returns it, or -1.
  int BindToAnyPort(const std::string &host);
  bool ListenAfterBind();
  void Stop();
  bool IsRunning() const;

  ~Service();

 private:
  struct Impl;
  std::shared_ptr<const Snapshot> snapshot_;
  ServiceConfig config_;
  StatementMap causes_;
  StatementMap effects_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace causemap

#endif  // CAUSEMAP_OBSERVATORY_H_
