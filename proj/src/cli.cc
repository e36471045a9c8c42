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

#include "causemap/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "causemap/base.h"
#include "causemap/observatory.h"

namespace causemap {

namespace {

struct GraphOptions {
  std::string snapshot;
  std::string role = "cause";
  double sample = 1.0;
  uint64_t seed = 0;
  size_t min_weight = 1;
  size_t iterations = kDefaultIterations;
  std::string format = "json";
  std::string out;
  std::string cause;
  std::string user_a;
  std::string user_b;
  size_t top = 0;
};

void AddGraphOptions(CLI::App *cmd, GraphOptions *o, bool with_role) {
  cmd->add_option("--snapshot", o->snapshot, "Snapshot file")->required();
  if (with_role) {
    cmd->add_option("--role", o->role, "cause or effect")
        ->check(CLI::IsMember({"cause", "effect"}, CLI::ignore_case));
  }
  cmd->add_option("--sample", o->sample, "Sample fraction in (0, 1]");
  cmd->add_option("--seed", o->seed, "Sampling and layout seed");
  cmd->add_option("--min-weight", o->min_weight, "Minimum shared lemmas per edge");
  cmd->add_option("--iterations", o->iterations, "Layout iterations");
  cmd->add_option("--format", o->format, "json or gexf")
      ->check(CLI::IsMember({"json", "gexf"}));
  cmd->add_option("--out", o->out, "Output file (default: stdout)");
}

void WriteFile(const std::string &path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("cannot write " + path);
}

Timestamp Now() {
  // Honors SOURCE_DATE_EPOCH so that snapshot files can be reproduced.
  if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char *end = nullptr;
    long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') return Timestamp{v};
  }
  auto now = std::chrono::system_clock::now().time_since_epoch();
  return Timestamp{std::chrono::duration_cast<std::chrono::seconds>(now).count()};
}

int RunIngest(const std::string &in_path, const std::string &out_path,
              size_t cap, std::ostream &err) {
  IngestConfig config;
  config.max_comments_per_article = cap;
  Corpus corpus;
  if (in_path == "-") {
    corpus = IngestJsonl(std::cin, config);
  } else {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw DataError("cannot open " + in_path);
    corpus = IngestJsonl(in, config);
  }
  const IngestReport &report = corpus.report();
  err << "lines " << report.lines << ", accepted " << report.accepted
      << ", rejected " << report.rejected << "\n";
  for (const auto &[reason, count] : report.CountsByReason()) {
    err << "  " << reason << ": " << count << "\n";
  }
  Snapshot snapshot = MakeSnapshot(std::move(corpus), config, Now());
  err << "relations " << snapshot.relations.size() << "\n";
  SaveSnapshotFile(snapshot, out_path);
  return kExitOk;
}

int RunGraph(ViewKind kind, const GraphOptions &o, std::ostream &out,
             std::ostream &err) {
  Snapshot snapshot = LoadSnapshotFile(o.snapshot);
  ViewSpec spec;
  spec.kind = kind;
  spec.role = *ParseRole(o.role);
  spec.sample_fraction = o.sample;
  spec.seed = o.seed;
  spec.min_weight = o.min_weight;
  spec.iterations = o.iterations;
  if (kind == ViewKind::kMicro) spec.cause_query = o.cause;
  if (kind == ViewKind::kOverlay) {
    if (!o.user_a.empty() && !o.user_b.empty()) {
      spec.user_a = o.user_a;
      spec.user_b = o.user_b;
    } else if (o.top >= 2) {
      std::vector<std::string> top =
          TopCommenters(snapshot.corpus, snapshot.relations, o.top);
      if (top.size() < 2) throw ArgumentError("fewer than two commenters");
      spec.user_a = o.user_a.empty() ? top[0] : o.user_a;
      spec.user_b = o.user_b.empty() ? (top[0] == *spec.user_a ? top[1] : top[0])
                                     : o.user_b;
      err << "overlay users " << *spec.user_a << " and " << *spec.user_b << "\n";
    } else {
      throw ArgumentError("overlay needs --user-a and --user-b, or --top N >= 2");
    }
  }
  std::string bytes = RenderView(
      snapshot, spec, o.format == "gexf" ? ViewFormat::kGexf : ViewFormat::kJson);
  if (o.out.empty()) {
    out << bytes;
    if (o.format == "json") out << "\n";
  } else {
    WriteFile(o.out, bytes);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Causation frames and belief graphs from comment corpora",
               "causemap"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string in_path, out_path;
  size_t cap = 200;
  CLI::App *ingest = app.add_subcommand("ingest", "JSONL corpus to snapshot");
  ingest->add_option("--in", in_path, "JSONL input ('-' for stdin)")->required();
  ingest->add_option("--out", out_path, "Snapshot file to write")->required();
  ingest->add_option("--cap", cap, "Maximum comments per article");

  std::string snapshot_path;
  bool compact = false;
  std::string relations_out;
  CLI::App *extract = app.add_subcommand("extract", "Print causal relations");
  extract->add_option("--snapshot", snapshot_path, "Snapshot file")->required();
  extract->add_flag("--paper-shape", compact,
                    "Only utterance, cause and effect");
  extract->add_option("--out", relations_out, "Output file (default: stdout)");

  GraphOptions macro_opts, micro_opts, overlay_opts;
  CLI::App *graph = app.add_subcommand("graph", "Export a belief graph view");
  graph->require_subcommand(1);
  CLI::App *macro = graph->add_subcommand("macro", "Landscape of statements");
  AddGraphOptions(macro, &macro_opts, true);
  CLI::App *micro = graph->add_subcommand("micro", "Effects of matching causes");
  AddGraphOptions(micro, &micro_opts, false);
  micro->add_option("--cause", micro_opts.cause, "Cause expression")->required();
  CLI::App *overlay = graph->add_subcommand("overlay", "Two commenters compared");
  AddGraphOptions(overlay, &overlay_opts, true);
  overlay->add_option("--user-a", overlay_opts.user_a, "First commenter");
  overlay->add_option("--user-b", overlay_opts.user_b, "Second commenter");
  overlay->add_option("--top", overlay_opts.top,
                      "Fill missing users from the N most active commenters");

  std::string serve_snapshot, host = "127.0.0.1", static_dir;
  int port = 8080;
  size_t node_cap = 5000;
  CLI::App *serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--snapshot", serve_snapshot, "Snapshot file")->required();
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--static", static_dir, "Directory of explorer assets");
  serve->add_option("--node-cap", node_cap, "Largest graph served");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return RunIngest(in_path, out_path, cap, err);
    if (*extract) {
      Snapshot snapshot = LoadSnapshotFile(snapshot_path);
      std::string json = RelationsToJson(snapshot.relations, compact);
      if (relations_out.empty()) {
        out << json << "\n";
      } else {
        WriteFile(relations_out, json);
      }
      return kExitOk;
    }
    if (*macro) return RunGraph(ViewKind::kMacro, macro_opts, out, err);
    if (*micro) return RunGraph(ViewKind::kMicro, micro_opts, out, err);
    if (*overlay) return RunGraph(ViewKind::kOverlay, overlay_opts, out, err);
    if (*serve) {
      auto snapshot = std::make_shared<const Snapshot>(LoadSnapshotFile(serve_snapshot));
      ServiceConfig config;
      config.node_cap = node_cap;
      config.static_dir = static_dir;
      Service service(snapshot, config);
      err << "serving on http://" << host << ":" << port << "\n";
      if (!service.Listen(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << "\n";
        return kExitData;
      }
      return kExitOk;
    }
  } catch (const ArgumentError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace causemap
