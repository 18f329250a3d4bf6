// Copyright 2026 The gcensus Authors
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

#include "gcensus/cli.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcensus/bench.h"
#include "gcensus/census.h"
#include "gcensus/errors.h"
#include "gcensus/features.h"
#include "gcensus/gfd.h"
#include "gcensus/json_io.h"
#include "gcensus/ranking.h"
#include "gcensus/service.h"

namespace gcensus {
namespace {

struct CommonFlags {
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  unsigned threads = DefaultWorkers();
  std::size_t batch = 64;
  std::string ordering = "degree";
  std::optional<std::int64_t> max_vertex_id;

  ParallelConfig Parallel() const {
    ParallelConfig config;
    config.workers = threads;
    config.batch_size = batch;
    config.ordering = *ParseEdgeOrdering(ordering);
    config.Validate();
    return config;
  }
  ParseOptions Parse() const {
    ParseOptions options;
    options.max_vertex_id = max_vertex_id;
    return options;
  }
};

void AddInput(CLI::App* cmd, CommonFlags& flags, bool many) {
  // Existence is checked on load so a missing file is an I/O error (exit 1)
  // rather than a usage error.
  auto* opt = cmd->add_option("-i,--input", flags.inputs,
                              many ? "Edge-list files" : "Edge-list file");
  if (!many) opt->expected(1);
}

void AddOutput(CLI::App* cmd, CommonFlags& flags, const std::string& formats,
               const std::string& default_format) {
  cmd->add_option("-o,--output", flags.output, "Write results to this file");
  flags.format = default_format;
  std::vector<std::string> allowed;
  std::stringstream ss(formats);
  for (std::string f; std::getline(ss, f, ',');) allowed.push_back(f);
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

void AddParallel(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--threads", flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--batch", flags.batch, "Edges claimed per scheduling step")
      ->check(CLI::Range(std::size_t{1}, ParallelConfig::kMaxBatchSize))
      ->capture_default_str();
  cmd->add_option("--ordering", flags.ordering, "Edge processing order")
      ->check(CLI::IsMember({"input", "degree", "degree-desc"}))
      ->capture_default_str();
}

void AddParse(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--max-vertex-id", flags.max_vertex_id,
                  "Treat every id up to this value as a vertex (keeps "
                  "isolated vertices)");
}

// Writes to -o when given, otherwise to `out`.
void Emit(const CommonFlags& flags, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (flags.output.empty()) {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(flags.output);
  if (!file) throw std::runtime_error("cannot write " + flags.output);
  write(file);
  if (!file) throw std::runtime_error("error writing " + flags.output);
}

Graph LoadInput(const CommonFlags& flags) {
  if (flags.inputs.empty()) throw InvalidArgument("--input is required");
  return LoadEdgeListFile(flags.inputs.front(), flags.Parse());
}

// --- subcommands --------------------------------------------------------

struct CountFlags : CommonFlags {
  std::string micro;
  bool no_timing = false;
};

int RunCount(const CountFlags& flags, std::ostream& out) {
  const Graph g = LoadInput(flags);
  const ParallelConfig config = flags.Parallel();
  const auto start = std::chrono::steady_clock::now();
  GraphletFrequencies f;
  std::vector<EdgeMicroCounts> micro;
  if (!flags.micro.empty()) {
    auto result = MicroCensusAll(g, config);
    f = result.frequencies;
    micro = std::move(result.edges);
  } else {
    f = GraphletCensus(g, config);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!flags.micro.empty()) {
    std::ofstream file(flags.micro);
    if (!file) throw std::runtime_error("cannot write " + flags.micro);
    WriteMicroCsv(g, micro, file);
  }
  Emit(flags, out, [&](std::ostream& os) {
    if (flags.format == "csv") {
      os << "class,name,count\n";
      for (GraphletClass c : AllClasses()) {
        os << Key(c) << ',' << Name(c) << ',' << ToString(f[c]) << '\n';
      }
      return;
    }
    os << CensusToJson(f, flags.no_timing ? std::nullopt
                                          : std::optional<double>(seconds))
              .dump(2)
       << '\n';
  });
  return kExitOk;
}

struct GfdFlags : CommonFlags {
  int k = 4;
  std::string scope = "connected";
  std::string metric = "euclidean";
};

int RunGfd(const GfdFlags& flags, std::ostream& out) {
  if (flags.inputs.empty()) throw InvalidArgument("--input is required");
  const GfdScope scope = *ParseGfdScope(flags.scope);
  std::vector<GfdVector> gfds;
  for (const auto& path : flags.inputs) {
    const Graph g = LoadEdgeListFile(path, flags.Parse());
    gfds.push_back(Gfd(GraphletCensus(g, flags.Parallel()), flags.k, scope));
  }
  Json result;
  if (gfds.size() == 1) {
    result = Json::object();
    result["input"] = flags.inputs.front();
    const Json body = GfdToJson(gfds.front());
    for (const auto& [key, value] : body.items()) result[key] = value;
  } else {
    const DistanceMetric metric = *ParseDistanceMetric(flags.metric);
    result = Json::object();
    result["metric"] = flags.metric;
    Json list = Json::array();
    for (std::size_t i = 0; i < gfds.size(); ++i) {
      Json item = Json::object();
      item["input"] = flags.inputs[i];
      const Json body = GfdToJson(gfds[i]);
      for (const auto& [key, value] : body.items()) item[key] = value;
      list.push_back(std::move(item));
    }
    result["gfds"] = std::move(list);
    Json distances = Json::array();
    for (const auto& a : gfds) {
      Json row = Json::array();
      for (const auto& b : gfds) row.push_back(GfdDistance(a, b, metric));
      distances.push_back(std::move(row));
    }
    result["distances"] = std::move(distances);
  }
  Emit(flags, out, [&](std::ostream& os) { os << result.dump(2) << '\n'; });
  return kExitOk;
}

struct RankFlags : CommonFlags {
  std::string pattern = "star4";
  std::size_t top = 10;
};

int RunRank(const RankFlags& flags, std::ostream& out) {
  const Graph g = LoadInput(flags);
  const RankPattern pattern = *ParseRankPattern(flags.pattern);
  const auto ranked = RankEdges(g, pattern, flags.top, flags.Parallel());
  Emit(flags, out, [&](std::ostream& os) {
    if (flags.format == "json") {
      Json result = Json::object();
      result["pattern"] = flags.pattern;
      result["edges"] = WeightsToJson(g, ranked);
      os << result.dump(2) << '\n';
    } else {
      WriteRankingCsv(g, ranked, os);
    }
  });
  return kExitOk;
}

struct FeatureFlags : CommonFlags {
  bool log_scale = false;
  bool normalize = false;
};

int RunFeatures(const FeatureFlags& flags, std::ostream& out,
                std::ostream& err) {
  if (flags.inputs.empty()) throw InvalidArgument("--input is required");
  FeatureOptions options;
  options.log_scale = flags.log_scale;
  options.normalize = flags.normalize;
  options.parallel = flags.Parallel();
  std::vector<GraphSource> sources;
  const ParseOptions parse = flags.Parse();
  for (const auto& path : flags.inputs) {
    sources.push_back({path, [path, parse] {
                         return LoadEdgeListFile(path, parse);
                       }});
  }
  const FeatureMatrix matrix = BuildFeatureMatrix(sources, options);
  for (const auto& s : matrix.skipped) {
    Json detail = Json::object();
    detail["input"] = s.name;
    err << ErrorJson("skipped", s.reason, detail).dump() << '\n';
  }
  Emit(flags, out,
       [&](std::ostream& os) { WriteFeatureCsv(matrix, options, os); });
  return matrix.rows.empty() ? kExitIoError : kExitOk;
}

struct BenchFlags : CommonFlags {
  std::vector<unsigned> workers = {1, 2, 4, 8};
  int repetitions = 5;
  std::uint64_t synthetic_edges = 0;
  std::uint64_t seed = 1;
};

int RunBench(const BenchFlags& flags, std::ostream& out) {
  Graph g;
  if (flags.synthetic_edges > 0) {
    // Uniform random graph with average degree 10.
    const auto n = static_cast<VertexId>(
        std::max<std::uint64_t>(2, flags.synthetic_edges / 5));
    std::mt19937_64 rng(flags.seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(flags.synthetic_edges);
    for (std::uint64_t i = 0; i < flags.synthetic_edges; ++i) {
      pairs.emplace_back(pick(rng), pick(rng));
    }
    g = Graph::FromEdges(n, pairs);
  } else {
    g = LoadInput(flags);
  }
  ParallelConfig base = flags.Parallel();
  const auto rows = MeasureSpeedup(g, flags.workers, base, flags.repetitions);
  Emit(flags, out, [&](std::ostream& os) {
    if (flags.format == "json") {
      Json result = Json::object();
      result["n"] = g.num_vertices();
      result["m"] = g.num_edges();
      result["repetitions"] = flags.repetitions;
      Json table = Json::array();
      for (const auto& r : rows) {
        Json row = Json::object();
        row["workers"] = r.workers;
        row["seconds"] = r.seconds;
        row["speedup"] = r.speedup;
        table.push_back(std::move(row));
      }
      result["rows"] = std::move(table);
      os << result.dump(2) << '\n';
    } else {
      WriteSpeedupCsv(rows, os);
    }
  });
  return kExitOk;
}

struct ServeFlags : CommonFlags {
  std::string host = "127.0.0.1";
  int port = 8080;
  long ttl_seconds = 3600;
  std::size_t max_edges = 5'000'000;
};

int RunServe(const ServeFlags& flags, std::ostream& out) {
  ServiceOptions options;
  options.max_edges = flags.max_edges;
  options.session_ttl = std::chrono::seconds(flags.ttl_seconds);
  options.parallel = flags.Parallel();
  CensusService service(options);
  Json banner = Json::object();
  banner["host"] = flags.host;
  banner["port"] = flags.port;
  if (!flags.inputs.empty()) {
    std::ifstream file(flags.inputs.front());
    std::stringstream body;
    body << file.rdbuf();
    const ApiResponse r = service.UploadGraph(body.str());
    if (r.status != 201) {
      throw ParseError(r.body.value("message", "cannot load graph"),
                       r.body["detail"].value("line", std::size_t{0}));
    }
    banner["id"] = r.body["id"];
  }
  out << banner.dump() << std::endl;
  if (!RunServer(service, flags.host, flags.port)) {
    throw std::runtime_error("cannot listen on " + flags.host + ":" +
                             std::to_string(flags.port));
  }
  return kExitOk;
}

int Fail(std::ostream& err, int code, const std::string& kind,
         const std::string& message, Json detail = Json::object()) {
  err << ErrorJson(kind, message, std::move(detail)).dump() << std::endl;
  return code;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact census of 2-, 3- and 4-vertex graphlets", "gcensus"};
  app.require_subcommand(1);

  CountFlags count;
  auto* count_cmd = app.add_subcommand("count", "Count all 17 graphlets");
  AddInput(count_cmd, count, false);
  AddOutput(count_cmd, count, "json,csv", "json");
  AddParallel(count_cmd, count);
  AddParse(count_cmd, count);
  count_cmd->add_option("--micro", count.micro,
                        "Also write per-edge role counts (CSV) here");
  count_cmd->add_flag("--no-timing", count.no_timing,
                      "Omit runtime_seconds (byte-stable output)");

  GfdFlags gfd;
  auto* gfd_cmd = app.add_subcommand(
      "gfd", "Graphlet frequency distribution; pairwise distances when "
             "several inputs are given");
  AddInput(gfd_cmd, gfd, true);
  AddOutput(gfd_cmd, gfd, "json", "json");
  AddParallel(gfd_cmd, gfd);
  AddParse(gfd_cmd, gfd);
  gfd_cmd->add_option("--k", gfd.k, "Graphlet size")
      ->check(CLI::IsMember({3, 4}))
      ->capture_default_str();
  gfd_cmd->add_option("--scope", gfd.scope, "Class subset")
      ->check(CLI::IsMember({"connected", "connected-only", "all"}))
      ->capture_default_str();
  gfd_cmd->add_option("--metric", gfd.metric, "Distance between GFDs")
      ->check(CLI::IsMember({"euclidean", "cosine"}))
      ->capture_default_str();

  RankFlags rank;
  auto* rank_cmd =
      app.add_subcommand("rank", "Rank edges by a per-edge pattern count");
  AddInput(rank_cmd, rank, false);
  AddOutput(rank_cmd, rank, "csv,json", "csv");
  AddParallel(rank_cmd, rank);
  AddParse(rank_cmd, rank);
  rank_cmd->add_option("--pattern", rank.pattern, "Pattern to weight by")
      ->check(CLI::IsMember({"star4", "clique4", "triangle", "cycle4"}))
      ->capture_default_str();
  rank_cmd->add_option("--top", rank.top, "Number of edges (0 = all)")
      ->capture_default_str();

  FeatureFlags features;
  auto* features_cmd = app.add_subcommand(
      "features", "One row of 17 graphlet counts per input graph");
  AddInput(features_cmd, features, true);
  features_cmd->add_option("inputs", features.inputs, "More input files");
  AddOutput(features_cmd, features, "csv", "csv");
  AddParallel(features_cmd, features);
  AddParse(features_cmd, features);
  features_cmd->add_flag("--log", features.log_scale, "log(1 + count)");
  features_cmd->add_flag("--normalize", features.normalize,
                         "Normalize each graphlet size to sum 1");

  BenchFlags bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Median-of-N census time per worker count");
  AddInput(bench_cmd, bench, false);
  AddOutput(bench_cmd, bench, "csv,json", "csv");
  AddParallel(bench_cmd, bench);
  AddParse(bench_cmd, bench);
  bench_cmd->add_option("--workers", bench.workers, "Worker counts to time")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--repetitions", bench.repetitions, "Runs per count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--synthetic-edges", bench.synthetic_edges,
                        "Time a random graph with this many edges instead "
                        "of an input file");
  bench_cmd->add_option("--seed", bench.seed, "Seed for --synthetic-edges")
      ->capture_default_str();

  ServeFlags serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  AddInput(serve_cmd, serve, false);
  AddParallel(serve_cmd, serve);
  serve_cmd->add_option("--host", serve.host, "Listen address")
      ->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Listen port")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  serve_cmd->add_option("--ttl", serve.ttl_seconds,
                        "Idle seconds before a session is dropped")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve_cmd->add_option("--max-edges", serve.max_edges,
                        "Largest graph accepted for upload")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Fail(err, kExitUsage, "usage_error", e.what());
  }

  try {
    if (count_cmd->parsed()) return RunCount(count, out);
    if (gfd_cmd->parsed()) return RunGfd(gfd, out);
    if (rank_cmd->parsed()) return RunRank(rank, out);
    if (features_cmd->parsed()) return RunFeatures(features, out, err);
    if (bench_cmd->parsed()) return RunBench(bench, out);
    if (serve_cmd->parsed()) return RunServe(serve, out);
  } catch (const ParseError& e) {
    Json detail = Json::object();
    detail["line"] = e.line();
    return Fail(err, kExitIoError, "parse_error", e.what(), detail);
  } catch (const ConsistencyError& e) {
    return Fail(err, kExitConsistency, "consistency_error", e.what());
  } catch (const InvalidArgument& e) {
    return Fail(err, kExitUsage, "usage_error", e.what());
  } catch (const SizeError& e) {
    return Fail(err, kExitIoError, "size_error", e.what());
  } catch (const OverflowError& e) {
    return Fail(err, kExitIoError, "overflow_error", e.what());
  } catch (const std::exception& e) {
    return Fail(err, kExitIoError, "io_error", e.what());
  }
  return Fail(err, kExitUsage, "usage_error", "no subcommand");
}

}  // namespace gcensus
