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

// JSON-over-HTTP API for interactive exploration.
//
//   POST /graphs                          edge-list body -> session summary
//   GET  /graphs/{id}/counts              graph and selection counts
//   GET  /graphs/{id}/gfd?k=&scope=&of=   GFD of the graph or selection
//   POST /graphs/{id}/selection/ops       {"ops": [..], "seq": n}
//   GET  /graphs/{id}/edges/weights?pattern=
//   GET  /graphs/{id}/audit               selection cache vs full census
//   DELETE /graphs/{id}
//
// Errors are {"code", "message", "detail"} with status 400 (malformed
// request or graph), 404 (unknown session or route), 413 (graph over the
// size cap) or 422 (well-formed request with invalid values).
//
// Selection ops use original vertex ids:
//   {"op": "add_vertex", "vertex": 7}
//   {"op": "remove_edge", "u": 7, "v": 9}

#ifndef GCENSUS_SERVICE_H_
#define GCENSUS_SERVICE_H_

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "gcensus/json_io.h"
#include "gcensus/parallel.h"

namespace httplib {
class Server;
}

namespace gcensus {

struct ServiceOptions {
  std::size_t max_edges = 5'000'000;
  std::chrono::seconds session_ttl{3600};
  ParallelConfig parallel;
};

// Result of one API call, independent of the transport.
struct ApiResponse {
  int status = 200;
  Json body;
};

// Session store and request handlers. Thread-safe: sessions are isolated
// and selection updates within one session are serialized.
class CensusService {
 public:
  explicit CensusService(ServiceOptions options = {});
  ~CensusService();

  ApiResponse UploadGraph(const std::string& body);
  ApiResponse GetCounts(const std::string& id);
  ApiResponse GetGfd(const std::string& id, const std::string& k,
                     const std::string& scope, const std::string& of);
  ApiResponse UpdateSelection(const std::string& id, const std::string& body);
  ApiResponse GetEdgeWeights(const std::string& id,
                             const std::string& pattern);
  ApiResponse Audit(const std::string& id);
  ApiResponse DeleteGraph(const std::string& id);

  // Drops sessions idle for longer than the TTL; returns how many.
  std::size_t EvictExpired();
  std::size_t num_sessions() const;

  // Registers every route on `server`.
  void Register(httplib::Server& server);

 private:
  struct Session;
  std::shared_ptr<Session> Find(const std::string& id);

  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// Serves until the process is stopped. Returns false if binding fails.
bool RunServer(CensusService& service, const std::string& host, int port);

}  // namespace gcensus

#endif  // GCENSUS_SERVICE_H_
