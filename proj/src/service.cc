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

#include "gcensus/service.h"

#include <array>
#include <cstdio>
#include <exception>
#include <random>
#include <utility>
#include <vector>

#include <httplib.h>

#include "gcensus/errors.h"
#include "gcensus/gfd.h"
#include "gcensus/ranking.h"
#include "gcensus/selection.h"

namespace gcensus {

struct CensusService::Session {
  Session(std::string session_id, std::shared_ptr<const Graph> g)
      : id(std::move(session_id)), graph(g), selection(std::move(g)) {}

  const std::string id;
  const std::shared_ptr<const Graph> graph;
  GraphletFrequencies census;
  double census_seconds = 0;

  std::mutex mu;  // guards everything below
  std::optional<MicroCensusResult> micro;
  SelectionState selection;
  std::chrono::steady_clock::time_point last_access;
};

namespace {

using Clock = std::chrono::steady_clock;

ApiResponse Error(int status, const std::string& code,
                  const std::string& message, Json detail = Json::object()) {
  return {status, ErrorJson(code, message, std::move(detail))};
}

ApiResponse NotFound(const std::string& id) {
  Json detail = Json::object();
  detail["id"] = id;
  return Error(404, "not_found", "no graph session with this id", detail);
}

std::string NewSessionId() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard<std::mutex> lock(mu);
  std::array<char, 33> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx%016llx",
                static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return std::string(buf.data());
}

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Resolves an original vertex id field of a selection op.
VertexId VertexField(const Graph& g, const Json& op, const char* field) {
  if (!op.contains(field) || !op[field].is_number_integer()) {
    throw InvalidArgument(std::string("op needs an integer \"") + field +
                          "\"");
  }
  const auto original = op[field].get<std::int64_t>();
  const auto v = g.FindVertex(original);
  if (!v) {
    throw InvalidArgument("vertex " + std::to_string(original) +
                          " is not in the graph");
  }
  return *v;
}

SelectionOp ParseOp(const Graph& g, const Json& op) {
  if (!op.is_object() || !op.contains("op") || !op["op"].is_string()) {
    throw InvalidArgument("op must be an object with a string \"op\"");
  }
  const auto kind = ParseSelectionOpKind(op["op"].get<std::string>());
  if (!kind) {
    throw InvalidArgument("unknown op \"" + op["op"].get<std::string>() +
                          "\"");
  }
  SelectionOp out;
  out.kind = *kind;
  if (*kind == SelectionOpKind::kAddVertex ||
      *kind == SelectionOpKind::kRemoveVertex) {
    out.a = VertexField(g, op, "vertex");
  } else {
    out.a = VertexField(g, op, "u");
    out.b = VertexField(g, op, "v");
    if (!g.HasEdge(out.a, out.b)) {
      throw InvalidArgument("(" + op["u"].dump() + ", " + op["v"].dump() +
                            ") is not an edge of the graph");
    }
  }
  return out;
}

}  // namespace

CensusService::CensusService(ServiceOptions options)
    : options_(std::move(options)) {
  options_.parallel.Validate();
}

CensusService::~CensusService() = default;

std::shared_ptr<CensusService::Session> CensusService::Find(
    const std::string& id) {
  EvictExpired();
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  return it->second;
}

std::size_t CensusService::EvictExpired() {
  const auto now = Clock::now();
  std::vector<std::shared_ptr<Session>> live;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [id, s] : sessions_) live.push_back(s);
  }
  std::vector<std::string> expired;
  for (const auto& s : live) {
    std::lock_guard<std::mutex> lock(s->mu);
    if (now - s->last_access > options_.session_ttl) expired.push_back(s->id);
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& id : expired) sessions_.erase(id);
  return expired.size();
}

std::size_t CensusService::num_sessions() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

ApiResponse CensusService::UploadGraph(const std::string& body) {
  EvictExpired();
  std::shared_ptr<const Graph> graph;
  try {
    graph = std::make_shared<const Graph>(LoadEdgeList(body));
  } catch (const ParseError& e) {
    Json detail = Json::object();
    detail["line"] = e.line();
    return Error(400, "parse_error", e.what(), detail);
  }
  if (graph->num_edges() > options_.max_edges) {
    Json detail = Json::object();
    detail["edges"] = graph->num_edges();
    detail["max_edges"] = options_.max_edges;
    return Error(413, "too_large", "graph exceeds the edge cap", detail);
  }

  auto session = std::make_shared<Session>(NewSessionId(), graph);
  const auto start = Clock::now();
  session->census = GraphletCensus(*graph, options_.parallel);
  session->census_seconds = SecondsSince(start);
  session->last_access = Clock::now();
  {
    std::lock_guard<std::mutex> lock(mu_);
    sessions_[session->id] = session;
  }

  Json body_out = Json::object();
  body_out["id"] = session->id;
  body_out["n"] = graph->num_vertices();
  body_out["m"] = graph->num_edges();
  body_out["counts"] = CountsToJson(session->census);
  body_out["runtime_seconds"] = session->census_seconds;
  return {201, std::move(body_out)};
}

ApiResponse CensusService::GetCounts(const std::string& id) {
  const auto s = Find(id);
  if (!s) return NotFound(id);
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = Clock::now();
  Json out = Json::object();
  out["id"] = id;
  out["graph"] = CensusToJson(s->census);
  out["selection"] = CensusToJson(s->selection.counts());
  return {200, std::move(out)};
}

ApiResponse CensusService::GetGfd(const std::string& id, const std::string& k,
                                  const std::string& scope,
                                  const std::string& of) {
  const auto s = Find(id);
  if (!s) return NotFound(id);
  int k_value = 4;
  if (!k.empty()) {
    if (k != "3" && k != "4") {
      return Error(422, "invalid_argument", "k must be 3 or 4");
    }
    k_value = k[0] - '0';
  }
  const auto scope_value =
      scope.empty() ? std::optional(GfdScope::kConnected) : ParseGfdScope(scope);
  if (!scope_value) {
    return Error(422, "invalid_argument",
                 "scope must be \"connected\" or \"all\"");
  }
  if (!of.empty() && of != "graph" && of != "selection") {
    return Error(422, "invalid_argument",
                 "of must be \"graph\" or \"selection\"");
  }
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = Clock::now();
  const GraphletFrequencies& f =
      of == "selection" ? s->selection.counts() : s->census;
  Json out = GfdToJson(Gfd(f, k_value, *scope_value));
  out["of"] = of.empty() ? "graph" : of;
  return {200, std::move(out)};
}

ApiResponse CensusService::UpdateSelection(const std::string& id,
                                           const std::string& body) {
  const auto s = Find(id);
  if (!s) return NotFound(id);
  Json request;
  try {
    request = Json::parse(body);
  } catch (const std::exception& e) {
    return Error(400, "invalid_json", e.what());
  }
  if (!request.is_object() || !request.contains("ops") ||
      !request["ops"].is_array()) {
    return Error(400, "invalid_request", "body must be {\"ops\": [...]}");
  }

  std::vector<SelectionOp> ops;
  const auto& raw_ops = request["ops"];
  for (std::size_t i = 0; i < raw_ops.size(); ++i) {
    try {
      ops.push_back(ParseOp(*s->graph, raw_ops[i]));
    } catch (const InvalidArgument& e) {
      Json detail = Json::object();
      detail["index"] = i;
      return Error(422, "invalid_op", e.what(), detail);
    }
  }

  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = Clock::now();
  const auto start = Clock::now();
  const SelectionUpdate update = s->selection.ApplyAll(ops);
  const double seconds = SecondsSince(start);

  Json out = Json::object();
  out["id"] = id;
  if (request.contains("seq")) out["seq"] = request["seq"];
  out["selection"] = CensusToJson(update.counts);
  out["deltas"] = DeltasToJson(update.deltas);
  out["recomputed_edges"] = update.recomputed_edges;
  out["update_seconds"] = seconds;
  return {200, std::move(out)};
}

ApiResponse CensusService::GetEdgeWeights(const std::string& id,
                                          const std::string& pattern) {
  const auto s = Find(id);
  if (!s) return NotFound(id);
  const auto p = ParseRankPattern(pattern.empty() ? "star4" : pattern);
  if (!p) {
    Json detail = Json::object();
    detail["pattern"] = pattern;
    return Error(422, "invalid_argument",
                 "pattern must be one of star4, clique4, triangle, cycle4",
                 detail);
  }
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = Clock::now();
  if (!s->micro) s->micro = MicroCensusAll(*s->graph, options_.parallel);
  const auto weights = EdgeWeights(s->micro->edges, *p);
  Json out = Json::object();
  out["pattern"] = std::string(PatternName(*p));
  out["class"] = std::string(Key(PatternClass(*p)));
  out["multiplicity"] = PatternMultiplicity(*p);
  out["edges"] = WeightsToJson(*s->graph, weights);
  return {200, std::move(out)};
}

ApiResponse CensusService::Audit(const std::string& id) {
  const auto s = Find(id);
  if (!s) return NotFound(id);
  std::lock_guard<std::mutex> lock(s->mu);
  s->last_access = Clock::now();
  const AuditReport report = s->selection.Audit(options_.parallel);
  Json out = Json::object();
  out["consistent"] = report.consistent;
  out["cached"] = CensusToJson(report.cached);
  out["recomputed"] = CensusToJson(report.recomputed);
  if (!report.consistent) {
    return Error(500, "consistency_error",
                 "selection counts differ from a full census", out);
  }
  return {200, std::move(out)};
}

ApiResponse CensusService::DeleteGraph(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  if (sessions_.erase(id) == 0) return NotFound(id);
  Json out = Json::object();
  out["id"] = id;
  out["deleted"] = true;
  return {200, std::move(out)};
}

namespace {

void Send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

// Wraps a handler so unexpected failures become JSON errors.
template <class F>
httplib::Server::Handler Guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      Send(res, f(req));
    } catch (const ConsistencyError& e) {
      Send(res, Error(500, "consistency_error", e.what()));
    } catch (const OverflowError& e) {
      Send(res, Error(413, "overflow", e.what()));
    } catch (const SizeError& e) {
      Send(res, Error(413, "too_large", e.what()));
    } catch (const InvalidArgument& e) {
      Send(res, Error(422, "invalid_argument", e.what()));
    } catch (const std::exception& e) {
      Send(res, Error(500, "internal_error", e.what()));
    }
  };
}

std::string Param(const httplib::Request& req, const char* name) {
  return req.has_param(name) ? req.get_param_value(name) : std::string();
}

}  // namespace

void CensusService::Register(httplib::Server& server) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Headers", "Content-Type"},
      {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  server.Post("/graphs", Guarded([this](const httplib::Request& req) {
                return UploadGraph(req.body);
              }));
  server.Get(R"(/graphs/([0-9a-f]+)/counts)",
             Guarded([this](const httplib::Request& req) {
               return GetCounts(req.matches[1]);
             }));
  server.Get(R"(/graphs/([0-9a-f]+)/gfd)",
             Guarded([this](const httplib::Request& req) {
               return GetGfd(req.matches[1], Param(req, "k"),
                             Param(req, "scope"), Param(req, "of"));
             }));
  server.Post(R"(/graphs/([0-9a-f]+)/selection/ops)",
              Guarded([this](const httplib::Request& req) {
                return UpdateSelection(req.matches[1], req.body);
              }));
  server.Get(R"(/graphs/([0-9a-f]+)/edges/weights)",
             Guarded([this](const httplib::Request& req) {
               return GetEdgeWeights(req.matches[1], Param(req, "pattern"));
             }));
  server.Get(R"(/graphs/([0-9a-f]+)/audit)",
             Guarded([this](const httplib::Request& req) {
               return Audit(req.matches[1]);
             }));
  server.Delete(R"(/graphs/([0-9a-f]+))",
                Guarded([this](const httplib::Request& req) {
                  return DeleteGraph(req.matches[1]);
                }));

  // Fills in a JSON body for errors raised by the transport itself
  // (unknown route, payload too large).
  server.set_error_handler(
      [](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) {
          return httplib::Server::HandlerResponse::Unhandled;
        }
        if (res.status == 404) {
          Send(res, Error(404, "not_found", "no such endpoint"));
        } else if (res.status == 413) {
          Send(res, Error(413, "too_large", "request body too large"));
        } else {
          Send(res, Error(res.status, "http_error", "request failed"));
        }
        return httplib::Server::HandlerResponse::Handled;
      });
}

bool RunServer(CensusService& service, const std::string& host, int port) {
  httplib::Server server;
  service.Register(server);
  return server.listen(host, port);
}

}  // namespace gcensus
