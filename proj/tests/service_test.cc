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

#include <chrono>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "gcensus/graph.h"
#include "test_graphs.h"

namespace gcensus {
namespace {

std::string EdgeListText(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

// Runs a real server on an ephemeral port for the lifetime of the fixture.
class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override { Start({}); }
  void TearDown() override { Stop(); }

  void Start(ServiceOptions options) {
    service_ = std::make_unique<CensusService>(options);
    server_ = std::make_unique<httplib::Server>();
    service_->Register(*server_);
    port_ = server_->bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void Stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
    client_.reset();
    server_.reset();
    service_.reset();
  }

  // Returns {status, parsed body}.
  std::pair<int, Json> Post(const std::string& path, const std::string& body,
                            const char* type = "text/plain") {
    auto res = client_->Post(path, body, type);
    EXPECT_TRUE(res) << path;
    if (!res) return {0, Json()};
    return {res->status, Json::parse(res->body)};
  }
  std::pair<int, Json> Get(const std::string& path) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res) << path;
    if (!res) return {0, Json()};
    return {res->status, Json::parse(res->body)};
  }

  std::string Upload(const Graph& g) {
    auto [status, body] = Post("/graphs", EdgeListText(g));
    EXPECT_EQ(status, 201) << body.dump();
    return body.value("id", "");
  }

  std::pair<int, Json> Ops(const std::string& id, const std::string& ops) {
    return Post("/graphs/" + id + "/selection/ops", ops, "application/json");
  }

  std::unique_ptr<CensusService> service_;
  std::unique_ptr<httplib::Server> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServiceTest, UploadReturnsCounts) {
  auto [status, body] = Post("/graphs", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  ASSERT_EQ(status, 201);
  EXPECT_EQ(body["id"].get<std::string>().size(), 32u);
  EXPECT_EQ(body["n"], 4);
  EXPECT_EQ(body["m"], 6);
  EXPECT_EQ(body["counts"]["g4_1"], 1);
  EXPECT_EQ(body["counts"]["g3_1"], 4);
  EXPECT_TRUE(body["runtime_seconds"].is_number());

  auto [count_status, counts] = Get("/graphs/" + body["id"].get<std::string>() +
                                    "/counts");
  ASSERT_EQ(count_status, 200);
  EXPECT_EQ(counts["graph"]["counts"]["g4_1"], 1);
  EXPECT_EQ(counts["selection"]["n"], 0);
  EXPECT_EQ(counts["selection"]["counts"]["g4_1"], 0);
}

TEST_F(ServiceTest, UploadErrors) {
  auto [bad_status, bad] = Post("/graphs", "0 1\n1 x\n");
  EXPECT_EQ(bad_status, 400);
  EXPECT_EQ(bad["code"], "parse_error");
  EXPECT_EQ(bad["detail"]["line"], 2);

  auto [empty_status, empty] = Post("/graphs", "");
  EXPECT_EQ(empty_status, 400);
  EXPECT_EQ(empty["code"], "parse_error");

  auto [missing_status, missing] = Get("/graphs/00ff/counts");
  EXPECT_EQ(missing_status, 404);
  EXPECT_EQ(missing["code"], "not_found");

  auto [route_status, route] = Get("/nowhere");
  EXPECT_EQ(route_status, 404);
  EXPECT_TRUE(route.contains("code"));

  Stop();
  ServiceOptions small;
  small.max_edges = 5;
  Start(small);
  auto [big_status, big] = Post("/graphs", EdgeListText(testing::Complete(4)));
  EXPECT_EQ(big_status, 413);
  EXPECT_EQ(big["code"], "too_large");
  EXPECT_EQ(big["detail"]["max_edges"], 5);
}

TEST_F(ServiceTest, SelectionUpdatesMatchCensus) {
  const std::string id = Upload(testing::Complete(4));
  auto [status, body] = Ops(id,
                            R"({"seq": 7, "ops": [{"op": "add_vertex", "vertex": 0},
                                {"op": "add_vertex", "vertex": 1},
                                {"op": "add_vertex", "vertex": 2},
                                {"op": "add_vertex", "vertex": 3}]})");
  ASSERT_EQ(status, 200) << body.dump();
  EXPECT_EQ(body["seq"], 7);
  EXPECT_EQ(body["selection"]["counts"]["g4_1"], 1);
  EXPECT_EQ(body["deltas"]["g4_1"], 1);
  EXPECT_TRUE(body["update_seconds"].is_number());

  // Re-adding is a no-op.
  auto [again_status, again] =
      Ops(id, R"({"ops": [{"op": "add_vertex", "vertex": 2}]})");
  ASSERT_EQ(again_status, 200);
  EXPECT_EQ(again["deltas"]["g4_1"], 0);
  EXPECT_EQ(again["selection"]["counts"]["g4_1"], 1);

  auto [drop_status, drop] =
      Ops(id, R"({"ops": [{"op": "remove_vertex", "vertex": 3}]})");
  ASSERT_EQ(drop_status, 200);
  EXPECT_EQ(drop["selection"]["counts"]["g3_1"], 1);
  EXPECT_EQ(drop["selection"]["counts"]["g4_1"], 0);
  EXPECT_EQ(drop["deltas"]["g4_1"], -1);
  EXPECT_EQ(drop["selection"]["counts"]["g2_1"], 3);

  auto [edge_status, edge] =
      Ops(id, R"({"ops": [{"op": "remove_edge", "u": 0, "v": 1}]})");
  ASSERT_EQ(edge_status, 200);
  EXPECT_EQ(edge["selection"]["counts"]["g3_1"], 0);
  EXPECT_EQ(edge["selection"]["counts"]["g3_2"], 1);

  auto [audit_status, audit] = Get("/graphs/" + id + "/audit");
  EXPECT_EQ(audit_status, 200);
  EXPECT_EQ(audit["consistent"], true);
}

TEST_F(ServiceTest, InvalidOpsAreRejectedAtomically) {
  const std::string id = Upload(testing::Path(4));
  auto [status, body] = Ops(id,
                            R"({"ops": [{"op": "add_vertex", "vertex": 0},
                                {"op": "remove_edge", "u": 0, "v": 3}]})");
  EXPECT_EQ(status, 422);
  EXPECT_EQ(body["code"], "invalid_op");
  EXPECT_EQ(body["detail"]["index"], 1);

  auto [unknown_status, unknown] =
      Ops(id, R"({"ops": [{"op": "add_vertex", "vertex": 99}]})");
  EXPECT_EQ(unknown_status, 422);

  auto [kind_status, kind] = Ops(id, R"({"ops": [{"op": "toggle"}]})");
  EXPECT_EQ(kind_status, 422);

  auto [json_status, json] = Ops(id, "{not json");
  EXPECT_EQ(json_status, 400);
  EXPECT_EQ(json["code"], "invalid_json");

  auto [shape_status, shape] = Ops(id, R"({"op": "add_vertex"})");
  EXPECT_EQ(shape_status, 400);

  // Nothing was applied.
  auto [counts_status, counts] = Get("/graphs/" + id + "/counts");
  ASSERT_EQ(counts_status, 200);
  EXPECT_EQ(counts["selection"]["n"], 0);
}

TEST_F(ServiceTest, EdgeWeightsStar) {
  const std::string id = Upload(testing::Star(5));
  auto [status, body] = Get("/graphs/" + id + "/edges/weights?pattern=star4");
  ASSERT_EQ(status, 200);
  EXPECT_EQ(body["class"], "g4_5");
  EXPECT_EQ(body["multiplicity"], 3);
  ASSERT_EQ(body["edges"].size(), 5u);
  for (const auto& e : body["edges"]) EXPECT_EQ(e["weight"], 6);
}

TEST_F(ServiceTest, EdgeWeightsCliqueWithPendant) {
  const std::string id = Upload(testing::K5PlusPendant());
  auto [status, body] =
      Get("/graphs/" + id + "/edges/weights?pattern=clique4");
  ASSERT_EQ(status, 200);
  ASSERT_EQ(body["edges"].size(), 11u);
  long long total = 0;
  for (const auto& e : body["edges"]) {
    const bool pendant = e["src"] == 5 || e["dst"] == 5;
    EXPECT_EQ(e["weight"], pendant ? 0 : 3) << e.dump();
    total += e["weight"].get<long long>();
  }
  // Every 4-clique is counted once per edge.
  EXPECT_EQ(total, 5 * 6);

  auto [bad_status, bad] = Get("/graphs/" + id + "/edges/weights?pattern=x");
  EXPECT_EQ(bad_status, 422);
}

TEST_F(ServiceTest, GfdEndpoint) {
  const std::string id = Upload(testing::Cycle(4));
  auto [status, body] = Get("/graphs/" + id + "/gfd");
  ASSERT_EQ(status, 200);
  EXPECT_EQ(body["k"], 4);
  EXPECT_EQ(body["scope"], "connected");
  EXPECT_EQ(body["values"].size(), 6u);
  EXPECT_DOUBLE_EQ(body["values"][3].get<double>(), 1.0);  // g4_4 = C4

  auto [all_status, all] = Get("/graphs/" + id + "/gfd?k=3&scope=all");
  ASSERT_EQ(all_status, 200);
  EXPECT_EQ(all["values"].size(), 4u);

  auto [sel_status, sel] = Get("/graphs/" + id + "/gfd?of=selection");
  ASSERT_EQ(sel_status, 200);
  EXPECT_EQ(sel["all_zero"], true);

  EXPECT_EQ(Get("/graphs/" + id + "/gfd?k=5").first, 422);
  EXPECT_EQ(Get("/graphs/" + id + "/gfd?scope=x").first, 422);
}

TEST_F(ServiceTest, DeleteAndExpiry) {
  const std::string id = Upload(testing::Path(3));
  auto res = client_->Delete("/graphs/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(Get("/graphs/" + id + "/counts").first, 404);

  Stop();
  ServiceOptions short_lived;
  short_lived.session_ttl = std::chrono::seconds(0);
  Start(short_lived);
  const std::string gone = Upload(testing::Path(3));
  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  EXPECT_EQ(service_->EvictExpired(), 1u);
  EXPECT_EQ(service_->num_sessions(), 0u);
  EXPECT_EQ(Get("/graphs/" + gone + "/counts").first, 404);
}

TEST_F(ServiceTest, PreflightHasCorsHeaders) {
  auto res = client_->Options("/graphs");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
}

}  // namespace
}  // namespace gcensus
