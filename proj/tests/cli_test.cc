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

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gcensus/json_io.h"
#include "test_graphs.h"

namespace gcensus {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcensus_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string WriteFile(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string WriteGraph(const std::string& name, const Graph& g) {
    std::ostringstream text;
    WriteEdgeList(g, text);
    return WriteFile(name, text.str());
  }

  int Run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage = {"gcensus"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : storage) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return RunCli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  Json ErrorOutput() const { return Json::parse(err_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CountCompleteFour) {
  const auto path = WriteFile("k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  ASSERT_EQ(Run({"count", "-i", path}), kExitOk) << err_.str();
  const Json result = Json::parse(out_.str());
  EXPECT_EQ(result["counts"]["g4_1"], 1);
  EXPECT_EQ(result["counts"]["g3_1"], 4);
  EXPECT_EQ(result["n"], 4);
  EXPECT_EQ(result["m"], 6);
  EXPECT_TRUE(result.contains("runtime_seconds"));
}

TEST_F(CliTest, CountOutputIsIdenticalAcrossSchedules) {
  const auto path =
      WriteGraph("g.txt", testing::RandomPowerLaw(3000, 5, 12));
  ASSERT_EQ(Run({"count", "-i", path, "--no-timing", "--threads", "1"}),
            kExitOk);
  const std::string reference = out_.str();
  EXPECT_EQ(reference.find("runtime"), std::string::npos);
  for (const char* threads : {"2", "8"}) {
    for (const char* batch : {"1", "256"}) {
      ASSERT_EQ(Run({"count", "-i", path, "--no-timing", "--threads", threads,
                     "--batch", batch, "--ordering", "input"}),
                kExitOk);
      EXPECT_EQ(out_.str(), reference);
    }
  }
}

TEST_F(CliTest, CountCsvAndMicroFiles) {
  const auto path = WriteFile("paw.txt", "0 1\n0 2\n1 2\n2 3\n");
  const auto micro = (dir_ / "micro.csv").string();
  const auto counts = (dir_ / "counts.csv").string();
  ASSERT_EQ(Run({"count", "-i", path, "--format", "csv", "--micro", micro,
                 "-o", counts}),
            kExitOk);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream counts_in(counts);
  std::string header, first;
  std::getline(counts_in, header);
  std::getline(counts_in, first);
  EXPECT_EQ(header, "class,name,count");
  EXPECT_EQ(first, "g2_1,edge,4");
  std::ifstream micro_in(micro);
  int lines = 0;
  for (std::string line; std::getline(micro_in, line);) ++lines;
  EXPECT_EQ(lines, 5);  // header + 4 edges
}

TEST_F(CliTest, ErrorsAreJsonWithExitCodes) {
  EXPECT_EQ(Run({"count", "-i", (dir_ / "missing.txt").string()}),
            kExitIoError);
  EXPECT_EQ(ErrorOutput()["code"], "io_error");

  const auto bad = WriteFile("bad.txt", "1 2\n3 oops\n");
  EXPECT_EQ(Run({"count", "-i", bad}), kExitIoError);
  EXPECT_EQ(ErrorOutput()["code"], "parse_error");
  EXPECT_EQ(ErrorOutput()["detail"]["line"], 2);

  EXPECT_EQ(Run({"count", "--threads", "0", "-i", bad}), kExitUsage);
  EXPECT_EQ(ErrorOutput()["code"], "usage_error");
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"rank", "-i", bad, "--pattern", "star5"}), kExitUsage);
  EXPECT_EQ(Run({"count"}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("count"), std::string::npos);
}

TEST_F(CliTest, GfdSingleAndPairwise) {
  const auto k4 = WriteGraph("k4.txt", testing::Complete(4));
  const auto c4 = WriteGraph("c4.txt", testing::Cycle(4));
  ASSERT_EQ(Run({"gfd", "-i", k4}), kExitOk) << err_.str();
  Json single = Json::parse(out_.str());
  EXPECT_EQ(single["values"], Json::parse("[1.0,0.0,0.0,0.0,0.0,0.0]"));
  EXPECT_EQ(single["scope"], "connected");

  ASSERT_EQ(Run({"gfd", "-i", k4, "-i", c4, "--metric", "euclidean"}),
            kExitOk);
  Json pair = Json::parse(out_.str());
  EXPECT_EQ(pair["gfds"].size(), 2u);
  EXPECT_DOUBLE_EQ(pair["distances"][0][1].get<double>(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(pair["distances"][1][1].get<double>(), 0.0);

  ASSERT_EQ(Run({"gfd", "-i", k4, "--k", "3", "--scope", "all"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str())["values"].size(), 4u);
  EXPECT_EQ(Run({"gfd", "-i", k4, "--k", "5"}), kExitUsage);
}

TEST_F(CliTest, RankTopK) {
  const auto path = WriteGraph("k5p.txt", testing::K5PlusPendant());
  ASSERT_EQ(Run({"rank", "-i", path, "--pattern", "clique4", "--top", "11"}),
            kExitOk);
  std::istringstream lines(out_.str());
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], "rank,src,dst,weight");
  EXPECT_EQ(rows[1], "1,0,1,3");
  EXPECT_EQ(rows[11], "11,4,5,0");

  ASSERT_EQ(Run({"rank", "-i", path, "--pattern", "clique4", "--top", "2",
                 "--format", "json"}),
            kExitOk);
  EXPECT_EQ(Json::parse(out_.str())["edges"].size(), 2u);
}

TEST_F(CliTest, FeaturesSkipsBrokenInputs) {
  const auto k3 = WriteGraph("k3.txt", testing::Complete(3));
  const auto k4 = WriteGraph("k4.txt", testing::Complete(4));
  const auto bad = WriteFile("bad.txt", "# nothing\n");
  ASSERT_EQ(Run({"features", k3, k4, bad}), kExitOk);
  std::istringstream lines(out_.str());
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].rfind("graph,g2_1,", 0), 0u);
  // g4_1 is the 8th value column.
  auto column = [](const std::string& row, int index) {
    std::stringstream ss(row);
    std::string field;
    for (int i = 0; i <= index; ++i) std::getline(ss, field, ',');
    return field;
  };
  EXPECT_EQ(column(rows[1], 7), "0");
  EXPECT_EQ(column(rows[2], 7), "1");
  const Json skipped = Json::parse(err_.str());
  EXPECT_EQ(skipped["code"], "skipped");
  EXPECT_EQ(skipped["detail"]["input"], bad);

  EXPECT_EQ(Run({"features", bad}), kExitIoError);
}

TEST_F(CliTest, BenchTable) {
  ASSERT_EQ(Run({"bench", "--synthetic-edges", "20000", "--workers", "1,2",
                 "--repetitions", "1", "--format", "json"}),
            kExitOk)
      << err_.str();
  const Json result = Json::parse(out_.str());
  ASSERT_EQ(result["rows"].size(), 2u);
  EXPECT_EQ(result["rows"][0]["workers"], 1);
  EXPECT_DOUBLE_EQ(result["rows"][0]["speedup"].get<double>(), 1.0);
}

TEST_F(CliTest, MaxVertexIdKeepsIsolatedVertices) {
  const auto path = WriteFile("e.txt", "0 1\n");
  ASSERT_EQ(Run({"count", "-i", path, "--max-vertex-id", "5"}), kExitOk);
  const Json result = Json::parse(out_.str());
  EXPECT_EQ(result["n"], 6);
  EXPECT_EQ(result["counts"]["g4_10"], 6);  // C(4, 2) partners of the edge
}

}  // namespace
}  // namespace gcensus
