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

#include "gcensus/ranking.h"

#include <algorithm>
#include <ostream>

namespace gcensus {

std::optional<RankPattern> ParseRankPattern(std::string_view text) {
  if (text == "star4") return RankPattern::kStar4;
  if (text == "clique4") return RankPattern::kClique4;
  if (text == "triangle") return RankPattern::kTriangle;
  if (text == "cycle4") return RankPattern::kCycle4;
  return std::nullopt;
}

std::string_view PatternName(RankPattern pattern) {
  switch (pattern) {
    case RankPattern::kStar4:
      return "star4";
    case RankPattern::kClique4:
      return "clique4";
    case RankPattern::kTriangle:
      return "triangle";
    case RankPattern::kCycle4:
      return "cycle4";
  }
  return "";
}

GraphletClass PatternClass(RankPattern pattern) {
  switch (pattern) {
    case RankPattern::kStar4:
      return GraphletClass::kThreeStar;
    case RankPattern::kClique4:
      return GraphletClass::kFourClique;
    case RankPattern::kTriangle:
      return GraphletClass::kTriangle;
    case RankPattern::kCycle4:
      return GraphletClass::kFourCycle;
  }
  return GraphletClass::kEdge;
}

std::uint64_t PatternMultiplicity(RankPattern pattern) {
  switch (pattern) {
    case RankPattern::kStar4:
    case RankPattern::kTriangle:
      return 3;
    case RankPattern::kClique4:
      return 6;
    case RankPattern::kCycle4:
      return 4;
  }
  return 0;
}

std::uint64_t PatternWeight(const EdgeMicroCounts& micro,
                            RankPattern pattern) {
  switch (pattern) {
    case RankPattern::kStar4:
      return micro.ss_0;
    case RankPattern::kClique4:
      return micro.tt_1;
    case RankPattern::kTriangle:
      return micro.local.tri;
    case RankPattern::kCycle4:
      return micro.su_sv_1;
  }
  return 0;
}

std::vector<WeightedEdge> EdgeWeights(std::span<const EdgeMicroCounts> micro,
                                      RankPattern pattern) {
  std::vector<WeightedEdge> out;
  out.reserve(micro.size());
  for (const auto& r : micro) {
    out.push_back({r.index, r.u, r.v, PatternWeight(r, pattern)});
  }
  return out;
}

std::vector<WeightedEdge> RankEdges(std::span<const EdgeMicroCounts> micro,
                                    RankPattern pattern, std::size_t top_k) {
  std::vector<WeightedEdge> out = EdgeWeights(micro, pattern);
  auto heavier = [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.index < b.index;
  };
  if (top_k == 0 || top_k >= out.size()) {
    std::sort(out.begin(), out.end(), heavier);
  } else {
    std::partial_sort(out.begin(), out.begin() + static_cast<long>(top_k),
                      out.end(), heavier);
    out.resize(top_k);
  }
  return out;
}

std::vector<WeightedEdge> RankEdges(const Graph& g, RankPattern pattern,
                                    std::size_t top_k,
                                    const ParallelConfig& config) {
  const auto micro = MicroCensusAll(g, config);
  return RankEdges(micro.edges, pattern, top_k);
}

void WriteRankingCsv(const Graph& g, std::span<const WeightedEdge> ranked,
                     std::ostream& out) {
  out << "rank,src,dst,weight\n";
  std::size_t rank = 1;
  for (const auto& e : ranked) {
    out << rank++ << ',' << g.original_id(e.u) << ',' << g.original_id(e.v)
        << ',' << e.weight << '\n';
  }
}

}  // namespace gcensus
