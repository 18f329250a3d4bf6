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

// Per-edge pattern weights from the micro census, and edge rankings.

#ifndef GCENSUS_RANKING_H_
#define GCENSUS_RANKING_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/graph.h"

namespace gcensus {

enum class RankPattern {
  kStar4,     // 3-stars containing the edge
  kClique4,   // 4-cliques containing the edge
  kTriangle,  // triangles containing the edge
  kCycle4,    // induced 4-cycles containing the edge
};

std::optional<RankPattern> ParseRankPattern(std::string_view text);
std::string_view PatternName(RankPattern pattern);

// The global class a pattern weight counts, and how many edges of one
// occurrence carry it: summing the weight over all edges gives
// multiplicity * f(class).
GraphletClass PatternClass(RankPattern pattern);
std::uint64_t PatternMultiplicity(RankPattern pattern);

std::uint64_t PatternWeight(const EdgeMicroCounts& micro, RankPattern pattern);

struct WeightedEdge {
  EdgeIndex index = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t weight = 0;
};

// One entry per micro record, in the order given.
std::vector<WeightedEdge> EdgeWeights(std::span<const EdgeMicroCounts> micro,
                                      RankPattern pattern);

// Heaviest `top_k` edges (all when top_k is 0), by weight descending, ties
// by canonical edge index ascending.
std::vector<WeightedEdge> RankEdges(std::span<const EdgeMicroCounts> micro,
                                    RankPattern pattern, std::size_t top_k);
std::vector<WeightedEdge> RankEdges(const Graph& g, RankPattern pattern,
                                    std::size_t top_k,
                                    const ParallelConfig& config = {});

// "rank,src,dst,weight" with original vertex ids.
void WriteRankingCsv(const Graph& g, std::span<const WeightedEdge> ranked,
                     std::ostream& out);

}  // namespace gcensus

#endif  // GCENSUS_RANKING_H_
