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

// Exact census of all induced 2-, 3- and 4-vertex graphlets.
//
// Only triangles, 2-stars, 4-cliques and 4-cycles are enumerated, once per
// undirected edge. Every other class follows from pair-count identities:
// for an edge e = (u, v), the other vertices fall into Tri_e (adjacent to
// both), Star_u, Star_v (adjacent to one) and I_e (adjacent to neither), and
// the number of 4-vertex sets {u, v, w, r} with w, r in a given pair of
// classes is a product of class sizes. Splitting that product by whether
// (w, r) is an edge, and summing over edges, links the class counts pairwise:
//
//   sum C(|Tri|,2)           = 6 f(4-clique) + f(chordal cycle)
//   sum |Star_u||Star_v|     = 4 f(4-cycle)  + f(4-path)
//   sum |Tri|(|Su|+|Sv|)     = 4 f(chordal)  + 2 f(tailed triangle)
//   sum C(|Su|,2)+C(|Sv|,2)  = 3 f(3-star)   + f(tailed triangle)
//   sum |Tri||I|             = 3 f(1-tri)    + f(tailed triangle)
//   sum (|Su|+|Sv|)|I|       = 2 f(2-star)   + 2 f(4-path)
//   sum C(|I|,2)             = f(1-edge)     + 2 f(2-edge)
//
// and the edges outside each egonet give 2 f(2-edge) directly.

#ifndef GCENSUS_CENSUS_H_
#define GCENSUS_CENSUS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gcensus/edge_kernel.h"
#include "gcensus/graph.h"
#include "gcensus/graphlet_class.h"
#include "gcensus/parallel.h"
#include "gcensus/wide_int.h"

namespace gcensus {

struct GraphletFrequencies {
  std::array<Count, kNumGraphletClasses> counts{};
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  Count& operator[](GraphletClass c) {
    return counts[static_cast<std::size_t>(c)];
  }
  const Count& operator[](GraphletClass c) const {
    return counts[static_cast<std::size_t>(c)];
  }
  Count SumOfSize(int k) const;

  friend bool operator==(const GraphletFrequencies&,
                         const GraphletFrequencies&) = default;
};

struct EdgeLocalCounts {
  std::uint64_t tri = 0;
  std::uint64_t star_u = 0;
  std::uint64_t star_v = 0;
  std::uint64_t clique4 = 0;  // edges inside Tri_e
  std::uint64_t cycle4 = 0;   // edges between Star_u and Star_v
  std::uint64_t indep3 = 0;   // n - |N(u) ∪ N(v)|
};

EdgeLocalCounts ToLocalCounts(const EdgeShape& shape, std::uint64_t n);

// Numbers of vertex pairs {w, r} (w, r not in {u, v}) by class pair.
struct UnrestrictedCounts {
  std::uint64_t tt = 0;
  std::uint64_t su_sv = 0;
  std::uint64_t ts = 0;
  std::uint64_t ss_same = 0;
  std::uint64_t ti = 0;
  std::uint64_t si = 0;
  std::uint64_t ii = 0;
  // m - |N(u)\{v}| - |N(v)\{u}| - 1: edges not touching u or v. Subtracting
  // the enumerated egonet-interior edges leaves the edges inside I_e.
  std::uint64_t exterior_bound = 0;

  // Equals C(n-2, 2).
  Count PairTotal() const;
};

// Throws OverflowError if a per-edge product leaves 64 bits.
UnrestrictedCounts ComputeUnrestricted(const EdgeLocalCounts& local,
                                       std::uint64_t m);

// Per-edge counts of every class pair split by adjacency: `*_1` counts pairs
// {w, r} joined by an edge, `*_0` pairs that are not. Each is the number of
// 4-vertex graphlets in which e plays one specific role, e.g. tt_0 is the
// number of chordal cycles with e as the chord and su_sv_0 the number of
// 4-paths with e as the middle edge.
struct EdgeMicroCounts {
  EdgeIndex index = 0;
  VertexId u = 0;
  VertexId v = 0;
  EdgeLocalCounts local;
  UnrestrictedCounts unrestricted;

  std::uint64_t tt_1 = 0;     // 4-clique
  std::uint64_t tt_0 = 0;     // chordal cycle, chord
  std::uint64_t su_sv_1 = 0;  // 4-cycle
  std::uint64_t su_sv_0 = 0;  // 4-path, middle edge
  std::uint64_t ts_1 = 0;     // chordal cycle, rim edge
  std::uint64_t ts_0 = 0;     // tailed triangle, triangle edge at the tail
  std::uint64_t ss_1 = 0;     // tailed triangle, tail edge
  std::uint64_t ss_0 = 0;     // 3-star
  std::uint64_t ti_1 = 0;     // tailed triangle, triangle edge off the tail
  std::uint64_t ti_0 = 0;     // 4-node-1-triangle
  std::uint64_t si_1 = 0;     // 4-path, end edge
  std::uint64_t si_0 = 0;     // 4-node-2-star
  std::uint64_t ii_1 = 0;     // 4-node-2-edge
  std::uint64_t ii_0 = 0;     // 4-node-1-edge
};

// Per-edge totals accumulated in wide integers.
struct CensusSums {
  Count edges = 0;
  Count tri = 0;
  Count star = 0;
  Count indep3 = 0;
  Count clique4 = 0;
  Count cycle4 = 0;
  Count tt = 0;
  Count su_sv = 0;
  Count ts = 0;
  Count ss_same = 0;
  Count ti = 0;
  Count si = 0;
  Count ii = 0;
  Count exterior_bound = 0;

  void Add(const EdgeLocalCounts& local, const UnrestrictedCounts& pairs);
  CensusSums& operator+=(const CensusSums& other);
  friend bool operator==(const CensusSums&, const CensusSums&) = default;
};

// g3_1..g3_4. Throws ConsistencyError on inexact division.
std::array<Count, 4> CloseTriads(const CensusSums& sums, std::uint64_t n);
// g4_1..g4_11. Throws ConsistencyError on inexact division or a negative
// intermediate.
std::array<Count, 11> CloseQuads(const CensusSums& sums, std::uint64_t n);
// All 17 classes.
GraphletFrequencies CloseCensus(const CensusSums& sums, std::uint64_t n,
                                std::uint64_t m);

CensusSums ComputeCensusSums(const Graph& g, const ParallelConfig& config);
GraphletFrequencies GraphletCensus(const Graph& g,
                                   const ParallelConfig& config = {});

// Exact role counts for one edge. `scratch` must have clean marks and is
// left clean.
EdgeMicroCounts MicroCensus(const Graph& g, EdgeRef e, EdgeScratch& scratch);
EdgeMicroCounts MicroCensus(const Graph& g, EdgeRef e);

// Micro records for every edge, indexed by canonical edge index, plus the
// global counts (computed from the same per-edge pass).
struct MicroCensusResult {
  GraphletFrequencies frequencies;
  std::vector<EdgeMicroCounts> edges;
};
MicroCensusResult MicroCensusAll(const Graph& g,
                                 const ParallelConfig& config = {});

// CSV with original vertex ids, one row per edge in canonical order.
void WriteMicroCsv(const Graph& g, std::span<const EdgeMicroCounts> micro,
                   std::ostream& out);

}  // namespace gcensus

#endif  // GCENSUS_CENSUS_H_
