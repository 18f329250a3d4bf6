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

// Brute-force ground truth for small graphs. Nothing here shares code with
// the census path: subsets are enumerated exhaustively and classified from
// an adjacency matrix.

#ifndef GCENSUS_ORACLE_H_
#define GCENSUS_ORACLE_H_

#include <cstdint>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/graph.h"
#include "gcensus/graphlet_class.h"

namespace gcensus {

struct OracleLimits {
  VertexId max_n = 30;           // full 4-subset enumeration
  VertexId max_n_triples = 200;  // 3-subset enumeration only
};

// Induced 4-vertex class from (edges, max degree, triangles). Throws
// InvalidArgument for a combination no 4-vertex graph realizes.
GraphletClass ClassifyInduced4(int edge_count, int max_degree,
                               int triangle_count);
// Induced 3-vertex class from its edge count.
GraphletClass ClassifyInduced3(int edge_count);

// All 17 classes by exhaustive enumeration. Throws SizeError if n > max_n.
GraphletFrequencies OracleCensus(const Graph& g,
                                 const OracleLimits& limits = {});

// k = 2 and 3 classes only (4-vertex entries left zero). Throws SizeError
// if n > max_n_triples.
GraphletFrequencies OracleTriadCensus(const Graph& g,
                                      const OracleLimits& limits = {});

struct ComplementViolation {
  GraphletClass graphlet;
  Count in_graph;
  Count complement_in_complement;
};

// Checks f(c, G) = f(complement(c), complement(G)) for all 17 classes using
// the oracle on both graphs. Empty result means the identity holds.
std::vector<ComplementViolation> VerifyComplementIdentity(
    const Graph& g, const OracleLimits& limits = {});

// Classifies every pair {w, r} of vertices other than e's endpoints by the
// classes of w and r relative to e and whether (w, r) is an edge. Field
// meanings match EdgeMicroCounts; `local` and `unrestricted` are left zero.
EdgeMicroCounts OracleEdgeRoles(const Graph& g, EdgeRef e);

}  // namespace gcensus

#endif  // GCENSUS_ORACLE_H_
