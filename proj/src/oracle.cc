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

#include "gcensus/oracle.h"

#include <algorithm>
#include <array>
#include <string>

namespace gcensus {
namespace {

using C = GraphletClass;

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g)
      : n_(g.num_vertices()), bits_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const Edge& e : g.edges()) {
      bits_[Index(e.u, e.v)] = 1;
      bits_[Index(e.v, e.u)] = 1;
    }
  }
  bool operator()(VertexId a, VertexId b) const { return bits_[Index(a, b)]; }

 private:
  std::size_t Index(VertexId a, VertexId b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }
  VertexId n_;
  std::vector<char> bits_;
};

void CountPairsAndTriples(const AdjacencyMatrix& adj, VertexId n,
                          GraphletFrequencies& out) {
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      out[adj(a, b) ? C::kEdge : C::kTwoIndependent] += 1;
      for (VertexId c = b + 1; c < n; ++c) {
        const int edges = adj(a, b) + adj(a, c) + adj(b, c);
        out[ClassifyInduced3(edges)] += 1;
      }
    }
  }
}

}  // namespace

GraphletClass ClassifyInduced3(int edge_count) {
  switch (edge_count) {
    case 0:
      return C::kThreeIndependent;
    case 1:
      return C::kThreeOneEdge;
    case 2:
      return C::kTwoStar;
    case 3:
      return C::kTriangle;
  }
  throw InvalidArgument("a 3-vertex graph has 0..3 edges");
}

GraphletClass ClassifyInduced4(int edge_count, int max_degree,
                               int triangle_count) {
  struct Row {
    int edges, delta, triangles;
    GraphletClass cls;
  };
  // One row per class: (|E|, max degree, triangles) as tabulated for the
  // 4-vertex graphlets. The triples are pairwise distinct.
  static constexpr std::array<Row, 11> kRows = {{
      {0, 0, 0, C::kFourIndependent},
      {1, 1, 0, C::kFourOneEdge},
      {2, 1, 0, C::kFourTwoEdge},
      {2, 2, 0, C::kFourTwoStar},
      {3, 2, 1, C::kFourOneTriangle},
      {3, 3, 0, C::kThreeStar},
      {3, 2, 0, C::kFourPath},
      {4, 2, 0, C::kFourCycle},
      {4, 3, 1, C::kTailedTriangle},
      {5, 3, 2, C::kChordalCycle},
      {6, 3, 4, C::kFourClique},
  }};
  for (const Row& r : kRows) {
    if (r.edges == edge_count && r.delta == max_degree &&
        r.triangles == triangle_count) {
      return r.cls;
    }
  }
  throw InvalidArgument("no 4-vertex graph has " +
                        std::to_string(edge_count) + " edges, max degree " +
                        std::to_string(max_degree) + " and " +
                        std::to_string(triangle_count) + " triangles");
}

GraphletFrequencies OracleCensus(const Graph& g, const OracleLimits& limits) {
  const VertexId n = g.num_vertices();
  if (n > limits.max_n) {
    throw SizeError("oracle census limited to " +
                    std::to_string(limits.max_n) + " vertices");
  }
  const AdjacencyMatrix adj(g);
  GraphletFrequencies out;
  out.n = n;
  out.m = g.num_edges();
  CountPairsAndTriples(adj, n, out);

  std::array<VertexId, 4> s{};
  for (s[0] = 0; s[0] < n; ++s[0]) {
    for (s[1] = s[0] + 1; s[1] < n; ++s[1]) {
      for (s[2] = s[1] + 1; s[2] < n; ++s[2]) {
        for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
          std::array<int, 4> degree{};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (adj(s[i], s[j])) {
                ++edges;
                ++degree[i];
                ++degree[j];
              }
            }
          }
          int triangles = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              for (int k = j + 1; k < 4; ++k) {
                triangles += adj(s[i], s[j]) && adj(s[i], s[k]) &&
                             adj(s[j], s[k]);
              }
            }
          }
          const int delta = *std::max_element(degree.begin(), degree.end());
          out[ClassifyInduced4(edges, delta, triangles)] += 1;
        }
      }
    }
  }
  return out;
}

GraphletFrequencies OracleTriadCensus(const Graph& g,
                                      const OracleLimits& limits) {
  const VertexId n = g.num_vertices();
  if (n > limits.max_n_triples) {
    throw SizeError("oracle triad census limited to " +
                    std::to_string(limits.max_n_triples) + " vertices");
  }
  GraphletFrequencies out;
  out.n = n;
  out.m = g.num_edges();
  CountPairsAndTriples(AdjacencyMatrix(g), n, out);
  return out;
}

std::vector<ComplementViolation> VerifyComplementIdentity(
    const Graph& g, const OracleLimits& limits) {
  const GraphletFrequencies direct = OracleCensus(g, limits);
  const GraphletFrequencies flipped = OracleCensus(Complement(g), limits);
  std::vector<ComplementViolation> violations;
  for (GraphletClass c : AllClasses()) {
    if (direct[c] != flipped[ComplementOf(c)]) {
      violations.push_back({c, direct[c], flipped[ComplementOf(c)]});
    }
  }
  return violations;
}

EdgeMicroCounts OracleEdgeRoles(const Graph& g, EdgeRef e) {
  enum Role { kT, kSu, kSv, kI };
  const VertexId n = g.num_vertices();
  const AdjacencyMatrix adj(g);
  std::vector<Role> role(n, kI);
  for (VertexId w = 0; w < n; ++w) {
    const bool to_u = adj(w, e.u);
    const bool to_v = adj(w, e.v);
    role[w] = to_u && to_v ? kT : to_u ? kSu : to_v ? kSv : kI;
  }
  EdgeMicroCounts out;
  out.index = e.index;
  out.u = e.u;
  out.v = e.v;
  for (VertexId w = 0; w < n; ++w) {
    if (w == e.u || w == e.v) continue;
    for (VertexId r = w + 1; r < n; ++r) {
      if (r == e.u || r == e.v) continue;
      const bool linked = adj(w, r);
      Role a = role[w];
      Role b = role[r];
      if (a > b) std::swap(a, b);
      std::uint64_t* slot = nullptr;
      if (a == kT && b == kT) {
        slot = linked ? &out.tt_1 : &out.tt_0;
      } else if (a == kT && (b == kSu || b == kSv)) {
        slot = linked ? &out.ts_1 : &out.ts_0;
      } else if (a == kT && b == kI) {
        slot = linked ? &out.ti_1 : &out.ti_0;
      } else if (a == kSu && b == kSv) {
        slot = linked ? &out.su_sv_1 : &out.su_sv_0;
      } else if (a == b && (a == kSu || a == kSv)) {
        slot = linked ? &out.ss_1 : &out.ss_0;
      } else if (b == kI && (a == kSu || a == kSv)) {
        slot = linked ? &out.si_1 : &out.si_0;
      } else {
        slot = linked ? &out.ii_1 : &out.ii_0;
      }
      ++*slot;
    }
  }
  return out;
}

}  // namespace gcensus
