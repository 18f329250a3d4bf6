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

// Per-edge neighborhood classification and enumeration.
//
// Every routine here is templated on an adjacency view so the same code runs
// on a full Graph and on the filtered view of an interactive selection. A
// view provides
//
//   template <class F> void ForEachNeighbor(VertexId v, F&& f) const;
//   std::uint64_t Degree(VertexId v) const;
//
// Marker protocol: for the edge (u, v) under examination every vertex of
// N(u) ∪ N(v) other than u and v carries one of kStarU, kTri, kStarV. All
// other vertices, and u and v themselves, are kNone.

#ifndef GCENSUS_EDGE_KERNEL_H_
#define GCENSUS_EDGE_KERNEL_H_

#include <cstdint>
#include <vector>

#include "gcensus/graph.h"

namespace gcensus {

enum Mark : std::uint8_t {
  kNone = 0,
  kStarU = 1,
  kTri = 2,
  kStarV = 3,
};

// Worker-private scratch. `marks` must be all kNone between edges.
struct EdgeScratch {
  explicit EdgeScratch(VertexId n) : marks(n, kNone) {}

  std::vector<std::uint8_t> marks;
  std::vector<VertexId> tri;
  std::vector<VertexId> star_u;
  std::vector<VertexId> star_v;
};

// Adjacency view over a full graph.
class GraphView {
 public:
  explicit GraphView(const Graph& g) : g_(g) {}

  template <class F>
  void ForEachNeighbor(VertexId v, F&& f) const {
    for (VertexId w : g_.neighbors(v)) f(w);
  }
  std::uint64_t Degree(VertexId v) const { return g_.degree(v); }

 private:
  const Graph& g_;
};

// Fills scratch.tri / star_u / star_v and sets the marks for edge (u, v).
template <class View>
void ClassifyNeighborhood(const View& view, VertexId u, VertexId v,
                          EdgeScratch& s) {
  s.tri.clear();
  s.star_u.clear();
  s.star_v.clear();
  auto& marks = s.marks;
  view.ForEachNeighbor(u, [&](VertexId w) {
    if (w != v) marks[w] = kStarU;
  });
  view.ForEachNeighbor(v, [&](VertexId w) {
    if (w == u) return;
    if (marks[w] == kStarU) {
      marks[w] = kTri;  // found triangle
      s.tri.push_back(w);
    } else {
      marks[w] = kStarV;
      s.star_v.push_back(w);
    }
  });
  view.ForEachNeighbor(u, [&](VertexId w) {
    if (w != v && marks[w] == kStarU) s.star_u.push_back(w);
  });
}

// Edges with both endpoints in Tri_e. Clears the kTri mark of each visited
// member so every pair is seen once; Star marks are untouched.
template <class View>
std::uint64_t CliqueCount(const View& view, EdgeScratch& s) {
  std::uint64_t count = 0;
  for (VertexId w : s.tri) {
    view.ForEachNeighbor(w, [&](VertexId r) {
      if (s.marks[r] == kTri) ++count;  // found 4-clique
    });
    s.marks[w] = kNone;
  }
  return count;
}

// Edges between Star_u and Star_v. Clears the kStarU marks.
template <class View>
std::uint64_t CycleCount(const View& view, EdgeScratch& s) {
  std::uint64_t count = 0;
  for (VertexId w : s.star_u) {
    view.ForEachNeighbor(w, [&](VertexId r) {
      if (s.marks[r] == kStarV) ++count;  // found 4-cycle
    });
    s.marks[w] = kNone;
  }
  return count;
}

struct SameSideCounts {
  std::uint64_t star_u_edges = 0;  // edges inside Star_u
  std::uint64_t star_v_edges = 0;  // edges inside Star_v
  std::uint64_t tri_star_edges = 0;  // edges Tri_e -- (Star_u ∪ Star_v)
  // Degree sums, used to count edges leaving the egonet.
  std::uint64_t tri_degree_sum = 0;
  std::uint64_t star_degree_sum = 0;
};

// Requires the full marker state; run before CliqueCount / CycleCount.
template <class View>
SameSideCounts SameSideStarEdges(const View& view, const EdgeScratch& s) {
  SameSideCounts out;
  for (VertexId w : s.tri) {
    out.tri_degree_sum += view.Degree(w);
    view.ForEachNeighbor(w, [&](VertexId r) {
      const auto m = s.marks[r];
      if (m == kStarU || m == kStarV) ++out.tri_star_edges;
    });
  }
  std::uint64_t uu = 0;
  for (VertexId w : s.star_u) {
    out.star_degree_sum += view.Degree(w);
    view.ForEachNeighbor(w, [&](VertexId r) {
      if (s.marks[r] == kStarU) ++uu;
    });
  }
  std::uint64_t vv = 0;
  for (VertexId w : s.star_v) {
    out.star_degree_sum += view.Degree(w);
    view.ForEachNeighbor(w, [&](VertexId r) {
      if (s.marks[r] == kStarV) ++vv;
    });
  }
  // Each internal edge was seen from both endpoints.
  out.star_u_edges = uu / 2;
  out.star_v_edges = vv / 2;
  return out;
}

// Resets every mark the edge may have set.
inline void ClearMarks(EdgeScratch& s) {
  for (VertexId w : s.tri) s.marks[w] = kNone;
  for (VertexId w : s.star_u) s.marks[w] = kNone;
  for (VertexId w : s.star_v) s.marks[w] = kNone;
}

// The part of an edge's census that does not depend on |V| or |E|.
struct EdgeShape {
  std::uint64_t tri = 0;
  std::uint64_t star_u = 0;
  std::uint64_t star_v = 0;
  std::uint64_t clique4 = 0;
  std::uint64_t cycle4 = 0;
};

// Triangles, 2-stars, 4-cliques and 4-cycles touching (u, v). Leaves the
// scratch marks clean.
template <class View>
EdgeShape ComputeEdgeShape(const View& view, VertexId u, VertexId v,
                           EdgeScratch& s) {
  ClassifyNeighborhood(view, u, v, s);
  EdgeShape shape;
  shape.tri = s.tri.size();
  shape.star_u = s.star_u.size();
  shape.star_v = s.star_v.size();
  shape.clique4 = CliqueCount(view, s);
  shape.cycle4 = CycleCount(view, s);
  ClearMarks(s);
  return shape;
}

}  // namespace gcensus

#endif  // GCENSUS_EDGE_KERNEL_H_
