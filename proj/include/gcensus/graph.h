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

#ifndef GCENSUS_GRAPH_H_
#define GCENSUS_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcensus {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Canonical undirected edge, u < v.
struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeRef {
  EdgeIndex index;
  VertexId u;
  VertexId v;
};

// Immutable undirected simple graph in compressed adjacency form.
//
// Vertex ids are dense in [0, n). Canonical edges are sorted
// lexicographically, which makes the edge index of (u, v) a pure function of
// the vertex set and edge set, independent of input order. Each vertex keeps
// the original (pre-remap) id it was loaded with.
class Graph {
 public:
  Graph() = default;

  // Builds a graph over [0, n) from arbitrary endpoint pairs. Self-loops are
  // dropped, direction is discarded, and duplicates are merged. Endpoints
  // must be < n. `original_ids`, when non-empty, must have size n and be
  // strictly increasing; otherwise ids are the identity.
  static Graph FromEdges(VertexId n,
                         std::span<const std::pair<VertexId, VertexId>> pairs,
                         std::vector<std::int64_t> original_ids = {});

  VertexId num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Edge index of each adjacency slot, aligned with neighbors(v).
  std::span<const EdgeIndex> incident_edges(VertexId v) const {
    return {adjacency_edges_.data() + offsets_[v],
            offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_degree() const;

  const std::vector<Edge>& edges() const { return edges_; }
  EdgeRef edge(EdgeIndex i) const { return {i, edges_[i].u, edges_[i].v}; }

  // Binary search in the sorted neighbor list of the lower-degree endpoint.
  bool HasEdge(VertexId a, VertexId b) const;
  std::optional<EdgeIndex> FindEdge(VertexId a, VertexId b) const;

  std::int64_t original_id(VertexId v) const {
    return original_ids_.empty() ? static_cast<std::int64_t>(v)
                                 : original_ids_[v];
  }
  std::optional<VertexId> FindVertex(std::int64_t original) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  VertexId n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<EdgeIndex> adjacency_edges_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> original_ids_;
};

struct ParseOptions {
  // When set, every id in [id_base, max_vertex_id] becomes a vertex even if
  // no edge touches it, so isolated vertices count toward |V|. A
  // MatrixMarket size line sets this (with id_base 1) automatically.
  std::optional<std::int64_t> max_vertex_id;
  std::int64_t id_base = 0;
};

// Reads a whitespace- or comma-separated edge list. Lines starting with '#'
// or '%' are comments; tokens after the first two are ignored. Throws
// ParseError with the offending line number.
Graph LoadEdgeList(std::istream& in, const ParseOptions& options = {});
Graph LoadEdgeList(std::string_view text, const ParseOptions& options = {});
Graph LoadEdgeListFile(const std::string& path,
                       const ParseOptions& options = {});

// One "u v" line per edge (original ids, u < v, lexicographic order).
void WriteEdgeList(const Graph& g, std::ostream& out);

inline constexpr VertexId kDefaultComplementCap = 2000;

// Same vertex set, every non-edge becomes an edge. Throws SizeError when
// n > cap since the result is dense.
Graph Complement(const Graph& g, VertexId cap = kDefaultComplementCap);

// Edge indices sorted by max endpoint degree, descending, then by min
// endpoint degree, descending; remaining ties by index.
std::vector<EdgeIndex> OrderEdgesByDegree(const Graph& g);

}  // namespace gcensus

#endif  // GCENSUS_GRAPH_H_
