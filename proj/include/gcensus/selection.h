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

// Graphlet counts of an interactively edited selection of a base graph,
// maintained by localized recomputation.
//
// The selection is a set of active vertices plus a set of base edges the
// user removed explicitly. Its graph has the active vertices and every base
// edge between two active vertices that was not removed; for the disconnected
// classes n is the number of active vertices.
//
// The part of an edge's census that is independent of n and m (triangles,
// stars, 4-cliques, 4-cycles; see EdgeShape) is cached per active edge. The
// n- and m-dependent sums are polynomials in n and m whose coefficients are
// sums over edges of shape terms, so they are kept as running sums too. A
// change at vertex x can only alter the shape of edges with an endpoint in
// N[x]; only those edges are recomputed, and the closure identities are
// re-applied to the updated sums.

#ifndef GCENSUS_SELECTION_H_
#define GCENSUS_SELECTION_H_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gcensus/census.h"
#include "gcensus/edge_kernel.h"
#include "gcensus/graph.h"
#include "gcensus/wide_int.h"

namespace gcensus {

enum class SelectionOpKind { kAddVertex, kRemoveVertex, kAddEdge, kRemoveEdge };

// "add_vertex", "remove_vertex", "add_edge", "remove_edge".
std::optional<SelectionOpKind> ParseSelectionOpKind(std::string_view text);
std::string_view OpKindName(SelectionOpKind kind);

// Vertex ops use `a`; edge ops use the base edge {a, b}. Ids are dense
// vertex ids of the base graph.
struct SelectionOp {
  SelectionOpKind kind = SelectionOpKind::kAddVertex;
  VertexId a = 0;
  VertexId b = 0;
};

using CountDeltas = std::array<SignedCount, kNumGraphletClasses>;

struct SelectionUpdate {
  GraphletFrequencies counts;
  CountDeltas deltas{};           // counts after minus counts before
  std::size_t recomputed_edges = 0;  // edges whose shape was recomputed
};

struct AuditReport {
  bool consistent = true;
  GraphletFrequencies cached;
  GraphletFrequencies recomputed;
};

class SelectionState {
 public:
  // Starts with an empty selection.
  explicit SelectionState(std::shared_ptr<const Graph> base);

  // Semantics:
  //   add_vertex     activates the vertex (no-op if active);
  //   remove_vertex  deactivates it and forgets removals of its edges;
  //   add_edge       activates both endpoints and un-removes the edge;
  //   remove_edge    removes the edge from the selection while its
  //                  endpoints stay selected (no-op unless it is selected).
  // Throws InvalidArgument for an out-of-range vertex or a non-edge, before
  // changing anything.
  SelectionUpdate Apply(const SelectionOp& op);
  // Validates every op first; on error nothing is applied.
  SelectionUpdate ApplyAll(std::span<const SelectionOp> ops);
  void Validate(const SelectionOp& op) const;

  const GraphletFrequencies& counts() const { return counts_; }
  const Graph& base() const { return *base_; }
  std::shared_ptr<const Graph> shared_base() const { return base_; }
  bool vertex_active(VertexId v) const { return vertex_active_[v] != 0; }
  bool edge_active(EdgeIndex e) const { return edge_active_[e] != 0; }
  std::size_t num_active_vertices() const { return active_vertices_; }
  std::size_t num_active_edges() const { return active_edges_; }

  // The selection as a standalone graph (original ids preserved).
  Graph InducedGraph() const;
  // Full census of InducedGraph().
  GraphletFrequencies Recount(const ParallelConfig& config = {}) const;
  // Compares the cached counts against Recount().
  AuditReport Audit(const ParallelConfig& config = {}) const;
  // Throws ConsistencyError if Audit() finds a mismatch.
  void VerifyConsistent(const ParallelConfig& config = {}) const;

 private:
  // Running sums over active edges; combined with n they give CensusSums.
  struct Aggregates {
    Count edges = 0;
    Count tri = 0;
    Count star = 0;
    Count clique4 = 0;
    Count cycle4 = 0;
    Count tt = 0;
    Count su_sv = 0;
    Count ts = 0;
    Count ss_same = 0;
    Count span = 0;          // |N(u) ∪ N(v)|
    Count span_sq = 0;       // |N(u) ∪ N(v)|^2
    Count tri_span = 0;      // |Tri| |N(u) ∪ N(v)|
    Count star_span = 0;     // (|Su| + |Sv|) |N(u) ∪ N(v)|

    void Add(const EdgeShape& s);
    void Subtract(const EdgeShape& s);
    CensusSums ToSums(std::uint64_t n) const;
  };

  class View {
   public:
    explicit View(const SelectionState& s) : s_(s) {}
    template <class F>
    void ForEachNeighbor(VertexId v, F&& f) const {
      const auto nbrs = s_.base_->neighbors(v);
      const auto edges = s_.base_->incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (s_.edge_active_[edges[i]]) f(nbrs[i]);
      }
    }
    std::uint64_t Degree(VertexId v) const { return s_.degree_[v]; }

   private:
    const SelectionState& s_;
  };

  // Vertices whose closed selected neighborhood covers every edge whose
  // shape a change at `changed` can alter.
  void CollectNeighborhood(std::span<const VertexId> changed);
  void ReleaseAffectedEdges();
  void SetVertex(VertexId v, bool active);
  void SetEdgeRemoved(EdgeIndex e, bool removed);
  void UpdateEdgeActivity(EdgeIndex e);
  void RefreshEdge(EdgeIndex e);
  GraphletFrequencies Close() const;

  std::shared_ptr<const Graph> base_;
  std::vector<std::uint8_t> vertex_active_;
  std::vector<std::uint8_t> edge_removed_;
  std::vector<std::uint8_t> edge_active_;
  std::vector<std::uint64_t> degree_;  // degree within the selection
  std::size_t active_vertices_ = 0;
  std::size_t active_edges_ = 0;

  std::vector<EdgeShape> shape_;
  std::vector<std::uint8_t> has_shape_;
  Aggregates aggregates_;
  GraphletFrequencies counts_;

  // Per-operation work lists.
  std::vector<std::uint8_t> vertex_seen_;
  std::vector<VertexId> neighborhood_;
  std::vector<std::uint8_t> edge_seen_;
  std::vector<EdgeIndex> affected_;
  EdgeScratch scratch_;
};

}  // namespace gcensus

#endif  // GCENSUS_SELECTION_H_
