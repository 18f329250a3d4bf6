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

#include "gcensus/selection.h"

#include <string>
#include <utility>

#include "gcensus/errors.h"

namespace gcensus {

std::optional<SelectionOpKind> ParseSelectionOpKind(std::string_view text) {
  if (text == "add_vertex") return SelectionOpKind::kAddVertex;
  if (text == "remove_vertex") return SelectionOpKind::kRemoveVertex;
  if (text == "add_edge") return SelectionOpKind::kAddEdge;
  if (text == "remove_edge") return SelectionOpKind::kRemoveEdge;
  return std::nullopt;
}

std::string_view OpKindName(SelectionOpKind kind) {
  switch (kind) {
    case SelectionOpKind::kAddVertex:
      return "add_vertex";
    case SelectionOpKind::kRemoveVertex:
      return "remove_vertex";
    case SelectionOpKind::kAddEdge:
      return "add_edge";
    case SelectionOpKind::kRemoveEdge:
      return "remove_edge";
  }
  return "";
}

namespace {

// Adds (sign = +1) or subtracts one edge's terms. Intermediate sums may wrap
// during an update; they are exact again once the update completes.
template <int Sign>
void Accumulate(Count& target, Count value) {
  if constexpr (Sign > 0) {
    target += value;
  } else {
    target -= value;
  }
}

template <int Sign, class Agg>
void ApplyShape(Agg& a, const EdgeShape& s) {
  const Count t = s.tri;
  const Count su = s.star_u;
  const Count sv = s.star_v;
  const Count star = su + sv;
  const Count span = t + star + 2;
  Accumulate<Sign>(a.edges, 1);
  Accumulate<Sign>(a.tri, t);
  Accumulate<Sign>(a.star, star);
  Accumulate<Sign>(a.clique4, s.clique4);
  Accumulate<Sign>(a.cycle4, s.cycle4);
  Accumulate<Sign>(a.tt, Choose2(t));
  Accumulate<Sign>(a.su_sv, su * sv);
  Accumulate<Sign>(a.ts, t * star);
  Accumulate<Sign>(a.ss_same, Choose2(su) + Choose2(sv));
  Accumulate<Sign>(a.span, span);
  Accumulate<Sign>(a.span_sq, span * span);
  Accumulate<Sign>(a.tri_span, t * span);
  Accumulate<Sign>(a.star_span, star * span);
}

void AddDelta(CountDeltas& deltas, const GraphletFrequencies& before,
              const GraphletFrequencies& after) {
  for (std::size_t i = 0; i < kNumGraphletClasses; ++i) {
    deltas[i] += static_cast<SignedCount>(after.counts[i]) -
                 static_cast<SignedCount>(before.counts[i]);
  }
}

}  // namespace

void SelectionState::Aggregates::Add(const EdgeShape& s) {
  ApplyShape<+1>(*this, s);
}

void SelectionState::Aggregates::Subtract(const EdgeShape& s) {
  ApplyShape<-1>(*this, s);
}

// With x_e = n - span_e (vertices adjacent to neither endpoint):
//   sum x_e         = m n - sum span
//   sum |Tri| x_e   = n sum |Tri| - sum |Tri| span
//   sum C(x_e, 2)   = (m n (n-1) - (2n-1) sum span + sum span^2) / 2
//   sum exterior_e  = sum (m - deg u - deg v + 1) = m^2 - 2 sum|Tri| - sum|S| - m
CensusSums SelectionState::Aggregates::ToSums(std::uint64_t n) const {
  CensusSums sums;
  const Count m = edges;
  if (m == 0) return sums;
  const Count nn = n;
  sums.edges = m;
  sums.tri = tri;
  sums.star = star;
  sums.indep3 = m * nn - span;
  sums.clique4 = clique4;
  sums.cycle4 = cycle4;
  sums.tt = tt;
  sums.su_sv = su_sv;
  sums.ts = ts;
  sums.ss_same = ss_same;
  sums.ti = nn * tri - tri_span;
  sums.si = nn * star - star_span;
  sums.ii = ExactDiv(m * nn * (nn - 1) + span_sq - (2 * nn - 1) * span, 2,
                     "independent pair sum");
  sums.exterior_bound = m * m - 2 * tri - star - m;
  return sums;
}

SelectionState::SelectionState(std::shared_ptr<const Graph> base)
    : base_(std::move(base)),
      vertex_active_(base_->num_vertices(), 0),
      edge_removed_(base_->num_edges(), 0),
      edge_active_(base_->num_edges(), 0),
      degree_(base_->num_vertices(), 0),
      shape_(base_->num_edges()),
      has_shape_(base_->num_edges(), 0),
      vertex_seen_(base_->num_vertices(), 0),
      edge_seen_(base_->num_edges(), 0),
      scratch_(base_->num_vertices()) {
  counts_ = Close();
}

void SelectionState::Validate(const SelectionOp& op) const {
  const VertexId n = base_->num_vertices();
  auto check_vertex = [n](VertexId v) {
    if (v >= n) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " is not in the graph");
    }
  };
  check_vertex(op.a);
  if (op.kind == SelectionOpKind::kAddEdge ||
      op.kind == SelectionOpKind::kRemoveEdge) {
    check_vertex(op.b);
    if (!base_->HasEdge(op.a, op.b)) {
      throw InvalidArgument("(" + std::to_string(op.a) + ", " +
                            std::to_string(op.b) + ") is not an edge");
    }
  }
}

SelectionUpdate SelectionState::Apply(const SelectionOp& op) {
  Validate(op);
  const GraphletFrequencies before = counts_;

  std::vector<VertexId> changed = {op.a};
  const bool edge_op = op.kind == SelectionOpKind::kAddEdge ||
                       op.kind == SelectionOpKind::kRemoveEdge;
  if (edge_op) changed.push_back(op.b);

  CollectNeighborhood(changed);
  ReleaseAffectedEdges();

  switch (op.kind) {
    case SelectionOpKind::kAddVertex:
      SetVertex(op.a, true);
      break;
    case SelectionOpKind::kRemoveVertex:
      SetVertex(op.a, false);
      for (EdgeIndex e : base_->incident_edges(op.a)) SetEdgeRemoved(e, false);
      break;
    case SelectionOpKind::kAddEdge: {
      SetEdgeRemoved(*base_->FindEdge(op.a, op.b), false);
      SetVertex(op.a, true);
      SetVertex(op.b, true);
      break;
    }
    case SelectionOpKind::kRemoveEdge: {
      const EdgeIndex e = *base_->FindEdge(op.a, op.b);
      if (edge_active_[e]) SetEdgeRemoved(e, true);
      break;
    }
  }

  CollectNeighborhood(changed);
  ReleaseAffectedEdges();

  SelectionUpdate update;
  for (EdgeIndex e : affected_) {
    if (edge_active_[e]) {
      RefreshEdge(e);
      ++update.recomputed_edges;
    }
    edge_seen_[e] = 0;
  }
  affected_.clear();
  for (VertexId v : neighborhood_) vertex_seen_[v] = 0;
  neighborhood_.clear();

  counts_ = Close();
  update.counts = counts_;
  AddDelta(update.deltas, before, counts_);
  return update;
}

SelectionUpdate SelectionState::ApplyAll(std::span<const SelectionOp> ops) {
  for (const auto& op : ops) Validate(op);
  SelectionUpdate total;
  for (const auto& op : ops) {
    const SelectionUpdate step = Apply(op);
    for (std::size_t i = 0; i < kNumGraphletClasses; ++i) {
      total.deltas[i] += step.deltas[i];
    }
    total.recomputed_edges += step.recomputed_edges;
  }
  total.counts = counts_;
  return total;
}

void SelectionState::CollectNeighborhood(std::span<const VertexId> changed) {
  auto visit = [this](VertexId v) {
    if (!vertex_seen_[v]) {
      vertex_seen_[v] = 1;
      neighborhood_.push_back(v);
    }
  };
  const View view(*this);
  for (VertexId c : changed) {
    visit(c);
    view.ForEachNeighbor(c, visit);
  }
}

// Takes every selected edge touching the neighborhood out of the sums; they
// are recomputed once the operation has been applied.
void SelectionState::ReleaseAffectedEdges() {
  for (VertexId v : neighborhood_) {
    for (EdgeIndex e : base_->incident_edges(v)) {
      if (!edge_active_[e] || edge_seen_[e]) continue;
      edge_seen_[e] = 1;
      affected_.push_back(e);
      if (has_shape_[e]) {
        aggregates_.Subtract(shape_[e]);
        has_shape_[e] = 0;
      }
    }
  }
}

void SelectionState::SetVertex(VertexId v, bool active) {
  if ((vertex_active_[v] != 0) == active) return;
  vertex_active_[v] = active ? 1 : 0;
  if (active) {
    ++active_vertices_;
  } else {
    --active_vertices_;
  }
  for (EdgeIndex e : base_->incident_edges(v)) UpdateEdgeActivity(e);
}

void SelectionState::SetEdgeRemoved(EdgeIndex e, bool removed) {
  edge_removed_[e] = removed ? 1 : 0;
  UpdateEdgeActivity(e);
}

void SelectionState::UpdateEdgeActivity(EdgeIndex e) {
  const Edge& edge = base_->edges()[e];
  const bool active = vertex_active_[edge.u] && vertex_active_[edge.v] &&
                      !edge_removed_[e];
  if ((edge_active_[e] != 0) == active) return;
  edge_active_[e] = active ? 1 : 0;
  if (active) {
    ++degree_[edge.u];
    ++degree_[edge.v];
    ++active_edges_;
  } else {
    --degree_[edge.u];
    --degree_[edge.v];
    --active_edges_;
  }
}

void SelectionState::RefreshEdge(EdgeIndex e) {
  const Edge& edge = base_->edges()[e];
  shape_[e] = ComputeEdgeShape(View(*this), edge.u, edge.v, scratch_);
  has_shape_[e] = 1;
  aggregates_.Add(shape_[e]);
}

GraphletFrequencies SelectionState::Close() const {
  if (aggregates_.edges != active_edges_) {
    throw ConsistencyError("selection caches " +
                           ToString(aggregates_.edges) + " edges, " +
                           std::to_string(active_edges_) + " are selected");
  }
  return CloseCensus(aggregates_.ToSums(active_vertices_), active_vertices_,
                     active_edges_);
}

Graph SelectionState::InducedGraph() const {
  const VertexId n = base_->num_vertices();
  std::vector<VertexId> dense(n, 0);
  std::vector<std::int64_t> original;
  original.reserve(active_vertices_);
  for (VertexId v = 0; v < n; ++v) {
    if (!vertex_active_[v]) continue;
    dense[v] = static_cast<VertexId>(original.size());
    original.push_back(base_->original_id(v));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(active_edges_);
  for (EdgeIndex e = 0; e < base_->num_edges(); ++e) {
    if (!edge_active_[e]) continue;
    const Edge& edge = base_->edges()[e];
    pairs.emplace_back(dense[edge.u], dense[edge.v]);
  }
  const auto selected = static_cast<VertexId>(original.size());
  return Graph::FromEdges(selected, pairs, std::move(original));
}

GraphletFrequencies SelectionState::Recount(
    const ParallelConfig& config) const {
  return GraphletCensus(InducedGraph(), config);
}

AuditReport SelectionState::Audit(const ParallelConfig& config) const {
  AuditReport report;
  report.cached = counts_;
  report.recomputed = Recount(config);
  report.consistent = report.cached == report.recomputed;
  return report;
}

void SelectionState::VerifyConsistent(const ParallelConfig& config) const {
  const AuditReport report = Audit(config);
  if (report.consistent) return;
  std::string detail;
  for (GraphletClass c : AllClasses()) {
    if (report.cached[c] != report.recomputed[c]) {
      detail += " " + std::string(Key(c)) + ": cached " +
                ToString(report.cached[c]) + ", recomputed " +
                ToString(report.recomputed[c]) + ";";
    }
  }
  throw ConsistencyError("selection counts diverged from a full census:" +
                         detail);
}

}  // namespace gcensus
