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

#include "gcensus/census.h"

#include <ostream>
#include <string>

namespace gcensus {
namespace {

std::uint64_t Sub64(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b > a) {
    throw ConsistencyError(std::string("negative per-edge count: ") + what);
  }
  return a - b;
}

using C = GraphletClass;

}  // namespace

Count GraphletFrequencies::SumOfSize(int k) const {
  Count total = 0;
  for (GraphletClass c : ClassesOfSize(k)) total += (*this)[c];
  return total;
}

EdgeLocalCounts ToLocalCounts(const EdgeShape& shape, std::uint64_t n) {
  EdgeLocalCounts local;
  local.tri = shape.tri;
  local.star_u = shape.star_u;
  local.star_v = shape.star_v;
  local.clique4 = shape.clique4;
  local.cycle4 = shape.cycle4;
  local.indep3 = Sub64(n, shape.tri + shape.star_u + shape.star_v + 2,
                       "vertices independent of the edge");
  return local;
}

Count UnrestrictedCounts::PairTotal() const {
  return static_cast<Count>(tt) + su_sv + ts + ss_same + ti + si + ii;
}

UnrestrictedCounts ComputeUnrestricted(const EdgeLocalCounts& local,
                                       std::uint64_t m) {
  UnrestrictedCounts out;
  const std::uint64_t star = CheckedAdd(local.star_u, local.star_v);
  out.tt = CheckedChoose2(local.tri);
  out.su_sv = CheckedMul(local.star_u, local.star_v);
  out.ts = CheckedMul(local.tri, star);
  out.ss_same =
      CheckedAdd(CheckedChoose2(local.star_u), CheckedChoose2(local.star_v));
  out.ti = CheckedMul(local.tri, local.indep3);
  out.si = CheckedMul(star, local.indep3);
  out.ii = CheckedChoose2(local.indep3);
  // |N(u)\{v}| = tri + star_u, |N(v)\{u}| = tri + star_v.
  out.exterior_bound =
      Sub64(m, 2 * local.tri + star + 1, "edges outside the egonet");
  return out;
}

void CensusSums::Add(const EdgeLocalCounts& local,
                     const UnrestrictedCounts& pairs) {
  edges += 1;
  tri += local.tri;
  star += static_cast<Count>(local.star_u) + local.star_v;
  indep3 += local.indep3;
  clique4 += local.clique4;
  cycle4 += local.cycle4;
  tt += pairs.tt;
  su_sv += pairs.su_sv;
  ts += pairs.ts;
  ss_same += pairs.ss_same;
  ti += pairs.ti;
  si += pairs.si;
  ii += pairs.ii;
  exterior_bound += pairs.exterior_bound;
}

CensusSums& CensusSums::operator+=(const CensusSums& o) {
  edges += o.edges;
  tri += o.tri;
  star += o.star;
  indep3 += o.indep3;
  clique4 += o.clique4;
  cycle4 += o.cycle4;
  tt += o.tt;
  su_sv += o.su_sv;
  ts += o.ts;
  ss_same += o.ss_same;
  ti += o.ti;
  si += o.si;
  ii += o.ii;
  exterior_bound += o.exterior_bound;
  return *this;
}

std::array<Count, 4> CloseTriads(const CensusSums& s, std::uint64_t n) {
  std::array<Count, 4> f{};
  f[0] = ExactDiv(s.tri, 3, "triangles");  // each seen from its 3 edges
  f[1] = ExactDiv(s.star, 2, "2-stars");   // each seen from its 2 edges
  f[2] = s.indep3;
  f[3] = CheckedSub(Choose3(n), f[0] + f[1] + f[2], "3-node-independent");
  return f;
}

std::array<Count, 11> CloseQuads(const CensusSums& s, std::uint64_t n) {
  std::array<Count, 11> f{};
  Count& clique = f[0];
  Count& chordal = f[1];
  Count& tailed = f[2];
  Count& cycle = f[3];
  Count& star3 = f[4];
  Count& path = f[5];
  Count& one_tri = f[6];
  Count& two_star = f[7];
  Count& two_edge = f[8];
  Count& one_edge = f[9];
  Count& independent = f[10];

  clique = ExactDiv(s.clique4, 6, "4-cliques");
  chordal = CheckedSub(s.tt, 6 * clique, "4-chordalcycles");
  cycle = ExactDiv(s.cycle4, 4, "4-cycles");
  path = CheckedSub(s.su_sv, 4 * cycle, "4-paths");
  tailed = ExactDiv(CheckedSub(s.ts, 4 * chordal, "4-tailedtriangles"), 2,
                    "4-tailedtriangles");
  star3 = ExactDiv(CheckedSub(s.ss_same, tailed, "3-stars"), 3, "3-stars");
  one_tri = ExactDiv(CheckedSub(s.ti, tailed, "4-node-1-triangles"), 3,
                     "4-node-1-triangles");
  two_star = ExactDiv(CheckedSub(s.si, 2 * path, "4-node-2-stars"), 2,
                      "4-node-2-stars");
  const Count interior =
      6 * clique + 4 * chordal + 2 * tailed + 4 * cycle + 2 * path;
  two_edge = ExactDiv(
      CheckedSub(s.exterior_bound, interior, "4-node-2-edges"), 2,
      "4-node-2-edges");
  one_edge = CheckedSub(s.ii, 2 * two_edge, "4-node-1-edges");
  Count connected_and_sparse = 0;
  for (int i = 0; i < 10; ++i) connected_and_sparse += f[i];
  independent =
      CheckedSub(Choose4(n), connected_and_sparse, "4-node-independent");
  return f;
}

GraphletFrequencies CloseCensus(const CensusSums& sums, std::uint64_t n,
                                std::uint64_t m) {
  if (sums.edges != m) {
    throw ConsistencyError("census visited " + ToString(sums.edges) +
                           " edges, graph has " + std::to_string(m));
  }
  GraphletFrequencies out;
  out.n = n;
  out.m = m;
  out[C::kEdge] = m;
  out[C::kTwoIndependent] = CheckedSub(Choose2(n), m, "2-node-independent");
  const auto f3 = CloseTriads(sums, n);
  const auto k3 = ClassesOfSize(3);
  for (std::size_t i = 0; i < f3.size(); ++i) out[k3[i]] = f3[i];
  const auto f4 = CloseQuads(sums, n);
  const auto k4 = ClassesOfSize(4);
  for (std::size_t i = 0; i < f4.size(); ++i) out[k4[i]] = f4[i];
  return out;
}

CensusSums ComputeCensusSums(const Graph& g, const ParallelConfig& config) {
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t m = g.num_edges();
  const GraphView view(g);
  return RunEdgeJobs<CensusSums>(
      g, config, [n] { return EdgeScratch(static_cast<VertexId>(n)); },
      [&](EdgeRef e, EdgeScratch& scratch, CensusSums& acc) {
        const EdgeLocalCounts local =
            ToLocalCounts(ComputeEdgeShape(view, e.u, e.v, scratch), n);
        acc.Add(local, ComputeUnrestricted(local, m));
      });
}

GraphletFrequencies GraphletCensus(const Graph& g,
                                   const ParallelConfig& config) {
  return CloseCensus(ComputeCensusSums(g, config), g.num_vertices(),
                     g.num_edges());
}

EdgeMicroCounts MicroCensus(const Graph& g, EdgeRef e, EdgeScratch& s) {
  const GraphView view(g);
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t m = g.num_edges();

  ClassifyNeighborhood(view, e.u, e.v, s);
  const SameSideCounts same = SameSideStarEdges(view, s);
  EdgeShape shape;
  shape.tri = s.tri.size();
  shape.star_u = s.star_u.size();
  shape.star_v = s.star_v.size();
  shape.clique4 = CliqueCount(view, s);
  shape.cycle4 = CycleCount(view, s);
  ClearMarks(s);

  EdgeMicroCounts out;
  out.index = e.index;
  out.u = e.u;
  out.v = e.v;
  out.local = ToLocalCounts(shape, n);
  out.unrestricted = ComputeUnrestricted(out.local, m);
  const auto& pairs = out.unrestricted;
  const std::uint64_t star = shape.star_u + shape.star_v;

  out.tt_1 = shape.clique4;
  out.su_sv_1 = shape.cycle4;
  out.ts_1 = same.tri_star_edges;
  out.ss_1 = same.star_u_edges + same.star_v_edges;
  // A Tri_e vertex is adjacent to u, v, its Tri_e and Star neighbors, and
  // otherwise only to I_e.
  out.ti_1 = Sub64(same.tri_degree_sum,
                   2 * shape.tri + 2 * out.tt_1 + out.ts_1, "Tri-I edges");
  // A Star vertex is adjacent to exactly one of u, v.
  out.si_1 = Sub64(same.star_degree_sum,
                   star + out.ts_1 + 2 * out.ss_1 + 2 * out.su_sv_1,
                   "Star-I edges");
  out.ii_1 = Sub64(pairs.exterior_bound,
                   out.tt_1 + out.ts_1 + out.ti_1 + out.ss_1 + out.su_sv_1 +
                       out.si_1,
                   "I-I edges");

  out.tt_0 = Sub64(pairs.tt, out.tt_1, "Tri-Tri non-edges");
  out.su_sv_0 = Sub64(pairs.su_sv, out.su_sv_1, "Su-Sv non-edges");
  out.ts_0 = Sub64(pairs.ts, out.ts_1, "Tri-Star non-edges");
  out.ss_0 = Sub64(pairs.ss_same, out.ss_1, "Star-Star non-edges");
  out.ti_0 = Sub64(pairs.ti, out.ti_1, "Tri-I non-edges");
  out.si_0 = Sub64(pairs.si, out.si_1, "Star-I non-edges");
  out.ii_0 = Sub64(pairs.ii, out.ii_1, "I-I non-edges");
  return out;
}

EdgeMicroCounts MicroCensus(const Graph& g, EdgeRef e) {
  EdgeScratch scratch(g.num_vertices());
  return MicroCensus(g, e, scratch);
}

MicroCensusResult MicroCensusAll(const Graph& g,
                                 const ParallelConfig& config) {
  MicroCensusResult result;
  result.edges.resize(g.num_edges());
  const auto n = g.num_vertices();
  const CensusSums sums = RunEdgeJobs<CensusSums>(
      g, config, [n] { return EdgeScratch(n); },
      [&](EdgeRef e, EdgeScratch& scratch, CensusSums& acc) {
        EdgeMicroCounts& slot = result.edges[e.index];
        slot = MicroCensus(g, e, scratch);
        acc.Add(slot.local, slot.unrestricted);
      });
  result.frequencies = CloseCensus(sums, n, g.num_edges());
  return result;
}

void WriteMicroCsv(const Graph& g, std::span<const EdgeMicroCounts> micro,
                   std::ostream& out) {
  out << "src,dst,tri,star_u,star_v,clique4,cycle4,chordal_chord,"
         "cycle_mid_path,indep3,chordal_rim,tailed_near,tailed_tail,"
         "tailed_far,star3,path_end,tri_isolated,star2_isolated,two_edge,"
         "one_edge\n";
  for (const EdgeMicroCounts& r : micro) {
    out << g.original_id(r.u) << ',' << g.original_id(r.v) << ','
        << r.local.tri << ',' << r.local.star_u << ',' << r.local.star_v
        << ',' << r.tt_1 << ',' << r.su_sv_1 << ',' << r.tt_0 << ','
        << r.su_sv_0 << ',' << r.local.indep3 << ',' << r.ts_1 << ','
        << r.ts_0 << ',' << r.ss_1 << ',' << r.ti_1 << ',' << r.ss_0 << ','
        << r.si_1 << ',' << r.ti_0 << ',' << r.si_0 << ',' << r.ii_1 << ','
        << r.ii_0 << '\n';
  }
}

}  // namespace gcensus
