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

#include "gcensus/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gcensus/errors.h"

namespace gcensus {

Graph Graph::FromEdges(VertexId n,
                       std::span<const std::pair<VertexId, VertexId>> pairs,
                       std::vector<std::int64_t> original_ids) {
  if (!original_ids.empty() && original_ids.size() != n) {
    throw InvalidArgument("original id table size does not match n");
  }
  Graph g;
  g.n_ = n;
  g.original_ids_ = std::move(original_ids);

  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) continue;
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  g.adjacency_.resize(2 * g.edges_.size());
  g.adjacency_edges_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order fills every list in ascending order: all
  // lower neighbors w < x arrive (ascending) before any higher one.
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[cursor[e.u]] = e.v;
    g.adjacency_edges_[cursor[e.u]++] = i;
    g.adjacency_[cursor[e.v]] = e.u;
    g.adjacency_edges_[cursor[e.v]++] = i;
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeIndex> Graph::FindEdge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

bool Graph::HasEdge(VertexId a, VertexId b) const {
  return FindEdge(a, b).has_value();
}

std::optional<VertexId> Graph::FindVertex(std::int64_t original) const {
  if (original_ids_.empty()) {
    if (original < 0 || original >= static_cast<std::int64_t>(n_)) {
      return std::nullopt;
    }
    return static_cast<VertexId>(original);
  }
  const auto it =
      std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
  if (it == original_ids_.end() || *it != original) return std::nullopt;
  return static_cast<VertexId>(it - original_ids_.begin());
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_ != b.edges_) return false;
  for (VertexId v = 0; v < a.n_; ++v) {
    if (a.original_id(v) != b.original_id(v)) return false;
  }
  return true;
}

namespace {

bool IsSeparator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Splits off up to `max_tokens` tokens.
std::vector<std::string_view> Tokenize(std::string_view line,
                                       std::size_t max_tokens) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size() && tokens.size() < max_tokens) {
    while (i < line.size() && IsSeparator(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsSeparator(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::int64_t> ParseId(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::string_view StripLeft(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

}  // namespace

Graph LoadEdgeList(std::istream& in, const ParseOptions& options) {
  ParseOptions opts = options;
  bool expect_size_line = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = StripLeft(line);
    if (line_no == 1 && body.starts_with("%%MatrixMarket")) {
      expect_size_line = true;
      continue;
    }
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;
    const auto tokens = Tokenize(body, 3);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected at least two vertex ids",
                       line_no);
    }
    const auto a = ParseId(tokens[0]);
    const auto b = ParseId(tokens[1]);
    if (!a || !b) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": vertex ids must be integers",
                       line_no);
    }
    if (expect_size_line) {
      // "rows cols nnz": declares the vertex range of a 1-based matrix.
      expect_size_line = false;
      if (!options.max_vertex_id) {
        opts.max_vertex_id = std::max(*a, *b);
        opts.id_base = 1;
      }
      continue;
    }
    raw.emplace_back(*a, *b);
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  if (opts.max_vertex_id) {
    const std::int64_t lo = opts.id_base;
    const std::int64_t hi = *opts.max_vertex_id;
    if (!ids.empty() && (ids.front() < lo || ids.back() > hi)) {
      throw ParseError("vertex id outside the declared range [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           "]",
                       0);
    }
    if (hi >= lo) {
      if (hi - lo >= static_cast<std::int64_t>(
                         std::numeric_limits<VertexId>::max())) {
        throw SizeError("declared vertex range too large");
      }
      ids.clear();
      for (std::int64_t id = lo; id <= hi; ++id) ids.push_back(id);
    }
  }
  if (raw.empty() && ids.empty()) {
    throw ParseError("input contains no edges", 0);
  }
  if (ids.size() >= std::numeric_limits<VertexId>::max()) {
    throw SizeError("too many distinct vertex ids");
  }

  // Sorted remap keeps original order, so canonical u < v is preserved.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(raw.size());
  auto dense = [&ids](std::int64_t id) {
    return static_cast<VertexId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (const auto& [a, b] : raw) pairs.emplace_back(dense(a), dense(b));
  const auto n = static_cast<VertexId>(ids.size());
  return Graph::FromEdges(n, pairs, std::move(ids));
}

Graph LoadEdgeList(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return LoadEdgeList(in, options);
}

Graph LoadEdgeListFile(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LoadEdgeList(in, options);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) {
    out << g.original_id(e.u) << ' ' << g.original_id(e.v) << '\n';
  }
}

Graph Complement(const Graph& g, VertexId cap) {
  const VertexId n = g.num_vertices();
  if (n > cap) {
    throw SizeError("complement of a graph with " + std::to_string(n) +
                    " vertices exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const std::size_t total =
      static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  pairs.reserve(total - g.num_edges());
  std::vector<char> adjacent(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) adjacent[w] = 1;
    for (VertexId v = u + 1; v < n; ++v) {
      if (!adjacent[v]) pairs.emplace_back(u, v);
    }
    for (VertexId w : g.neighbors(u)) adjacent[w] = 0;
  }
  std::vector<std::int64_t> ids(n);
  for (VertexId v = 0; v < n; ++v) ids[v] = g.original_id(v);
  return Graph::FromEdges(n, pairs, std::move(ids));
}

std::vector<EdgeIndex> OrderEdgesByDegree(const Graph& g) {
  // Primary key: max endpoint degree. Secondary: min endpoint degree, so the
  // edge joining two hubs goes before a hub's pendant edges.
  std::vector<EdgeIndex> order(g.num_edges());
  std::vector<std::pair<std::size_t, std::size_t>> key(g.num_edges());
  for (EdgeIndex i = 0; i < order.size(); ++i) {
    order[i] = i;
    const Edge& e = g.edges()[i];
    const std::size_t du = g.degree(e.u);
    const std::size_t dv = g.degree(e.v);
    key[i] = {std::max(du, dv), std::min(du, dv)};
  }
  std::stable_sort(order.begin(), order.end(),
                   [&key](EdgeIndex a, EdgeIndex b) { return key[a] > key[b]; });
  return order;
}

}  // namespace gcensus
