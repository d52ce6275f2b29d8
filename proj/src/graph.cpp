// Copyright 2026 The gensat Authors.
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

#include "gensat/graph.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "gensat/errors.hpp"

namespace gensat {
namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw DomainError("capacity", "graph order " + std::to_string(n) +
                                      " outside [0, " +
                                      std::to_string(kMaxOrder) + "]");
  }
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  rows_.resize(static_cast<std::size_t>(n));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    rows_[u].above(u).for_each([&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!rows_[u].test(v)) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_complete() const {
  return edge_count_ ==
         static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  if (u != v && !g.rows_[u].test(v)) {
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  if (g.rows_[u].test(v)) {
    g.rows_[u].reset(v);
    g.rows_[v].reset(u);
    --g.edge_count_;
  }
  return g;
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph Graph::with_vertex(const VertexSet& nbrs) const {
  check_order(n_ + 1);
  Graph g = *this;
  const int x = n_;
  g.n_ = n_ + 1;
  g.rows_.push_back(nbrs);
  nbrs.for_each([&](int u) {
    g.rows_[u].set(x);
    ++g.edge_count_;
  });
  return g;
}

Graph Graph::induced(std::span<const int> keep) const {
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (rows_[keep[i]].test(keep[j])) {
        g.rows_[i].set(static_cast<int>(j));
        g.rows_[j].set(static_cast<int>(i));
        ++g.edge_count_;
      }
    }
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    rows_[u].for_each([&](int v) { g.rows_[perm[u]].set(perm[v]); });
  }
  g.edge_count_ = edge_count_;
  return g;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexSet seen;
  seen.set(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= rows_[v]; });
    next.subtract(seen);
    seen |= next;
    frontier = next;
  }
  return seen.count() == n_;
}

GraphBuilder::GraphBuilder(int n, bool strict) : g_(n), strict_(strict) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw DomainError("edge_out_of_range", "edge " + pair_text(u, v) +
                                               " references a vertex outside [0, " +
                                               std::to_string(g_.n_) + ")");
  }
  if (u == v) {
    throw DomainError("self_loop", "self-loop " + pair_text(u, v));
  }
  if (g_.rows_[u].test(v)) {
    if (strict_) {
      throw DomainError("duplicate_edge", "duplicate edge " + pair_text(u, v));
    }
    return *this;
  }
  g_.rows_[u].set(v);
  g_.rows_[v].set(u);
  ++g_.edge_count_;
  return *this;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph combine(CombineKind kind, const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxOrder) {
    throw DomainError("capacity", "combined order " + std::to_string(n1 + n2) +
                                      " exceeds capacity " +
                                      std::to_string(kMaxOrder));
  }
  GraphBuilder b(n1 + n2);
  for (const Edge& e : g1.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) b.add_edge(n1 + e.u, n1 + e.v);
  if (kind == CombineKind::kJoin) {
    for (int u = 0; u < n1; ++u) {
      for (int v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
    }
  }
  return b.build();
}

Graph blow_up(const Graph& g, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != g.order()) {
    throw DomainError("size_mismatch",
                      "blow-up needs one size per vertex: got " +
                          std::to_string(sizes.size()) + " for order " +
                          std::to_string(g.order()));
  }
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] <= 0) {
      throw DomainError("zero_size", "blow-up size for vertex " +
                                         std::to_string(v) +
                                         " must be positive");
    }
    offset[v + 1] = offset[v] + sizes[v];
  }
  if (offset.back() > kMaxOrder) {
    throw DomainError("capacity", "blow-up order " +
                                      std::to_string(offset.back()) +
                                      " exceeds capacity");
  }
  GraphBuilder b(offset.back());
  for (const Edge& e : g.edges()) {
    for (int x = offset[e.u]; x < offset[e.u + 1]; ++x) {
      for (int y = offset[e.v]; y < offset[e.v + 1]; ++y) b.add_edge(x, y);
    }
  }
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.non_edges()) b.add_edge(e.u, e.v);
  return b.build();
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int k) {
  GraphBuilder b(k);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int k) {
  if (k < 3) {
    throw DomainError("cycle_length", "cycle needs at least 3 vertices");
  }
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return b.build();
}

Graph star_graph(int r) {
  GraphBuilder b(r + 1);
  for (int i = 1; i <= r; ++i) b.add_edge(0, i);
  return b.build();
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  const Graph base = complete_graph(static_cast<int>(part_sizes.size()));
  return blow_up(base, part_sizes);
}

std::string to_json_string(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what(), e.byte);
  }
  if (!j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("edges") || !j["edges"].is_array()) {
    throw ParseError("graph JSON needs integer \"n\" and array \"edges\"", 0);
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("edge entries must be [i, j] pairs", 0);
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return build_graph(j["n"].get<int>(), edges);
}

}  // namespace gensat
