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

// Small simple undirected graphs stored as bitset adjacency rows.
//
// A Graph is an immutable value: every "mutation" returns a new graph, so
// values can be shared freely between search workers. Bulk construction goes
// through GraphBuilder.

#ifndef GENSAT_GRAPH_HPP_
#define GENSAT_GRAPH_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gensat {

inline constexpr int kBlockBits = 64;
inline constexpr int kBlocks = 4;
// Hard capacity of the representation; raise kBlocks to extend.
inline constexpr int kMaxOrder = kBlockBits * kBlocks;

class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet range(int n) {
    VertexSet s;
    for (int b = 0; b < kBlocks && n > 0; ++b, n -= kBlockBits) {
      s.words_[b] = n >= kBlockBits ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  // Smallest member, or -1.
  int first() const {
    for (int b = 0; b < kBlocks; ++b) {
      if (words_[b]) return b * kBlockBits + std::countr_zero(words_[b]);
    }
    return -1;
  }
  // Smallest member greater than v, or -1.
  int next(int v) const {
    ++v;
    int b = v >> 6;
    if (b >= kBlocks) return -1;
    std::uint64_t w = words_[b] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return b * kBlockBits + std::countr_zero(w);
      if (++b >= kBlocks) return -1;
      w = words_[b];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int b = 0; b < kBlocks; ++b) {
      std::uint64_t w = words_[b];
      while (w) {
        fn(b * kBlockBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int b = 0; b < kBlocks; ++b) words_[b] &= o.words_[b];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int b = 0; b < kBlocks; ++b) words_[b] |= o.words_[b];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (int b = 0; b < kBlocks; ++b) words_[b] &= ~o.words_[b];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    return a.subtract(b);
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Members strictly above v.
  VertexSet above(int v) const {
    VertexSet s = *this;
    int b = v >> 6;
    for (int i = 0; i < b; ++i) s.words_[i] = 0;
    if ((v & 63) == 63) {
      s.words_[b] = 0;
    } else {
      s.words_[b] &= ~std::uint64_t{0} << ((v & 63) + 1);
    }
    return s;
  }

 private:
  std::array<std::uint64_t, kBlocks> words_{};
};

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  std::vector<int> degrees() const;
  int max_degree() const;
  int min_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  // Non-adjacent pairs with u < v in lexicographic order.
  std::vector<Edge> non_edges() const;
  bool is_complete() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph without_vertex(int v) const;
  // Appends a vertex adjacent to `nbrs` (all < order()).
  Graph with_vertex(const VertexSet& nbrs) const;
  // Subgraph induced by `keep`, relabeled 0..k-1 in the given order.
  Graph induced(std::span<const int> keep) const;
  // Graph h with h.adjacent(perm[u], perm[v]) == adjacent(u, v).
  Graph relabeled(std::span<const int> perm) const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
};

// Mutable accumulator for constructions. add_edge rejects loops and
// out-of-range indices; `strict` additionally rejects repeated edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n, bool strict = true);

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.rows_[u].test(v); }
  int degree(int v) const { return g_.rows_[v].count(); }
  Graph build() const { return g_; }

 private:
  Graph g_;
  bool strict_;
};

// Validating constructor: indices in range, no loops, no duplicates.
Graph build_graph(int n, std::span<const Edge> edges);

enum class CombineKind { kDisjointUnion, kJoin };

Graph combine(CombineKind kind, const Graph& g1, const Graph& g2);
// Replaces vertex v by an independent set of sizes[v] vertices; copies of
// adjacent originals are completely joined.
Graph blow_up(const Graph& g, std::span<const int> sizes);
Graph complement(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int k);
Graph cycle_graph(int k);
// K_{1,r}: center 0, leaves 1..r.
Graph star_graph(int r);
Graph complete_multipartite(std::span<const int> part_sizes);

std::string to_json_string(const Graph& g);
Graph from_json_string(const std::string& text);

}  // namespace gensat

#endif  // GENSAT_GRAPH_HPP_
