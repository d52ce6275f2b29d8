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

#include "gensat/constructions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gensat/errors.hpp"

namespace gensat {
namespace {

void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) throw DomainError(code, what);
}

std::string str(int v) { return std::to_string(v); }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Perfect matchings of `residual`, in a fixed order, passed to `visit` until
// it returns true.
bool for_each_perfect_matching(const Graph& residual,
                               const std::function<bool(std::vector<Edge>&)>& visit) {
  const int n = residual.order();
  VertexSet free_set = residual.vertices();
  std::vector<Edge> chosen;
  std::function<bool()> rec = [&]() -> bool {
    if (free_set.empty()) return visit(chosen);
    // Most constrained free vertex first.
    int best = -1;
    int best_options = n + 1;
    free_set.for_each([&](int v) {
      const int options = (residual.neighbors(v) & free_set).count();
      if (options < best_options) {
        best = v;
        best_options = options;
      }
    });
    if (best_options == 0) return false;
    free_set.reset(best);
    const VertexSet options = residual.neighbors(best) & free_set;
    for (int u = options.first(); u >= 0; u = options.next(u)) {
      free_set.reset(u);
      chosen.push_back({std::min(best, u), std::max(best, u)});
      if (rec()) return true;
      chosen.pop_back();
      free_set.set(u);
    }
    free_set.set(best);
    return false;
  };
  return rec();
}

// Removes `count` pairwise disjoint perfect matchings from `g`, backtracking
// when a residual graph has none; returns the removed edges.
std::vector<Edge> extract_matchings(const Graph& g, int count) {
  std::vector<Edge> removed;
  std::function<bool(const Graph&, int)> rec = [&](const Graph& residual,
                                                   int left) -> bool {
    if (left == 0) return true;
    return for_each_perfect_matching(residual, [&](std::vector<Edge>& m) {
      Graph next = residual;
      for (const Edge& e : m) next = next.without_edge(e.u, e.v);
      const std::size_t mark = removed.size();
      removed.insert(removed.end(), m.begin(), m.end());
      if (rec(next, left - 1)) return true;
      removed.resize(mark);
      return false;
    });
  };
  if (!rec(g, count)) {
    throw DomainError("no_factorization",
                      "could not extract " + str(count) + " perfect matchings");
  }
  return removed;
}

std::vector<int> blocks_partition(int a, int r) {
  std::vector<int> part(static_cast<std::size_t>(a * r));
  for (int v = 0; v < a * r; ++v) part[v] = v / a;
  return part;
}

struct Piece {
  Graph graph;
  std::vector<int> part;
  std::string label;
};

PartitionedGraph assemble(const std::vector<Piece>& pieces, int parts,
                          std::string recipe) {
  PartitionedGraph out;
  out.graph = Graph(0);
  for (const Piece& p : pieces) {
    out.graph = combine(CombineKind::kDisjointUnion, out.graph, p.graph);
    out.part.insert(out.part.end(), p.part.begin(), p.part.end());
  }
  out.parts = parts;
  out.recipe = std::move(recipe);
  return out;
}

Piece clique_piece(int size) {
  Piece p{complete_graph(size), {}, "K" + str(size)};
  for (int v = 0; v < size; ++v) p.part.push_back(v);
  return p;
}

Piece regular_piece(int a, int s, int k) {
  PartitionedGraph g = regular_multipartite(a, s, k);
  return {g.graph, g.part,
          str(k) + "-regular " + str(s) + "-partite on " + str(a * s)};
}

std::string describe(const std::vector<Piece>& pieces) {
  std::string out;
  for (const Piece& p : pieces) {
    if (p.graph.order() == 0) continue;
    if (!out.empty()) out += " + ";
    out += p.label;
  }
  return out.empty() ? "empty" : out;
}

// The construction from the existence proof; may place cliques with more
// than r vertices, in which case the caller falls back.
std::vector<Piece> closed_form_pieces(int n, int t, int s) {
  const int a = n / s;
  const int b = n % s;
  std::vector<Piece> pieces;
  int rest = 0;
  if ((a * s) % 2 == 0) {
    pieces.push_back(regular_piece(a, s, t - 1));
    rest = b;
  } else {
    pieces.push_back(regular_piece(a - 1, s, t - 1));
    rest = b + s;
  }
  for (int i = 0; i < rest / t; ++i) pieces.push_back(clique_piece(t));
  if (rest % t > 0) pieces.push_back(clique_piece(rest % t));
  return pieces;
}

// Disjoint regular multipartite blocks with at most r parts each, plus one
// clique on fewer than min(r, t-1)+1 vertices. Fewest blocks first.
std::vector<Piece> fallback_pieces(int n, int r, int t) {
  struct Block {
    int a;
    int s;
  };
  std::vector<Block> kinds;
  for (int s = r; s >= 2; --s) {
    for (int a = ceil_div(t - 1, s - 1); a * s <= n; ++a) {
      if ((a * s) % 2 == 0) kinds.push_back({a, s});
    }
  }
  std::sort(kinds.begin(), kinds.end(), [](const Block& x, const Block& y) {
    if (x.a * x.s != y.a * y.s) return x.a * x.s > y.a * y.s;
    return x.s > y.s;
  });
  const int max_clique = std::min(r, t - 1);
  std::vector<Block> chosen;
  std::function<bool(int, int, std::size_t)> rec = [&](int left, int depth,
                                                        std::size_t from) {
    if (left <= max_clique) return true;
    if (depth == 0) return false;
    for (std::size_t i = from; i < kinds.size(); ++i) {
      const int size = kinds[i].a * kinds[i].s;
      if (size > left) continue;
      chosen.push_back(kinds[i]);
      if (rec(left - size, depth - 1, i)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int depth = 1; depth <= 4; ++depth) {
    chosen.clear();
    if (rec(n, depth, 0)) {
      std::vector<Piece> pieces;
      int used = 0;
      for (const Block& b : chosen) {
        pieces.push_back(regular_piece(b.a, b.s, t - 1));
        used += b.a * b.s;
      }
      if (n - used > 0) pieces.push_back(clique_piece(n - used));
      return pieces;
    }
  }
  throw DomainError("partite_unrealized",
                    "no block decomposition found for n=" + str(n));
}

Graph circulant(int n, const std::vector<int>& offsets) {
  GraphBuilder b(n, false);
  for (int i = 0; i < n; ++i) {
    for (int d : offsets) b.add_edge(i, (i + d) % n);
  }
  return b.build();
}

}  // namespace

Graph split_graph(int n, int t) {
  require(t >= 2, "split_parameter", "split graph needs t >= 2");
  require(n >= t, "split_parameter",
          "split graph needs n >= t (got n=" + str(n) + ", t=" + str(t) + ")");
  return combine(CombineKind::kJoin, complete_graph(t - 2),
                 empty_graph(n - t + 2));
}

Graph near_regular(int a, int b) {
  require(a >= 0, "near_regular_parameter", "R_{a,b} needs a >= 0");
  require(b >= a + 1, "near_regular_existence",
          "R_{a,b} exists only when b >= a+1 (got a=" + str(a) + ", b=" +
              str(b) + ")");
  require(b <= kMaxOrder, "capacity", "order exceeds capacity");
  std::vector<int> offsets;
  if ((a * b) % 2 == 1) {
    for (int d = 1; d <= (a - 1) / 2; ++d) offsets.push_back(d);
    Graph g = circulant(b, offsets);
    const int h = (b - 1) / 2;
    for (int i = 1; i <= h; ++i) g = g.with_edge(i, (i + h) % b);
    return g;
  }
  for (int d = 1; d <= a / 2; ++d) offsets.push_back(d);
  if (a % 2 == 1) offsets.push_back(b / 2);
  return circulant(b, offsets);
}

Graph kr_graph(int t, int n, int m) {
  require(t >= 2, "kr_parameter", "KR needs t >= 2");
  require(m >= 0, "kr_parameter", "KR needs m >= 0");
  require(m <= t - 1, "kr_parameter",
          "KR needs m <= t-1 (got m=" + str(m) + ", t=" + str(t) + ")");
  require(n - m >= t, "kr_parameter",
          "KR needs n-m >= t so that R_{t-1,n-m} exists (got n=" + str(n) +
              ", m=" + str(m) + ")");
  const bool odd = ((t - 1) * (n - m)) % 2 == 1;
  require(!(odd && m == 0), "kr_parity",
          "KR with m=0 needs (t-1)n even: the bridging edge has no clique end");
  Graph g = combine(CombineKind::kDisjointUnion, complete_graph(m),
                    near_regular(t - 1, n - m));
  if (odd) g = g.with_edge(0, m);
  return g;
}

PartitionedGraph regular_multipartite(int a, int r, int k) {
  require(a >= 1, "multipartite_parameter", "part size a must be >= 1");
  require(r >= 2, "multipartite_parameter", "need r >= 2 parts");
  require(k >= 0 && k <= a * (r - 1), "multipartite_degree",
          "degree k must lie in [0, a(r-1)] = [0, " + str(a * (r - 1)) + "]");
  require(a * r <= kMaxOrder, "capacity", "order exceeds capacity");
  PartitionedGraph out;
  out.parts = r;
  out.part = blocks_partition(a, r);
  const int n = a * r;
  if (n % 2 == 1) {
    require(k % 2 == 0, "overfull",
            "K_{a,...,a} is overfull when ar is odd: no " + str(k) +
                "-regular spanning subgraph with k odd on " + str(n) +
                " vertices");
    // Circulant on Z_n with part(i) = i mod r, offsets avoiding multiples
    // of r, then relabelled so parts are contiguous.
    std::vector<int> offsets;
    for (int d = 1; static_cast<int>(offsets.size()) < k / 2; ++d) {
      if (d % r != 0) offsets.push_back(d);
    }
    const Graph c = circulant(n, offsets);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = (i % r) * a + i / r;
    out.graph = c.relabeled(perm);
    out.recipe = "circulant";
    return out;
  }
  std::vector<int> sizes(static_cast<std::size_t>(r), a);
  const Graph full = complete_multipartite(sizes);
  const int total = a * (r - 1);
  if (k <= total - k) {
    GraphBuilder b(n);
    for (const Edge& e : extract_matchings(full, k)) b.add_edge(e.u, e.v);
    out.graph = b.build();
  } else {
    Graph g = full;
    for (const Edge& e : extract_matchings(full, total - k)) {
      g = g.without_edge(e.u, e.v);
    }
    out.graph = g;
  }
  out.recipe = "matching extraction";
  return out;
}

PartitionedGraph partite_saturated(int n, int r, int t, int c) {
  require(r >= 3, "partite_parameter", "need r >= 3");
  require(t >= 3, "partite_parameter", "need t >= 3");
  require(c >= 0 && c <= r - 2, "partite_parameter",
          "need 0 <= c <= r-2 (got c=" + str(c) + ")");
  const int s = r - c;
  const int n1 = s * ceil_div(t - 1, s - 1) + s;
  require(n >= t + 1, "partite_bound",
          "order too small: n=" + str(n) + " < t+1=" + str(t + 1));
  require(n >= n1, "partite_bound",
          "order too small: n=" + str(n) +
              " < (r-c)ceil((t-1)/(r-c-1))+r-c=" + str(n1));
  require(n <= kMaxOrder, "capacity", "order exceeds capacity");
  std::vector<Piece> pieces = closed_form_pieces(n, t, s);
  bool fits = true;
  for (const Piece& p : pieces) {
    if (p.label[0] == 'K' && p.graph.order() > r) fits = false;
  }
  if (fits) return assemble(pieces, r, "clique pieces: " + describe(pieces));
  pieces = fallback_pieces(n, r, t);
  return assemble(pieces, r,
                  "block decomposition (clique pieces would need a clique "
                  "larger than r): " +
                      describe(pieces));
}

bool is_proper_partition(const Graph& g, const std::vector<int>& part,
                         int parts) {
  if (static_cast<int>(part.size()) != g.order()) return false;
  for (int p : part) {
    if (p < 0 || p >= parts) return false;
  }
  for (const Edge& e : g.edges()) {
    if (part[e.u] == part[e.v]) return false;
  }
  return true;
}

Graph g49() {
  // A..I = 0..8.
  static const std::vector<Edge> kEdges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 3},
      {3, 5}, {1, 5}, {6, 7}, {7, 8}, {6, 8}, {4, 7}, {4, 8},
      {0, 8}, {0, 6}, {2, 6}, {2, 7}, {3, 7}, {5, 8}, {1, 6}};
  return build_graph(9, kEdges);
}

Graph g4n(int n) {
  require(n >= 9, "g4n_parameter", "G_{4,n} needs n >= 9");
  const int extra = n - 6;
  std::vector<int> sizes(9, 1);
  // A, C, E as equal as possible; larger classes to A, then C, then E.
  const int idx[3] = {0, 2, 4};
  for (int i = 0; i < 3; ++i) sizes[idx[i]] = extra / 3 + (i < extra % 3 ? 1 : 0);
  return blow_up(g49(), sizes);
}

Graph gtn(int t, int n) {
  require(t >= 4, "gtn_parameter", "G_{t,n} needs t >= 4");
  require(n >= t + 5, "gtn_parameter",
          "G_{t,n} needs n >= t+5 (got n=" + str(n) + ", t=" + str(t) + ")");
  return combine(CombineKind::kJoin, g4n(n - t + 4), complete_graph(t - 4));
}

Graph w_t(int t, const std::vector<int>& m) {
  require(t >= 4, "w_t_parameter", "W_t needs t >= 4");
  require(m.size() == 5, "w_t_parameter", "W_t needs five class sizes");
  for (int v : m) require(v >= 1, "w_t_parameter", "class sizes must be >= 1");
  return combine(CombineKind::kJoin, blow_up(cycle_graph(5), m),
                 complete_graph(t - 3));
}

Graph fig1() {
  GraphBuilder b(6);
  for (int i = 0; i < 6; ++i) b.add_edge(i, (i + 1) % 6);
  b.add_edge(0, 2).add_edge(2, 4).add_edge(0, 4);
  b.add_edge(1, 3).add_edge(3, 5).add_edge(1, 5);
  return b.build();
}

Graph fig2() {
  static const std::vector<Edge> kEdges = {
      {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
      {1, 2}, {0, 1}, {0, 3}, {1, 4}, {0, 5}};
  return build_graph(6, kEdges);
}

Graph t_star() {
  static const std::vector<Edge> kEdges = {{0, 1}, {1, 2}, {0, 3},
                                           {3, 4}, {0, 5}, {5, 6}};
  return build_graph(7, kEdges);
}

Graph cycle_pendants(int k) {
  require(k >= 3, "cycle_pendants_parameter", "cycle length must be >= 3");
  require(2 * k <= kMaxOrder, "capacity", "order exceeds capacity");
  GraphBuilder b(2 * k);
  for (int i = 0; i < k; ++i) {
    b.add_edge(i, (i + 1) % k);
    b.add_edge(i, k + i);
  }
  return b.build();
}

std::vector<std::string> construction_families() {
  return {"split",  "near_regular", "kr",   "regular_multipartite",
          "partite_saturated", "g49", "g4n", "gtn", "w_t", "fig1", "fig2",
          "t_star", "cycle_pendants"};
}

ConstructionResult construct(const std::string& family,
                             const std::map<std::string, int>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw DomainError("missing_parameter",
                        "family " + family + " needs parameter " + key);
    }
    return it->second;
  };
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      bool known = false;
      for (const char* key : keys) known = known || k == key;
      if (!known) {
        throw DomainError("unknown_parameter",
                          "family " + family + " has no parameter " + k);
      }
    }
  };
  ConstructionResult out;
  out.family = family;
  if (family == "split") {
    only({"n", "t"});
    out.graph = split_graph(get("n"), get("t"));
  } else if (family == "near_regular") {
    only({"a", "b"});
    out.graph = near_regular(get("a"), get("b"));
  } else if (family == "kr") {
    only({"t", "n", "m"});
    out.graph = kr_graph(get("t"), get("n"), get("m"));
  } else if (family == "regular_multipartite") {
    only({"a", "r", "k"});
    PartitionedGraph pg = regular_multipartite(get("a"), get("r"), get("k"));
    out.graph = pg.graph;
    out.part = pg.part;
    out.parts = pg.parts;
    out.recipe = pg.recipe;
  } else if (family == "partite_saturated") {
    only({"n", "r", "t", "c"});
    PartitionedGraph pg =
        partite_saturated(get("n"), get("r"), get("t"), get("c"));
    out.graph = pg.graph;
    out.part = pg.part;
    out.parts = pg.parts;
    out.recipe = pg.recipe;
  } else if (family == "g49") {
    only({});
    out.graph = g49();
  } else if (family == "g4n") {
    only({"n"});
    out.graph = g4n(get("n"));
  } else if (family == "gtn") {
    only({"t", "n"});
    out.graph = gtn(get("t"), get("n"));
  } else if (family == "w_t") {
    only({"t", "m1", "m2", "m3", "m4", "m5"});
    out.graph = w_t(get("t"),
                    {get("m1"), get("m2"), get("m3"), get("m4"), get("m5")});
  } else if (family == "fig1") {
    only({});
    out.graph = fig1();
  } else if (family == "fig2") {
    only({});
    out.graph = fig2();
  } else if (family == "t_star") {
    only({});
    out.graph = t_star();
  } else if (family == "cycle_pendants") {
    only({"k"});
    out.graph = cycle_pendants(get("k"));
  } else {
    std::ostringstream known;
    for (const auto& f : construction_families()) known << ' ' << f;
    throw DomainError("unknown_family",
                      "unknown family '" + family + "'; known:" + known.str());
  }
  return out;
}

}  // namespace gensat
