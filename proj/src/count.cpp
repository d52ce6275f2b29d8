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

#include "gensat/count.hpp"

#include <algorithm>

#include "gensat/combinatorics.hpp"
#include "gensat/embed.hpp"
#include "gensat/errors.hpp"

namespace gensat {
namespace {

Count narrow(Wide v) {
  if (v < 0 || v > static_cast<Wide>(~Count{0})) {
    throw DomainError("overflow", "count exceeds 64 bits");
  }
  return static_cast<Count>(v);
}

Count cliques_in(const Graph& g, const VertexSet& cand, int remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return static_cast<Count>(cand.count());
  Count total = 0;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    VertexSet next = (cand & g.neighbors(v)).above(v);
    if (next.count() >= remaining - 1) {
      total += cliques_in(g, next, remaining - 1);
    }
  }
  return total;
}

Count paths_from(const Graph& g, int v, VertexSet& used, int remaining) {
  if (remaining == 0) return 1;
  Count total = 0;
  const VertexSet cand = g.neighbors(v) - used;
  cand.for_each([&](int u) {
    used.set(u);
    total += paths_from(g, u, used, remaining - 1);
    used.reset(u);
  });
  return total;
}

// Paths root -> ... -> v through vertices above root that can close back to
// root after exactly `remaining` more vertices.
Count cycles_from(const Graph& g, int root, int v, VertexSet& used,
                  int remaining) {
  if (remaining == 0) return g.adjacent(v, root) ? 1 : 0;
  Count total = 0;
  const VertexSet cand = (g.neighbors(v) - used).above(root);
  cand.for_each([&](int u) {
    used.set(u);
    total += cycles_from(g, root, u, used, remaining - 1);
    used.reset(u);
  });
  return total;
}

int max_clique_in(const Graph& g, VertexSet cand, int size, int best) {
  if (cand.empty()) return std::max(best, size);
  while (!cand.empty()) {
    if (size + cand.count() <= best) return best;
    const int v = cand.first();
    cand.reset(v);
    best = max_clique_in(g, cand & g.neighbors(v), size + 1, best);
  }
  return std::max(best, size);
}

}  // namespace

Count count_cliques(const Graph& g, int r) {
  if (r < 1) throw DomainError("pattern_parameter", "clique size must be >= 1");
  if (r > g.order()) return 0;
  return cliques_in(g, g.vertices(), r);
}

Count count_stars(const Graph& g, int r) {
  if (r < 1) throw DomainError("pattern_parameter", "star size must be >= 1");
  if (r == 1) return static_cast<Count>(g.size());
  Wide total = 0;
  for (int v = 0; v < g.order(); ++v) {
    total = checked_add(total, binomial(g.degree(v), r));
  }
  return narrow(total);
}

Count count_paths(const Graph& g, int k) {
  if (k < 2) throw DomainError("pattern_parameter", "path needs >= 2 vertices");
  if (k > g.order()) return 0;
  Count ordered = 0;
  VertexSet used;
  for (int v = 0; v < g.order(); ++v) {
    used.set(v);
    ordered += paths_from(g, v, used, k - 1);
    used.reset(v);
  }
  return ordered / 2;
}

Count count_cycles(const Graph& g, int k) {
  if (k < 3) throw DomainError("pattern_parameter", "cycle needs >= 3 vertices");
  if (k > g.order()) return 0;
  Count directed = 0;
  VertexSet used;
  for (int root = 0; root < g.order(); ++root) {
    used.set(root);
    directed += cycles_from(g, root, root, used, k - 1);
    used.reset(root);
  }
  return directed / 2;
}

Count tree_automorphisms(const Graph& t) {
  if (!is_tree(t)) {
    throw DomainError("not_a_tree", "automorphism count requested for a non-tree");
  }
  return automorphism_count(t);
}

Count automorphism_count(const Graph& g) { return count_embeddings(g, g); }

Count count_tree(const Graph& g, const Pattern& t) {
  if (!t.is_tree_shaped()) {
    throw DomainError("not_a_tree", "pattern " + t.spec() + " is not a tree");
  }
  return count_embeddings(g, t.graph()) / tree_automorphisms(t.graph());
}

Count count_pattern(const Graph& g, const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::kClique:
      return count_cliques(g, p.parameter());
    case PatternKind::kStar:
      return count_stars(g, p.parameter());
    case PatternKind::kPath:
      return count_paths(g, p.parameter());
    case PatternKind::kCycle:
      return count_cycles(g, p.parameter());
    case PatternKind::kTree:
      return count_tree(g, p);
    case PatternKind::kGraph:
      return count_embeddings(g, p.graph()) / automorphism_count(p.graph());
  }
  return 0;
}

int clique_number(const Graph& g) {
  return max_clique_in(g, g.vertices(), 0, 0);
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

Count count_independent_sets(const Graph& g, int k) {
  if (k < 0) throw DomainError("pattern_parameter", "set size must be >= 0");
  if (k == 0) return 1;
  return count_cliques(complement(g), k);
}

}  // namespace gensat
