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

#include "gensat/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gensat/errors.hpp"

namespace gensat {
namespace {

// Ranks vertices by (colour, sorted neighbour colours) until the number of
// classes stops growing. The result is an equitable, order-preserving
// refinement with colours 0..k-1.
int refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  int classes = -1;
  {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    classes = static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                               sorted.begin());
  }
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      g.neighbors(v).for_each([&](int u) { s.push_back(colors[u]); });
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      colors[order[i]] = rank;
    }
    const int now = n == 0 ? 0 : rank + 1;
    if (now == classes) return now;
    classes = now;
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::vector<int> initial)
      : g_(g), n_(g.order()), initial_(std::move(initial)) {}

  CanonicalLabeling run() {
    std::vector<int> colors = initial_;
    refine(g_, colors);
    std::vector<int> prefix;
    descend(colors, prefix);
    return {std::move(best_code_), std::move(best_position_)};
  }

 private:
  CanonicalCode code_of(const std::vector<int>& position) const {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv[position[v]] = v;
    CanonicalCode code;
    code.words.push_back(static_cast<std::uint64_t>(n_));
    for (int p = 0; p < n_; ++p) {
      code.words.push_back(static_cast<std::uint64_t>(initial_[inv[p]]));
    }
    std::uint64_t acc = 0;
    int filled = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | (g_.adjacent(inv[i], inv[j]) ? 1u : 0u);
        if (++filled == 64) {
          code.words.push_back(acc);
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) code.words.push_back(acc << (64 - filled));
    return code;
  }

  void leaf(const std::vector<int>& position) {
    CanonicalCode code = code_of(position);
    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_position_ = position;
      have_best_ = true;
      return;
    }
    if (code == best_code_) {
      std::vector<int> best_inv(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) best_inv[best_position_[v]] = v;
      std::vector<int> aut(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) aut[v] = best_inv[position[v]];
      automorphisms_.push_back(std::move(aut));
    }
  }

  void descend(const std::vector<int>& colors, std::vector<int>& prefix) {
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) ++cell_size[colors[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1 &&
          (target < 0 || cell_size[c] < cell_size[target])) {
        target = c;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty() && same_orbit_as_explored(v, explored, prefix)) {
        continue;
      }
      explored.push_back(v);
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int x = 0; x < n_; ++x) {
        next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
      }
      refine(g_, next);
      prefix.push_back(v);
      descend(next, prefix);
      prefix.pop_back();
    }
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current prefix pointwise.
  bool same_orbit_as_explored(int v, const std::vector<int>& explored,
                              const std::vector<int>& prefix) {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& aut : automorphisms_) {
      bool fixes = true;
      for (int p : prefix) {
        if (aut[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) uf.unite(x, aut[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    for (int u : explored) {
      if (uf.find(u) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> initial_;
  bool have_best_ = false;
  CanonicalCode best_code_;
  std::vector<int> best_position_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> colors) {
  std::vector<int> initial(static_cast<std::size_t>(g.order()), 0);
  if (!colors.empty()) {
    if (static_cast<int>(colors.size()) != g.order()) {
      throw DomainError("size_mismatch",
                        "vertex colouring length must equal graph order");
    }
    initial.assign(colors.begin(), colors.end());
  }
  // Normalise to dense ranks so that the code only depends on colour order.
  {
    std::vector<int> sorted = initial;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : initial) {
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                           sorted.begin());
    }
  }
  return CanonSearch(g, std::move(initial)).run();
}

CanonicalCode canonical_form(const Graph& g) {
  return canonical_labeling(g).code;
}

CanonicalCode rooted_canonical_form(const Graph& g, int v) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
  colors[v] = 0;
  return canonical_labeling(g, colors).code;
}

Graph canonical_graph(const Graph& g) {
  return g.relabeled(canonical_labeling(g).position);
}

std::vector<int> refined_colors(const Graph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  refine(g, colors);
  return colors;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gensat
