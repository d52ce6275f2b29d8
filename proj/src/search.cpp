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

#include "gensat/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <thread>

#include "gensat/canonical.hpp"
#include "gensat/constructions.hpp"
#include "gensat/count.hpp"
#include "gensat/embed.hpp"
#include "gensat/errors.hpp"
#include "gensat/graph6.hpp"
#include "gensat/saturation.hpp"

namespace gensat {
namespace {

bool colourable(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> rec = [&](int v, int used) {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool clash = false;
      g.neighbors(v).for_each([&](int u) {
        if (u < v && colour[u] == c) clash = true;
      });
      if (clash) continue;
      colour[v] = c;
      if (rec(v + 1, std::max(used, c + 1))) return true;
    }
    colour[v] = -1;
    return false;
  };
  return rec(0, 0);
}

bool has_clique_in(const Graph& g, const VertexSet& cand, int need) {
  if (need <= 0) return true;
  if (cand.count() < need) return false;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    if (has_clique_in(g, (cand & g.neighbors(v)).above(v), need - 1)) {
      return true;
    }
  }
  return false;
}

class Generator {
 public:
  explicit Generator(const SearchConstraints& c) : c_(c) {
    for (const Pattern& p : c_.forbidden) {
      if (p.kind() == PatternKind::kStar) {
        const int cap = p.parameter() - 1;
        degree_cap_ = degree_cap_ ? std::min(*degree_cap_, cap) : cap;
      } else if (p.kind() == PatternKind::kClique) {
        const int q = p.parameter();
        clique_limit_ = clique_limit_ ? std::min(*clique_limit_, q) : q;
      } else {
        general_.push_back(p.graph());
      }
    }
    if (c_.max_degree) {
      degree_cap_ =
          degree_cap_ ? std::min(*degree_cap_, *c_.max_degree) : *c_.max_degree;
    }
  }

  bool root_ok() const {
    return !(clique_limit_ && *clique_limit_ <= 1) &&
           !(degree_cap_ && *degree_cap_ < 0) && hereditary_ok(Graph(1));
  }

  // Canonical children of `parent`, deduplicated, in code order.
  std::vector<Graph> children(const Graph& parent) const {
    const int k = parent.order();
    std::map<CanonicalCode, Graph> accepted;
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      VertexSet s;
      for (int i = 0; i < k; ++i) {
        if ((mask >> i) & 1u) s.set(i);
      }
      if (!prefilter(parent, s)) continue;
      Graph child = parent.with_vertex(s);
      if (!hereditary_ok(child)) continue;
      std::optional<CanonicalCode> code = accept(child);
      if (code) accepted.emplace(std::move(*code), std::move(child));
    }
    std::vector<Graph> out;
    out.reserve(accepted.size());
    for (auto& [code, g] : accepted) out.push_back(std::move(g));
    return out;
  }

 private:
  bool prefilter(const Graph& parent, const VertexSet& s) const {
    if (degree_cap_) {
      if (s.count() > *degree_cap_) return false;
      bool ok = true;
      s.for_each([&](int u) {
        if (parent.degree(u) >= *degree_cap_) ok = false;
      });
      if (!ok) return false;
    }
    if (clique_limit_ && has_clique_in(parent, s, *clique_limit_ - 1)) {
      return false;
    }
    return true;
  }

  bool hereditary_ok(const Graph& child) const {
    for (const Graph& f : general_) {
      if (find_embedding(child, f)) return false;
    }
    if (c_.max_parts && !colourable(child, *c_.max_parts)) return false;
    return true;
  }

  // Rooted code of the new vertex if it is the canonical deletion choice.
  static std::optional<CanonicalCode> accept(const Graph& child) {
    const int v = child.order() - 1;
    const std::vector<int> colours = refined_colors(child);
    const int top = *std::max_element(colours.begin(), colours.end());
    if (colours[v] != top) return std::nullopt;
    CanonicalCode mine = rooted_canonical_form(child, v);
    for (int w = 0; w < v; ++w) {
      if (colours[w] != top) continue;
      if (rooted_canonical_form(child, w) < mine) return std::nullopt;
    }
    return mine;
  }

  SearchConstraints c_;
  std::optional<int> degree_cap_;
  std::optional<int> clique_limit_;
  std::vector<Graph> general_;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_cap(int n, const SearchOptions& opts) {
  if (n < 0) throw DomainError("search_parameter", "order must be >= 0");
  if (n > opts.max_order) {
    throw DomainError("cap_exceeded",
                      "order " + std::to_string(n) + " exceeds the search cap " +
                          std::to_string(opts.max_order));
  }
}

// Expands `g` to order n depth-first; `leaf` returns false to stop.
bool expand(const Generator& gen, const Graph& g, int n,
            const std::function<bool(const Graph&)>& leaf) {
  if (g.order() == n) return leaf(g);
  for (const Graph& c : gen.children(g)) {
    if (!expand(gen, c, n, leaf)) return false;
  }
  return true;
}

// Runs `unit_fn(index, root)` over the frontier at the split order on a
// pool of workers. Results are indexed by unit, so merging is independent
// of scheduling.
template <typename State>
std::vector<State> run_units(
    int n, const SearchConstraints& c, const SearchOptions& opts,
    const std::function<void(std::size_t, const Graph&, const Generator&,
                             State&)>& unit_fn) {
  check_cap(n, opts);
  const Generator gen(c);
  std::vector<Graph> frontier;
  if (n == 0) {
    frontier.push_back(Graph(0));
  } else if (gen.root_ok()) {
    int split = opts.split_order >= 0 ? opts.split_order : std::max(1, n - 3);
    split = std::clamp(split, 1, n);
    expand(gen, Graph(1), split, [&](const Graph& g) {
      frontier.push_back(g);
      return true;
    });
  }
  std::vector<State> states(frontier.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) return;
      unit_fn(i, frontier[i], gen, states[i]);
    }
  };
  const int workers =
      std::min<int>(resolve_workers(opts.workers),
                    static_cast<int>(std::max<std::size_t>(1, frontier.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return states;
}

struct SatState {
  std::uint64_t examined = 0;
  std::uint64_t saturated = 0;
  std::optional<Wide> minimum;
  std::uint64_t minimisers = 0;
  std::vector<std::string> witnesses;
};

struct FirstState {
  std::uint64_t examined = 0;
  std::optional<Graph> witness;
};

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const SearchConstraints& c,
                                    const SearchOptions& opts) {
  auto states = run_units<std::vector<Graph>>(
      n, c, opts,
      [&](std::size_t, const Graph& root, const Generator& gen,
          std::vector<Graph>& out) {
        expand(gen, root, n, [&](const Graph& g) {
          if (!c.connected_only || g.is_connected()) out.push_back(g);
          return true;
        });
      });
  std::vector<Graph> all;
  for (auto& s : states) {
    for (auto& g : s) all.push_back(std::move(g));
  }
  return all;
}

std::uint64_t count_graphs(int n, const SearchConstraints& c,
                           const SearchOptions& opts) {
  auto states = run_units<std::uint64_t>(
      n, c, opts,
      [&](std::size_t, const Graph& root, const Generator& gen,
          std::uint64_t& out) {
        expand(gen, root, n, [&](const Graph& g) {
          if (!c.connected_only || g.is_connected()) ++out;
          return true;
        });
      });
  std::uint64_t total = 0;
  for (auto v : states) total += v;
  return total;
}

SearchReport satnum_exact(int n, const Pattern& f, const Pattern& h,
                          const SearchConstraints& c, const SearchOptions& opts,
                          bool prune) {
  SearchConstraints cons = c;
  if (prune) {
    // Saturated graphs are F-free and F-freeness is inherited by induced
    // subgraphs; for stars this is the maximum degree cap.
    cons.forbidden.push_back(f);
  }
  const std::size_t cap = opts.witness_cap;
  auto states = run_units<SatState>(
      n, cons, opts,
      [&](std::size_t, const Graph& root, const Generator& gen, SatState& st) {
        expand(gen, root, n, [&](const Graph& g) {
          if (cons.connected_only && !g.is_connected()) return true;
          ++st.examined;
          if (!saturated(g, f)) return true;
          ++st.saturated;
          const Wide value = count_pattern(g, h);
          if (!st.minimum || value < *st.minimum) {
            st.minimum = value;
            st.minimisers = 0;
            st.witnesses.clear();
          }
          if (value == *st.minimum) {
            ++st.minimisers;
            if (st.witnesses.size() < cap) st.witnesses.push_back(encode_graph6(g));
          }
          return true;
        });
      });
  SearchReport rep;
  rep.n = n;
  rep.target = f.spec();
  rep.counted = h.spec();
  std::optional<Wide> best;
  for (const SatState& s : states) {
    rep.graphs_examined += s.examined;
    rep.saturated_found += s.saturated;
    if (s.minimum && (!best || *s.minimum < *best)) best = s.minimum;
  }
  if (!best) {
    throw DomainError("none_exist", "no " + f.spec() + "-saturated graph on " +
                                        std::to_string(n) +
                                        " vertices satisfies the constraints");
  }
  rep.minimum = *best;
  for (const SatState& s : states) {
    if (!s.minimum || *s.minimum != *best) continue;
    rep.witness_total += s.minimisers;
    for (const auto& w : s.witnesses) {
      if (rep.witnesses.size() < cap) rep.witnesses.push_back(w);
    }
  }
  return rep;
}

SearchConstraints parse_property(const std::string& property) {
  SearchConstraints c;
  auto number = [&](std::string_view digits) {
    int v = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || v < 1) {
      throw ParseError("bad number in property '" + property + "'", 0);
    }
    return v;
  };
  const std::string_view p = property;
  if (p.empty() || p == "none") return c;
  if (p == "bipartite") {
    c.max_parts = 2;
  } else if (p.starts_with("partite:")) {
    c.max_parts = number(p.substr(8));
  } else if (p.starts_with("max-clique:")) {
    c.forbidden.push_back(Pattern::clique(number(p.substr(11)) + 1));
  } else if (p.size() > 6 && p[0] == 'K' && p.ends_with("-free")) {
    c.forbidden.push_back(Pattern::clique(number(p.substr(1, p.size() - 6))));
  } else {
    throw ParseError("unknown property '" + property +
                         "' (expected Kq-free, bipartite, partite:r, "
                         "max-clique:q or none)",
                     0);
  }
  return c;
}

ExistenceReport exists_saturated_with(int n, const Pattern& f,
                                      const std::string& property,
                                      const SearchOptions& opts) {
  SearchConstraints cons = parse_property(property);
  cons.forbidden.push_back(f);
  // Units after the lowest one holding a witness may stop early; the answer
  // is the first witness of the lowest such unit.
  std::atomic<std::size_t> best_unit{SIZE_MAX};
  auto states = run_units<FirstState>(
      n, cons, opts,
      [&](std::size_t index, const Graph& root, const Generator& gen,
          FirstState& st) {
        expand(gen, root, n, [&](const Graph& g) {
          if (index > best_unit.load()) return false;
          ++st.examined;
          if (!saturated(g, f)) return true;
          st.witness = g;
          std::size_t cur = best_unit.load();
          while (index < cur && !best_unit.compare_exchange_weak(cur, index)) {
          }
          return false;
        });
      });
  ExistenceReport rep;
  rep.n = n;
  rep.target = f.spec();
  rep.property = property.empty() ? "none" : property;
  for (const FirstState& s : states) {
    if (s.witness) {
      rep.witness = s.witness;
      break;
    }
  }
  // Examined counts depend on early stopping, so only report them for a
  // complete (negative) search.
  if (!rep.witness) {
    for (const FirstState& s : states) rep.graphs_examined += s.examined;
  }
  return rep;
}

TstarScanReport tstar_scan(int n_max, const SearchOptions& opts) {
  check_cap(n_max, opts);
  TstarScanReport rep;
  const Pattern ts = Pattern::tree(t_star());
  for (int n = rep.first_order; n <= n_max; ++n) {
    ExistenceReport e = exists_saturated_with(n, ts, "K3-free", opts);
    TstarScanEntry entry;
    entry.n = n;
    entry.candidates = e.graphs_examined;
    entry.witness = e.witness;
    if (e.witness) rep.none_found = false;
    rep.entries.push_back(std::move(entry));
  }
  if (rep.control_order <= opts.max_order) {
    rep.control_witness =
        exists_saturated_with(rep.control_order, ts, "none", opts).witness;
  }
  return rep;
}

}  // namespace gensat
