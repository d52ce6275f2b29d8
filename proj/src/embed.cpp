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

#include "gensat/embed.hpp"

#include <algorithm>

namespace gensat {
namespace {

// Pattern vertices in matching order; each entry lists its already-placed
// pattern neighbours so candidates come from neighbourhood intersections.
struct MatchPlan {
  std::vector<int> order;
  std::vector<std::vector<int>> placed_nbrs;
};

MatchPlan make_plan(const Graph& p, std::vector<int> seeds) {
  const int k = p.order();
  MatchPlan plan;
  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  auto place = [&](int a) {
    placed[a] = 1;
    plan.order.push_back(a);
  };
  for (int s : seeds) place(s);
  while (static_cast<int>(plan.order.size()) < k) {
    // Prefer the unplaced vertex with most placed neighbours, then highest
    // degree: keeps the candidate sets small.
    int best = -1;
    int best_links = -1;
    int best_deg = -1;
    for (int a = 0; a < k; ++a) {
      if (placed[a]) continue;
      int links = 0;
      p.neighbors(a).for_each([&](int b) { links += placed[b]; });
      const int deg = p.degree(a);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = a;
        best_links = links;
        best_deg = deg;
      }
    }
    place(best);
  }
  plan.placed_nbrs.resize(static_cast<std::size_t>(k));
  std::vector<int> rank(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) rank[plan.order[i]] = i;
  for (int i = 0; i < k; ++i) {
    const int a = plan.order[i];
    p.neighbors(a).for_each([&](int b) {
      if (rank[b] < i) plan.placed_nbrs[i].push_back(b);
    });
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, MatchPlan plan)
      : host_(host),
        pattern_(pattern),
        plan_(std::move(plan)),
        map_(static_cast<std::size_t>(pattern.order()), -1) {
    for (int v = 0; v < host.order(); ++v) all_.set(v);
  }

  // Fixes the first `pins.size()` plan positions; returns false if the pins
  // are inconsistent.
  bool pin(const std::vector<int>& images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int a = plan_.order[i];
      const int x = images[i];
      if (used_.test(x) || host_.degree(x) < pattern_.degree(a)) return false;
      for (int b : plan_.placed_nbrs[i]) {
        if (!host_.adjacent(map_[b], x)) return false;
      }
      map_[a] = x;
      used_.set(x);
    }
    start_ = static_cast<int>(images.size());
    return true;
  }

  std::optional<Embedding> first() {
    found_.reset();
    stop_at_first_ = true;
    extend(start_);
    return found_;
  }

  std::uint64_t count() {
    stop_at_first_ = false;
    total_ = 0;
    extend(start_);
    return total_;
  }

 private:
  bool extend(int i) {
    if (i == pattern_.order()) {
      ++total_;
      if (stop_at_first_) {
        found_ = map_;
        return true;
      }
      return false;
    }
    const int a = plan_.order[i];
    VertexSet cand = all_;
    for (int b : plan_.placed_nbrs[i]) cand &= host_.neighbors(map_[b]);
    cand.subtract(used_);
    const int need = pattern_.degree(a);
    for (int x = cand.first(); x >= 0; x = cand.next(x)) {
      if (host_.degree(x) < need) continue;
      map_[a] = x;
      used_.set(x);
      const bool done = extend(i + 1);
      used_.reset(x);
      map_[a] = -1;
      if (done) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  MatchPlan plan_;
  Embedding map_;
  VertexSet used_;
  VertexSet all_;
  int start_ = 0;
  bool stop_at_first_ = true;
  std::uint64_t total_ = 0;
  std::optional<Embedding> found_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& host,
                                        const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) {
    return std::nullopt;
  }
  Matcher m(host, pattern, make_plan(pattern, {}));
  return m.first();
}

std::optional<Embedding> find_embedding_through(const Graph& host,
                                                const Graph& pattern,
                                                Edge through) {
  if (pattern.order() > host.order() || pattern.size() > host.size() ||
      !host.adjacent(through.u, through.v)) {
    return std::nullopt;
  }
  // Pattern edges up to automorphism would suffice; trying all of them in
  // both orientations is exact and cheap at pattern sizes used here.
  for (const Edge& pe : pattern.edges()) {
    MatchPlan plan = make_plan(pattern, {pe.u, pe.v});
    for (int flip = 0; flip < 2; ++flip) {
      Matcher m(host, pattern, plan);
      const std::vector<int> images =
          flip == 0 ? std::vector<int>{through.u, through.v}
                    : std::vector<int>{through.v, through.u};
      if (!m.pin(images)) continue;
      if (auto f = m.first()) return f;
    }
  }
  return std::nullopt;
}

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return 0;
  Matcher m(host, pattern, make_plan(pattern, {}));
  return m.count();
}

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& f) {
  if (static_cast<int>(f.size()) != pattern.order()) return false;
  VertexSet seen;
  for (int x : f) {
    if (x < 0 || x >= host.order() || seen.test(x)) return false;
    seen.set(x);
  }
  for (const Edge& e : pattern.edges()) {
    if (!host.adjacent(f[e.u], f[e.v])) return false;
  }
  return true;
}

}  // namespace gensat
