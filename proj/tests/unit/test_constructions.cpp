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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gensat/canonical.hpp"
#include "gensat/constructions.hpp"
#include "gensat/count.hpp"
#include "gensat/errors.hpp"
#include "gensat/saturation.hpp"
#include "gensat/star_optimizer.hpp"
#include "oracle.hpp"

using namespace gensat;

namespace {

std::string error_code(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  return "";
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

// S_t-saturation from degrees alone: maximum degree below t, and every
// non-adjacent pair has an endpoint of degree t-1.
bool star_saturated_by_degrees(const Graph& g, int t) {
  const auto m = oracle::matrix(g);
  for (int v = 0; v < g.order(); ++v) {
    if (oracle::degree(m, v) > t - 1) return false;
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!m[u][v] && oracle::degree(m, u) != t - 1 && oracle::degree(m, v) != t - 1) {
        return false;
      }
    }
  }
  return true;
}

bool clique_saturated_brute(const Graph& g, int t) {
  return oracle::saturated(oracle::matrix(g), oracle::clique(t));
}

}  // namespace

TEST_CASE("split_graph") {
  CHECK(split_graph(7, 4).size() == 11);
  for (int n = 2; n <= 8; ++n) CHECK(split_graph(n, 2) == empty_graph(n));
  CHECK(saturated(split_graph(9, 4), Pattern::clique(4)));
  CHECK(clique_saturated_brute(split_graph(9, 4), 4));
  CHECK(error_code([] { split_graph(3, 4); }) != "");
}

TEST_CASE("split graphs are clique-saturated") {
  for (int t = 2; t <= 6; ++t) {
    for (int n = t; n <= 14; ++n) {
      const Graph g = split_graph(n, t);
      REQUIRE(saturated(g, Pattern::clique(t)));
      if (n <= 10) REQUIRE(clique_saturated_brute(g, t));
      CHECK(g.size() == static_cast<std::size_t>((n - t + 2) * (t - 2) + oracle::binom(t - 2, 2)));
    }
  }
}

TEST_CASE("near_regular") {
  const Graph r35 = near_regular(3, 5);
  CHECK(r35.degrees() == std::vector<int>{2, 3, 3, 3, 3});
  const std::vector<Edge> expected = {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(r35.edges() == expected);
  CHECK(near_regular(4, 5) == complete_graph(5));
  CHECK(near_regular(3, 4) == complete_graph(4));
  CHECK(error_code([] { near_regular(4, 4); }) != "");
  CHECK(error_code([] { near_regular(5, 3); }) != "");
}

TEST_CASE("near_regular degree sequences") {
  for (int b = 2; b <= 16; ++b) {
    for (int a = 1; a < b; ++a) {
      const Graph g = near_regular(a, b);
      REQUIRE(g.order() == b);
      for (int v = 0; v < b; ++v) {
        const int want = (a * b % 2 == 1 && v == 0) ? a - 1 : a;
        REQUIRE(g.degree(v) == want);
      }
    }
  }
}

TEST_CASE("kr_graph") {
  const Graph g = kr_graph(5, 9, 3);
  CHECK(g.induced(std::vector<int>{0, 1, 2}) == complete_graph(3));
  CHECK(count_stars(g, 2) == 39);
  for (int v = 3; v < 9; ++v) CHECK(g.degree(v) == 4);

  const Graph odd = kr_graph(4, 9, 2);
  for (int v = 2; v < 9; ++v) CHECK(odd.degree(v) == 3);
  CHECK(sorted_desc({odd.degree(0), odd.degree(1)}) == std::vector<int>{2, 1});
  CHECK(odd.degree(0) == 2);
  CHECK(odd.size() == 1 + (7 * 3 - 1) / 2 + 1);

  for (int m = 0; m <= 4; ++m) CHECK(saturated(kr_graph(5, 9, m), Pattern::star(5)));
  CHECK(error_code([] { kr_graph(4, 9, 0); }) == "kr_parity");
  CHECK(error_code([] { kr_graph(5, 9, 5); }) != "");
  CHECK(error_code([] { kr_graph(5, 7, 3); }) != "");
}

TEST_CASE("kr_graph saturation and star counts on the full grid") {
  int built = 0;
  for (int t = 2; t <= 7; ++t) {
    for (int n = t; n <= 2 * t + 4; ++n) {
      for (int m = 0; m <= t - 1 && n - m >= t; ++m) {
        if (m == 0 && (t - 1) * n % 2 == 1) continue;
        const Graph g = kr_graph(t, n, m);
        REQUIRE(g.order() == n);
        REQUIRE(saturated(g, Pattern::star(t)));
        REQUIRE(star_saturated_by_degrees(g, t));
        for (int r = 2; r < t; ++r) {
          REQUIRE(static_cast<Wide>(count_stars(g, r)) == sr_kr_formula(t, n, m, r));
        }
        ++built;
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("regular_multipartite") {
  const auto a = regular_multipartite(2, 3, 3);
  CHECK(a.graph.order() == 6);
  CHECK(a.graph.degrees() == std::vector<int>(6, 3));
  CHECK(is_proper_partition(a.graph, a.part, 3));
  const std::vector<int> parts = {2, 2, 2};
  // Octahedron minus a perfect matching.
  const Graph oct = complete_multipartite(parts);
  const Graph rest = complement(a.graph);
  CHECK(rest.size() == oct.size() - a.graph.size() + 3);
  for (int k = 0; k <= 3; ++k) {
    const auto b = regular_multipartite(1, 4, k);
    CHECK(b.graph.degrees() == std::vector<int>(4, k));
  }
  const auto c = regular_multipartite(3, 3, 4);
  CHECK(c.graph.order() == 9);
  CHECK(c.graph.degrees() == std::vector<int>(9, 4));
  CHECK(is_proper_partition(c.graph, c.part, 3));
  CHECK(error_code([] { regular_multipartite(3, 3, 3); }) == "overfull");
  CHECK(error_code([] { regular_multipartite(2, 3, 5); }) != "");
}

TEST_CASE("regular_multipartite grid") {
  for (int a = 1; a <= 4; ++a) {
    for (int r = 2; r <= 4; ++r) {
      for (int k = 0; k <= a * (r - 1); ++k) {
        if (a * r % 2 == 1 && k % 2 == 1) continue;
        const auto g = regular_multipartite(a, r, k);
        REQUIRE(g.graph.order() == a * r);
        REQUIRE(g.graph.degrees() == std::vector<int>(a * r, k));
        REQUIRE(g.parts == r);
        REQUIRE(is_proper_partition(g.graph, g.part, r));
        for (int v = 0; v < a * r; ++v) REQUIRE(g.part[v] == v / a);
      }
    }
  }
}

TEST_CASE("partite_saturated") {
  const auto a = partite_saturated(16, 3, 4, 0);
  CHECK(a.graph.order() == 16);
  CHECK(saturated(a.graph, Pattern::star(4)));
  CHECK(star_saturated_by_degrees(a.graph, 4));
  CHECK(is_proper_partition(a.graph, a.part, 3));
  const auto b = partite_saturated(9, 4, 5, 1);
  CHECK(b.graph.order() == 9);
  CHECK(star_saturated_by_degrees(b.graph, 5));
  CHECK(is_proper_partition(b.graph, b.part, 4));
  for (int t = 3; t <= 6; ++t) {
    CHECK(error_code([t] { partite_saturated(t, 3, t, 0); }) == "partite_bound");
  }
  CHECK(error_code([] { partite_saturated(20, 3, 4, 2); }) != "");
}

TEST_CASE("partite_saturated grid") {
  int built = 0;
  for (int r = 3; r <= 4; ++r) {
    for (int t = 3; t <= 6; ++t) {
      for (int c = 0; c <= r - 2; ++c) {
        const int s = r - c;
        const int n1 = s * ((t - 1 + s - 2) / (s - 1)) + s;
        for (int n = std::max(t + 1, n1); n <= std::max(t + 1, n1) + 12; ++n) {
          const auto g = partite_saturated(n, r, t, c);
          REQUIRE(g.graph.order() == n);
          REQUIRE(star_saturated_by_degrees(g.graph, t));
          REQUIRE(saturated(g.graph, Pattern::star(t)));
          REQUIRE(g.parts <= r);
          REQUIRE(is_proper_partition(g.graph, g.part, r));
          ++built;
        }
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("nine-vertex family") {
  const Graph g = g49();
  CHECK(g.order() == 9);
  CHECK(g.size() == 21);
  CHECK(saturated(g, Pattern::clique(4)));
  CHECK(clique_saturated_brute(g, 4));
  CHECK(g4n(9) == g);

  const Graph big = g4n(30);
  CHECK(big.max_degree() == 19);
  const long long expected = 6 * oracle::binom(19, 3) + 24 * oracle::binom(4, 3);
  CHECK(static_cast<long long>(count_stars(big, 3)) == expected);
  CHECK(expected == 5910);

  CHECK(isomorphic(gtn(5, 14), combine(CombineKind::kJoin, g4n(13), complete_graph(1))));
  CHECK(saturated(gtn(5, 14), Pattern::clique(5)));
  CHECK(error_code([] { g4n(8); }) != "");
  CHECK(error_code([] { gtn(3, 12); }) != "");
  CHECK(error_code([] { gtn(5, 9); }) != "");
}

TEST_CASE("g4n and gtn are clique-saturated") {
  for (int n = 9; n <= 15; ++n) {
    const Graph g = g4n(n);
    REQUIRE(g.order() == n);
    REQUIRE(saturated(g, Pattern::clique(4)));
    REQUIRE(clique_saturated_brute(g, 4));
  }
  for (int t = 4; t <= 6; ++t) {
    for (int n = t + 5; n <= 15; ++n) {
      const Graph g = gtn(t, n);
      REQUIRE(g.order() == n);
      REQUIRE(saturated(g, Pattern::clique(t)));
    }
  }
}

TEST_CASE("w_t") {
  const Graph wheel = combine(CombineKind::kJoin, cycle_graph(5), complete_graph(1));
  CHECK(isomorphic(w_t(4, {1, 1, 1, 1, 1}), wheel));
  const Graph w = w_t(5, {2, 1, 1, 1, 1});
  CHECK(w.order() == 8);
  const std::vector<int> sizes = {2, 1, 1, 1, 1};
  CHECK(isomorphic(w, combine(CombineKind::kJoin, blow_up(cycle_graph(5), sizes), complete_graph(2))));
  const Graph x = w_t(4, {3, 1, 2, 2, 1});
  CHECK_FALSE(oracle::contains(oracle::matrix(x), oracle::clique(4)));
  CHECK(clique_saturated_brute(x, 4));
  CHECK(saturated(x, Pattern::clique(4)));
  CHECK(error_code([] { w_t(3, {1, 1, 1, 1, 1}); }) != "");
  CHECK(error_code([] { w_t(4, {1, 0, 1, 1, 1}); }) != "");
  CHECK(error_code([] { w_t(4, {1, 1, 1, 1}); }) != "");
}

TEST_CASE("fixed small graphs") {
  const Graph f2 = fig2();
  CHECK(f2.order() == 6);
  CHECK(f2.size() == 11);
  CHECK(sorted_desc(f2.degrees()) == std::vector<int>{4, 4, 4, 4, 3, 3});
  CHECK(star_saturated_by_degrees(f2, 5));
  CHECK(count_stars(f2, 3) == 18);

  const Graph ts = t_star();
  CHECK(is_tree(ts));
  CHECK(ts.order() == 7);
  CHECK(sorted_desc(ts.degrees()) == std::vector<int>{3, 2, 2, 2, 1, 1, 1});

  const Graph cp = cycle_pendants(8);
  CHECK(cp.order() == 16);
  CHECK(cp.size() == 16);
  CHECK(error_code([] { cycle_pendants(2); }) != "");

  const Graph f1 = fig1();
  CHECK(f1.order() == 6);
  CHECK(f1.degrees() == std::vector<int>(6, 4));
  CHECK(star_saturated_by_degrees(f1, 5));
}

TEST_CASE("construct dispatcher") {
  const auto r = construct("split", {{"n", 8}, {"t", 4}});
  CHECK(r.graph == split_graph(8, 4));
  CHECK(r.family == "split");
  const auto p = construct("partite_saturated", {{"n", 16}, {"r", 3}, {"t", 4}, {"c", 0}});
  CHECK(p.parts == 3);
  CHECK_FALSE(p.recipe.empty());
  CHECK(construct("w_t", {{"t", 5}, {"m1", 2}, {"m2", 1}, {"m3", 1}, {"m4", 1}, {"m5", 1}}).graph ==
        w_t(5, {2, 1, 1, 1, 1}));
  CHECK(error_code([] { construct("split", {{"n", 8}}); }) == "missing_parameter");
  CHECK(error_code([] { construct("fig1", {{"n", 8}}); }) == "unknown_parameter");
  CHECK(error_code([] { construct("petersen", {}); }) == "unknown_family");
  const auto families = construction_families();
  CHECK(families.size() == 13);
  for (const auto& f : {"g49", "fig1", "fig2", "t_star"}) CHECK(construct(f, {}).graph.order() > 0);
}
