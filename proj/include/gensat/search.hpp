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

// Isomorph-free generation of small graphs by canonical vertex augmentation
// and the exhaustive saturation oracle built on it.
//
// A graph on k+1 vertices is generated from its parent on k vertices by
// appending a vertex with a chosen neighbourhood. The child is kept only if
// the new vertex lies in the orbit of the canonically chosen vertex (least
// rooted canonical code among the vertices of the last refined colour
// class), so each isomorphism class is produced exactly once. Properties
// closed under induced subgraphs prune at every order.

#ifndef GENSAT_SEARCH_HPP_
#define GENSAT_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gensat/combinatorics.hpp"
#include "gensat/graph.hpp"
#include "gensat/pattern.hpp"

namespace gensat {

struct SearchConstraints {
  std::optional<int> max_degree;
  // The graph must not contain any of these (checked at every order).
  std::vector<Pattern> forbidden;
  // Colourable with this many colours (2 = bipartite).
  std::optional<int> max_parts;
  // Checked at the final order only.
  bool connected_only = false;
};

struct SearchOptions {
  // 0 = hardware concurrency.
  int workers = 0;
  // Order at which the generation tree is cut into work units; -1 = auto.
  int split_order = -1;
  int max_order = 10;
  std::size_t witness_cap = 64;
};

// One representative per isomorphism class on n vertices satisfying the
// constraints, in a deterministic order.
std::vector<Graph> enumerate_graphs(int n, const SearchConstraints& c = {},
                                    const SearchOptions& opts = {});
std::uint64_t count_graphs(int n, const SearchConstraints& c = {},
                           const SearchOptions& opts = {});

struct SearchReport {
  int n = 0;
  std::string target;
  std::string counted;
  Wide minimum = 0;
  // graph6 of every minimiser up to the cap, in generation order.
  std::vector<std::string> witnesses;
  std::uint64_t witness_total = 0;
  std::uint64_t graphs_examined = 0;
  std::uint64_t saturated_found = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

// Exact sat_H(n, F). `prune` adds the sound F-free and (for stars) maximum
// degree t-1 constraints during generation. Throws DomainError("none_exist")
// when no F-saturated graph has n vertices under the constraints.
SearchReport satnum_exact(int n, const Pattern& f, const Pattern& h,
                          const SearchConstraints& c = {},
                          const SearchOptions& opts = {}, bool prune = true);

// "K3-free", "Kq-free", "bipartite", "partite:r", "max-clique:q".
SearchConstraints parse_property(const std::string& property);

struct ExistenceReport {
  int n = 0;
  std::string target;
  std::string property;
  std::optional<Graph> witness;
  std::uint64_t graphs_examined = 0;
};

ExistenceReport exists_saturated_with(int n, const Pattern& f,
                                      const std::string& property,
                                      const SearchOptions& opts = {});

struct TstarScanEntry {
  int n = 0;
  // Triangle-free, T*-free graphs examined.
  std::uint64_t candidates = 0;
  std::optional<Graph> witness;
};

struct TstarScanReport {
  std::vector<TstarScanEntry> entries;
  // Orders 1 and 2 are skipped: K_1 and K_2 are complete, so vacuously
  // saturated for any pattern on more vertices.
  int first_order = 3;
  bool none_found = true;
  // Without the triangle-free restriction at `control_order`.
  int control_order = 7;
  std::optional<Graph> control_witness;
};

TstarScanReport tstar_scan(int n_max, const SearchOptions& opts = {});

}  // namespace gensat

#endif  // GENSAT_SEARCH_HPP_
