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

// Exact subgraph counters. All counts are of unlabelled copies as
// (not necessarily induced) subgraphs.

#ifndef GENSAT_COUNT_HPP_
#define GENSAT_COUNT_HPP_

#include <cstdint>

#include "gensat/graph.hpp"
#include "gensat/pattern.hpp"

namespace gensat {

using Count = std::uint64_t;

// Number of r-vertex cliques; count_cliques(g, 1) = order, (g, 2) = |E|.
Count count_cliques(const Graph& g, int r);

// s_r(G): sum over v of C(deg v, r) for r >= 2; |E| for r = 1.
Count count_stars(const Graph& g, int r);

// Paths on k >= 2 vertices.
Count count_paths(const Graph& g, int k);

// Cycles of length k >= 3.
Count count_cycles(const Graph& g, int k);

// n_T(G): injective embeddings of the tree divided by |Aut(T)|.
Count count_tree(const Graph& g, const Pattern& t);

// Copies of any pattern; dispatches to the specialised counters.
Count count_pattern(const Graph& g, const Pattern& p);

int independence_number(const Graph& g);
Count count_independent_sets(const Graph& g, int k);
int clique_number(const Graph& g);

// |Aut(t)| for a tree t (rejects non-trees).
Count tree_automorphisms(const Graph& t);
// |Aut(g)| for any graph, as self-embeddings.
Count automorphism_count(const Graph& g);

}  // namespace gensat

#endif  // GENSAT_COUNT_HPP_
