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

// Canonical forms by colour refinement plus individualisation backtracking.
//
// The code of a labelling is the order, the initial colours in label order
// and the upper adjacency triangle (row-major, most significant bit first).
// The canonical code is the lexicographically smallest code over all leaves
// of the search tree; automorphisms found at equal leaves prune sibling
// branches in the same orbit. Intended for the n <= 16 search scale.

#ifndef GENSAT_CANONICAL_HPP_
#define GENSAT_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gensat/graph.hpp"

namespace gensat {

struct CanonicalCode {
  std::vector<std::uint64_t> words;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  CanonicalCode code;
  // position[v] is the canonical label of vertex v.
  std::vector<int> position;
};

// `colors` (optional, one entry per vertex) is an initial vertex colouring
// that isomorphisms must preserve.
CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> colors = {});

CanonicalCode canonical_form(const Graph& g);

// Canonical form of g with vertex v distinguished. Two vertices share an
// automorphism orbit iff their rooted forms are equal.
CanonicalCode rooted_canonical_form(const Graph& g, int v);

// g relabelled into canonical order.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Stable colour refinement from the uniform colouring; colours are ranks
// 0..k-1 and depend only on the isomorphism type of (g, v).
std::vector<int> refined_colors(const Graph& g);

}  // namespace gensat

#endif  // GENSAT_CANONICAL_HPP_
