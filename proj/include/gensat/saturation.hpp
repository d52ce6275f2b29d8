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

// F-freeness and F-saturation with witnesses.

#ifndef GENSAT_SATURATION_HPP_
#define GENSAT_SATURATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gensat/embed.hpp"
#include "gensat/graph.hpp"
#include "gensat/pattern.hpp"

namespace gensat {

using Family = std::vector<Pattern>;

// A copy of family member `member` located by `embedding`.
struct PatternCopy {
  std::size_t member = 0;
  Embedding embedding;
};

// Copy created by adding a non-edge.
struct Creation {
  Edge edge;
  PatternCopy copy;
};

struct SaturationCertificate {
  bool is_free = true;
  bool is_saturated = false;
  std::optional<PatternCopy> free_violation;
  std::optional<Edge> unsaturated_witness;
  std::size_t checked_nonedges = 0;
  // One entry per non-edge when saturated.
  std::vector<Creation> creations;
};

struct SaturationOptions {
  // Search only copies through the added edge. A full search of g + e gives
  // the same verdicts and is kept for cross-checking.
  bool anchored = true;
  // Record a creating copy for every non-edge.
  bool record_creations = true;
};

std::optional<Embedding> contains_copy(const Graph& g, const Pattern& f);

// A copy of f in g + e that uses e; g must not contain e.
std::optional<Embedding> copy_through_new_edge(const Graph& g, const Pattern& f,
                                               Edge e);

SaturationCertificate is_saturated(const Graph& g, const Pattern& f,
                                   const SaturationOptions& opts = {});

SaturationCertificate is_family_saturated(const Graph& g, const Family& fs,
                                          const SaturationOptions& opts = {});

// Verdict only; no witnesses. Used in the search inner loop.
bool saturated(const Graph& g, const Pattern& f);
bool family_saturated(const Graph& g, const Family& fs);

// Re-checks a certificate from scratch with unanchored searches. Returns an
// empty string when it holds, otherwise a description of the first problem.
std::string validate_certificate(const Graph& g, const Family& fs,
                                 const SaturationCertificate& cert);

struct PeelResult {
  Graph graph;
  int removed_vertex = -1;
  Family family;
};

// Removes the lowest-index universal vertex x and replaces the family by
// {F - v : v in V(F), F in fs} with isomorphic duplicates dropped. g is
// fs-saturated iff the result is family-saturated.
PeelResult peel_universal(const Graph& g, const Family& fs);

// Members that contain no other member as a subgraph. Saturation with
// respect to a family depends only on these.
Family minimal_members(const Family& fs);

// Symbolic pattern (K, S, P, C) for g when it is one, else an explicit graph.
Pattern pattern_for(const Graph& g);

struct StarSatStructure {
  int max_degree = 0;
  std::vector<int> low_degree_vertices;
  bool clique_ok = true;
};

// Degree report for S_t-saturation: vertices of degree < t-1 and whether
// they form a clique.
StarSatStructure star_sat_structure(const Graph& g, int t);

// {"graph", "pattern", "saturated", "free", "witness"} as JSON text.
std::string certificate_json(const Graph& g, const Family& fs,
                             const SaturationCertificate& cert);

}  // namespace gensat

#endif  // GENSAT_SATURATION_HPP_
