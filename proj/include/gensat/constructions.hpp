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

// Named graph families. Every generator validates its parameters and throws
// DomainError naming the violated condition.

#ifndef GENSAT_CONSTRUCTIONS_HPP_
#define GENSAT_CONSTRUCTIONS_HPP_

#include <map>
#include <string>
#include <vector>

#include "gensat/graph.hpp"

namespace gensat {

// Graph with a proper colouring into parts 0..parts-1.
struct PartitionedGraph {
  Graph graph;
  std::vector<int> part;
  int parts = 0;
  // Human-readable description of how the graph was assembled.
  std::string recipe;
};

// K_{t-2} + complement(K_{n-t+2}); clique vertices are 0..t-3.
Graph split_graph(int n, int t);

// R_{a,b}: a-regular on b vertices when ab is even; otherwise vertex 0 has
// degree a-1 and the rest degree a.
Graph near_regular(int a, int b);

// KR_{t,n}(m) = K_m (vertices 0..m-1) disjoint union R_{t-1,n-m}, plus an
// edge from the low vertex of R to clique vertex 0 when (t-1)(n-m) is odd.
Graph kr_graph(int t, int n, int m);

// k-regular spanning subgraph of K_{a,...,a} with r parts; part p holds
// vertices p*a .. p*a+a-1.
PartitionedGraph regular_multipartite(int a, int r, int k);

// n-vertex, r-partite, S_t-saturated graph built on r-c parts.
PartitionedGraph partite_saturated(int n, int r, int t, int c);

// True when `part` is a proper colouring of g with values in [0, parts).
bool is_proper_partition(const Graph& g, const std::vector<int>& part,
                         int parts);

Graph g49();
Graph g4n(int n);
Graph gtn(int t, int n);

// Blow-up of C_5 with class sizes m[0..4], joined to K_{t-3}.
Graph w_t(int t, const std::vector<int>& m);

Graph fig1();
Graph fig2();
// Spider with three legs of length two; centre 0, legs 0-1-2, 0-3-4, 0-5-6.
Graph t_star();
// C_k on 0..k-1 with pendant k+i attached to cycle vertex i.
Graph cycle_pendants(int k);

struct ConstructionResult {
  std::string family;
  Graph graph;
  // Empty unless the family records a partition.
  std::vector<int> part;
  int parts = 0;
  std::string recipe;
};

// Dispatcher for the command line and bindings. Families: split(n,t),
// near_regular(a,b), kr(t,n,m), regular_multipartite(a,r,k),
// partite_saturated(n,r,t,c), g49, g4n(n), gtn(t,n), w_t(t,m1..m5), fig1,
// fig2, t_star, cycle_pendants(k).
ConstructionResult construct(const std::string& family,
                             const std::map<std::string, int>& params);

std::vector<std::string> construction_families();

}  // namespace gensat

#endif  // GENSAT_CONSTRUCTIONS_HPP_
