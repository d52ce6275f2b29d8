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

#ifndef GENSAT_PATTERN_HPP_
#define GENSAT_PATTERN_HPP_

#include <string>
#include <string_view>

#include "gensat/graph.hpp"

namespace gensat {

enum class PatternKind { kClique, kStar, kPath, kCycle, kTree, kGraph };

// Target subgraph description. Text form: "K5" (clique on 5 vertices), "S4"
// (star with 4 leaves), "P6" (path on 6 vertices), "C7" (7-cycle),
// "T:<graph6>" (explicit tree), "G:<graph6>" (explicit graph).
class Pattern {
 public:
  static Pattern clique(int r);
  static Pattern star(int r);
  static Pattern path(int k);
  static Pattern cycle(int k);
  // Rejects graphs that are not trees.
  static Pattern tree(Graph t);
  static Pattern graph(Graph g);
  static Pattern parse(std::string_view text);

  PatternKind kind() const { return kind_; }
  // Size parameter for the symbolic kinds; order of the graph otherwise.
  int parameter() const { return parameter_; }
  const Graph& graph() const { return graph_; }
  std::string spec() const;

  bool is_tree_shaped() const;

 private:
  Pattern(PatternKind kind, int parameter, Graph g)
      : kind_(kind), parameter_(parameter), graph_(std::move(g)) {}

  PatternKind kind_;
  int parameter_;
  Graph graph_;
};

bool is_tree(const Graph& g);

}  // namespace gensat

#endif  // GENSAT_PATTERN_HPP_
