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

#include "gensat/pattern.hpp"

#include <charconv>

#include "gensat/errors.hpp"
#include "gensat/graph6.hpp"

namespace gensat {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("pattern_parameter", what);
}

}  // namespace

bool is_tree(const Graph& g) {
  return g.order() >= 1 &&
         g.size() == static_cast<std::size_t>(g.order() - 1) &&
         g.is_connected();
}

Pattern Pattern::clique(int r) {
  require(r >= 1, "clique size must be at least 1");
  require(r <= kMaxOrder, "clique size exceeds capacity");
  return Pattern(PatternKind::kClique, r, complete_graph(r));
}

Pattern Pattern::star(int r) {
  require(r >= 1, "star size must be at least 1");
  require(r < kMaxOrder, "star size exceeds capacity");
  return Pattern(PatternKind::kStar, r, star_graph(r));
}

Pattern Pattern::path(int k) {
  require(k >= 2, "path needs at least 2 vertices");
  require(k <= kMaxOrder, "path length exceeds capacity");
  return Pattern(PatternKind::kPath, k, path_graph(k));
}

Pattern Pattern::cycle(int k) {
  require(k >= 3, "cycle needs at least 3 vertices");
  require(k <= kMaxOrder, "cycle length exceeds capacity");
  return Pattern(PatternKind::kCycle, k, cycle_graph(k));
}

Pattern Pattern::tree(Graph t) {
  if (!is_tree(t)) {
    throw DomainError("not_a_tree",
                      "tree pattern must be connected and acyclic");
  }
  const int n = t.order();
  return Pattern(PatternKind::kTree, n, std::move(t));
}

Pattern Pattern::graph(Graph g) {
  const int n = g.order();
  return Pattern(PatternKind::kGraph, n, std::move(g));
}

Pattern Pattern::parse(std::string_view text) {
  if (text.size() >= 2 && text[1] == ':' && (text[0] == 'T' || text[0] == 'G')) {
    Graph g;
    try {
      g = decode_graph6(text.substr(2));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad graph6 payload in pattern: ") + e.what(),
                       2 + e.offset());
    }
    return text[0] == 'T' ? tree(std::move(g)) : graph(std::move(g));
  }
  if (text.size() < 2) throw ParseError("pattern too short", 0);
  int value = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("pattern size must be a decimal integer",
                     static_cast<std::size_t>(ptr - text.data()));
  }
  switch (text[0]) {
    case 'K':
      return clique(value);
    case 'S':
      return star(value);
    case 'P':
      return path(value);
    case 'C':
      return cycle(value);
    default:
      throw ParseError("unknown pattern kind '" + std::string(1, text[0]) +
                           "' (expected K, S, P, C, T: or G:)",
                       0);
  }
}

std::string Pattern::spec() const {
  switch (kind_) {
    case PatternKind::kClique:
      return "K" + std::to_string(parameter_);
    case PatternKind::kStar:
      return "S" + std::to_string(parameter_);
    case PatternKind::kPath:
      return "P" + std::to_string(parameter_);
    case PatternKind::kCycle:
      return "C" + std::to_string(parameter_);
    case PatternKind::kTree:
      return "T:" + encode_graph6(graph_);
    case PatternKind::kGraph:
      return "G:" + encode_graph6(graph_);
  }
  return {};
}

bool Pattern::is_tree_shaped() const {
  switch (kind_) {
    case PatternKind::kStar:
    case PatternKind::kPath:
    case PatternKind::kTree:
      return true;
    case PatternKind::kClique:
      return parameter_ <= 2;
    case PatternKind::kCycle:
      return false;
    case PatternKind::kGraph:
      return is_tree(graph_);
  }
  return false;
}

}  // namespace gensat
