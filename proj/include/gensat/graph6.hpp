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

// graph6 interchange format: order header, then the upper adjacency triangle
// in column-major order packed into 6-bit groups offset by 63.

#ifndef GENSAT_GRAPH6_HPP_
#define GENSAT_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "gensat/graph.hpp"

namespace gensat {

std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and trailing whitespace. Throws
// ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);

}  // namespace gensat

#endif  // GENSAT_GRAPH6_HPP_
