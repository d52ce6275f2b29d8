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

// Backtracking search for (not necessarily induced) subgraph embeddings:
// injective maps f from pattern vertices to host vertices with
// host.adjacent(f(a), f(b)) for every pattern edge ab.

#ifndef GENSAT_EMBED_HPP_
#define GENSAT_EMBED_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gensat/graph.hpp"

namespace gensat {

using Embedding = std::vector<int>;

std::optional<Embedding> find_embedding(const Graph& host,
                                        const Graph& pattern);

// An embedding whose image uses host edge `through` as the image of some
// pattern edge.
std::optional<Embedding> find_embedding_through(const Graph& host,
                                                const Graph& pattern,
                                                Edge through);

std::uint64_t count_embeddings(const Graph& host, const Graph& pattern);

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& f);

}  // namespace gensat

#endif  // GENSAT_EMBED_HPP_
