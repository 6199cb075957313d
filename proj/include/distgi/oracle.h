// Copyright 2026 The distgi Authors.
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

// Slow, obviously-correct reference answers for small graphs. Nothing here
// calls into the recognition, deletion, backend or engine code; it only uses
// the Graph type and pattern data.

#ifndef DISTGI_ORACLE_H_
#define DISTGI_ORACLE_H_

#include <optional>
#include <vector>

#include "distgi/graph.h"
#include "distgi/recognition.h"

namespace distgi::oracle {

// Backtracking over maps that respect degree (and color); complete.
IsoResult brute_force_gi(const Graph& g1, const Graph& g2);
IsoResult brute_force_colored_gi(const ColoredGraph& g1,
                                 const ColoredGraph& g2);

// Tries every vertex subset of each pattern's size and every bijection.
bool contains_pattern(const Graph& g, const Graph& pattern);
bool brute_force_member(const Graph& g, const ForbiddenFamily& family);

// Every subset of size <= k whose removal lands in the class, filtered to
// inclusion-minimal ones, in (size, lexicographic) order.
std::vector<std::vector<Vertex>> brute_force_deletion_sets(
    const Graph& g, const ForbiddenFamily& family, int k);

// Smallest deletion set size, or nullopt if it exceeds `limit`.
std::optional<int> brute_force_distance(const Graph& g,
                                        const ForbiddenFamily& family,
                                        int limit);
std::optional<int> brute_force_vertex_cover_number(const Graph& g, int limit);
std::optional<int> brute_force_twin_cover_number(const Graph& g, int limit);

}  // namespace distgi::oracle

#endif  // DISTGI_ORACLE_H_
