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

// Vertex-deletion sets: bounded search tree for forbidden-subgraph classes,
// the high-degree kernel for vertex cover, and twin-cover enumeration.
//
// Every enumeration returns inclusion-minimal sets only, each once, ordered by
// size and then lexicographically.

#ifndef DISTGI_DELETION_H_
#define DISTGI_DELETION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distgi/graph.h"
#include "distgi/recognition.h"

namespace distgi {

struct DeletionSet {
  std::vector<Vertex> vertices;  // sorted
  std::string family;            // family name, "vertex-cover" or "twin-cover"

  int size() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;
};

// Occurrences A_1..A_m in occurrence order.
using OccurrenceList = std::vector<std::vector<Vertex>>;

// gamma_1..gamma_k, each in 1..d.
using BranchString = std::vector<int>;

struct KernelDecomposition {
  std::vector<Vertex> high;  // degree > k, forced into every small cover
  std::vector<Vertex> low;   // degree <= k with a neighbor outside `high`
  int b = 0;                 // |high|
};

struct SearchStats {
  std::int64_t nodes = 0;  // explored search-tree nodes, root included
};

// (size, lexicographic) order on sorted vertex lists.
bool set_order_less(std::span<const Vertex> a, std::span<const Vertex> b);

OccurrenceList enumerate_occurrences(const Graph& g,
                                     const ForbiddenFamily& family);

// Follows one branch string over a precomputed occurrence list: each phase
// adds the gamma_i-th vertex of the first occurrence not yet hit. Returns the
// set once every occurrence is hit (possibly before the string is used up),
// nullopt if the string runs out or points past the end of an occurrence.
std::optional<std::vector<Vertex>> follow_branch_string(
    const OccurrenceList& occurrences, const BranchString& gammas);

// All minimal deletion sets of size <= k. The search tree branches on the
// vertices of the first occurrence left in G \ P; occurrences are found
// lazily, so the full list is never materialized.
std::vector<DeletionSet> enumerate_deletion_sets(const Graph& g,
                                                 const ForbiddenFamily& family,
                                                 int k,
                                                 SearchStats* stats = nullptr);

std::optional<DeletionSet> minimum_deletion_set(const Graph& g,
                                                const ForbiddenFamily& family,
                                                int k);

// nullopt means reject: more than k high-degree vertices, or more than
// (k - b)(k + 1) low vertices, so the vertex cover number exceeds k.
std::optional<KernelDecomposition> buss_kernel(const Graph& g, int k);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

// Kernel, then a scan over subsets of the low part of size <= k - b.
std::vector<DeletionSet> enumerate_minimal_vertex_covers(const Graph& g,
                                                         int k);

// Drops every edge whose endpoints are twins.
Graph remove_twin_edges(const Graph& g);

// Minimal vertex covers of remove_twin_edges(g); removing any of them leaves
// a disjoint union of cliques.
std::vector<DeletionSet> enumerate_twin_covers(const Graph& g, int k);

}  // namespace distgi

#endif  // DISTGI_DELETION_H_
