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

#ifndef DISTGI_GRAPH_H_
#define DISTGI_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace distgi {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Maps vertex i of a source graph to witness[i] of a target graph.
using VertexBijection = std::vector<Vertex>;

// Thrown when an operation is called outside of its documented domain
// (wrong graph class, out-of-range vertex, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected simple graph on vertices 0..n-1. Neighbor lists are sorted and
// duplicate-free; the graph never changes after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  // Duplicate and reversed edges collapse. Self-loops and out-of-range
  // endpoints throw PreconditionError.
  Graph(int num_vertices, std::span<const Edge> edges);
  Graph(int num_vertices, std::initializer_list<Edge> edges)
      : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t num_edges_ = 0;
};

// Graph plus a (not necessarily proper) vertex coloring. Color identifiers are
// non-negative integers; they are compared across graphs by value, so two
// colored graphs that should share a palette must be built against the same
// Palette (or with the same integer convention).
class ColoredGraph {
 public:
  ColoredGraph() = default;
  // All vertices get color 0.
  explicit ColoredGraph(Graph graph);
  ColoredGraph(Graph graph, std::vector<int> colors);

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int color(Vertex v) const { return colors_[v]; }
  std::span<const int> colors() const { return colors_; }

 private:
  Graph graph_;
  std::vector<int> colors_;
};

// Assigns dense color identifiers 0..c-1 to arbitrary labels in order of first
// occurrence. Share one Palette between graphs that are compared.
class Palette {
 public:
  int id(std::string_view label);
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const { return labels_[id]; }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> labels_;
};

ColoredGraph make_colored(Graph graph, std::span<const std::string> labels,
                          Palette& palette);

// Result of a (colored) isomorphism test. `witness` is only meaningful when
// `isomorphic` is true.
struct IsoResult {
  bool isomorphic = false;
  VertexBijection witness;

  static IsoResult no() { return {}; }
  static IsoResult yes(VertexBijection w) { return {true, std::move(w)}; }
};

// G[S] with the map from new indices back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

// Vertices of `subset` keep their relative order. Throws PreconditionError on
// out-of-range or repeated vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// G \ S.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

Graph complement(const Graph& g);

// Twins: N(u) \ {v} == N(v) \ {u}. Covers adjacent and non-adjacent twins.
bool are_twins(const Graph& g, Vertex u, Vertex v);

// Relabels g so that vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

bool is_bijection(std::span<const Vertex> f, int n);

bool verify_isomorphism(const Graph& g, const Graph& h,
                        std::span<const Vertex> f);
bool verify_colored_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                                std::span<const Vertex> f);

// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Named small graphs used by tests, families and docs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph disjoint_union(const Graph& a, const Graph& b);

std::string to_string(const Graph& g);

}  // namespace distgi

#endif  // DISTGI_GRAPH_H_
