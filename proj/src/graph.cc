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

#include "distgi/graph.h"

#include <algorithm>
#include <sstream>

namespace distgi {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  adj_.resize(num_vertices);
}

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : Graph(num_vertices) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw PreconditionError("edge endpoint out of range: " +
                              std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) {
      throw PreconditionError("self-loop on vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  num_edges_ = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    num_edges_ += static_cast<std::int64_t>(list.size());
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  // Search the shorter list.
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ColoredGraph::ColoredGraph(Graph graph)
    : graph_(std::move(graph)), colors_(graph_.num_vertices(), 0) {}

ColoredGraph::ColoredGraph(Graph graph, std::vector<int> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != graph_.num_vertices()) {
    throw PreconditionError("color vector size does not match vertex count");
  }
  for (int c : colors_) {
    if (c < 0) throw PreconditionError("negative color identifier");
  }
}

int Palette::id(std::string_view label) {
  std::string key(label);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const int fresh = static_cast<int>(labels_.size());
  ids_.emplace(key, fresh);
  labels_.push_back(std::move(key));
  return fresh;
}

ColoredGraph make_colored(Graph graph, std::span<const std::string> labels,
                          Palette& palette) {
  std::vector<int> colors;
  colors.reserve(labels.size());
  for (const auto& l : labels) colors.push_back(palette.id(l));
  return ColoredGraph(std::move(graph), std::move(colors));
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> subset) {
  const int n = g.num_vertices();
  std::vector<int> index(n, -1);
  for (size_t i = 0; i < subset.size(); ++i) {
    const Vertex v = subset[i];
    if (v < 0 || v >= n) {
      throw PreconditionError("induced_subgraph: vertex out of range");
    }
    if (index[v] != -1) {
      throw PreconditionError("induced_subgraph: repeated vertex");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < subset.size(); ++i) {
    for (Vertex w : g.neighbors(subset[i])) {
      const int j = index[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph(static_cast<int>(subset.size()), edges),
          std::vector<Vertex>(subset.begin(), subset.end())};
}

InducedSubgraph remove_vertices(const Graph& g,
                                std::span<const Vertex> removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.num_vertices()) {
      throw PreconditionError("remove_vertices: vertex out of range");
    }
    gone[v] = 1;
  }
  std::vector<Vertex> kept;
  kept.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  return induced_subgraph(g, kept);
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<char> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!mark[v]) edges.emplace_back(u, v);
    }
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  return Graph(n, edges);
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("are_twins: u == v");
  if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices()) {
    throw PreconditionError("are_twins: vertex out of range");
  }
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  auto i = nu.begin();
  auto j = nv.begin();
  while (true) {
    while (i != nu.end() && *i == v) ++i;
    while (j != nv.end() && *j == u) ++j;
    if (i == nu.end() || j == nv.end()) return i == nu.end() && j == nv.end();
    if (*i != *j) return false;
    ++i;
    ++j;
  }
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (!is_bijection(perm, g.num_vertices())) {
    throw PreconditionError("permute: not a permutation");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.num_vertices(), edges);
}

bool is_bijection(std::span<const Vertex> f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool verify_isomorphism(const Graph& g, const Graph& h,
                        std::span<const Vertex> f) {
  const int n = g.num_vertices();
  if (h.num_vertices() != n || g.num_edges() != h.num_edges()) return false;
  if (!is_bijection(f, n)) return false;
  // Equal edge counts plus injectivity: checking E(g) maps into E(h) suffices.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && !h.has_edge(f[u], f[v])) return false;
    }
  }
  return true;
}

bool verify_colored_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                                std::span<const Vertex> f) {
  if (!verify_isomorphism(g.graph(), h.graph(), f)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.color(v) != h.color(f[v])) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const int shift = a.num_vertices();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ' ';
    first = false;
    os << u << '-' << v;
  }
  os << '}';
  return os.str();
}

}  // namespace distgi
