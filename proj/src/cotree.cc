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

#include "distgi/cotree.h"

#include <algorithm>
#include <utility>

namespace distgi {
namespace {

// Scratch state for splitting vertex subsets of one graph. Membership is
// tracked with stamps so that nothing is cleared between calls.
class Splitter {
 public:
  explicit Splitter(const Graph& g)
      : g_(g), member_(g.num_vertices(), 0), mark_(g.num_vertices(), 0) {}

  std::vector<std::vector<Vertex>> components(std::span<const Vertex> set) {
    const int stamp = next_stamp();
    for (Vertex v : set) member_[v] = stamp;
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    const int seen = next_stamp();
    for (Vertex s : set) {
      if (mark_[s] == seen) continue;
      std::vector<Vertex> comp;
      mark_[s] = seen;
      stack.push_back(s);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (Vertex w : g_.neighbors(u)) {
          if (member_[w] == stamp && mark_[w] != seen) {
            mark_[w] = seen;
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Components of the complement of G[set], using the shrinking-unvisited-list
  // search so that the complement is never materialized.
  std::vector<std::vector<Vertex>> co_components(std::span<const Vertex> set) {
    const int stamp = next_stamp();
    for (Vertex v : set) member_[v] = stamp;
    std::vector<Vertex> unvisited(set.begin(), set.end());
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> queue;
    std::vector<Vertex> still_adjacent;
    while (!unvisited.empty()) {
      std::vector<Vertex> comp;
      queue.assign(1, unvisited.front());
      unvisited.erase(unvisited.begin());
      while (!queue.empty()) {
        const Vertex u = queue.back();
        queue.pop_back();
        comp.push_back(u);
        const int adj = next_stamp();
        for (Vertex w : g_.neighbors(u)) {
          if (member_[w] == stamp) mark_[w] = adj;
        }
        still_adjacent.clear();
        for (Vertex w : unvisited) {
          if (mark_[w] == adj) {
            still_adjacent.push_back(w);
          } else {
            queue.push_back(w);
          }
        }
        unvisited.swap(still_adjacent);
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int next_stamp() { return ++stamp_; }

  const Graph& g_;
  std::vector<int> member_;
  std::vector<int> mark_;
  int stamp_ = 0;
};

}  // namespace

std::optional<Cotree> build_cotree(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return Cotree();
  Splitter splitter(g);
  std::vector<Cotree::Node> nodes;
  // (vertex set, parent node index or -1)
  std::vector<std::pair<std::vector<Vertex>, int>> work;
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  work.emplace_back(std::move(all), -1);
  while (!work.empty()) {
    auto [set, parent] = std::move(work.back());
    work.pop_back();
    const int index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (parent >= 0) nodes[parent].children.push_back(index);
    if (set.size() == 1) {
      nodes[index].kind = Cotree::Kind::kLeaf;
      nodes[index].vertex = set[0];
      continue;
    }
    auto parts = splitter.components(set);
    if (parts.size() > 1) {
      nodes[index].kind = Cotree::Kind::kUnion;
    } else {
      parts = splitter.co_components(set);
      if (parts.size() == 1) return std::nullopt;
      nodes[index].kind = Cotree::Kind::kJoin;
    }
    // Reverse push keeps children in ascending order of their least vertex.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      work.emplace_back(std::move(*it), index);
    }
  }
  return Cotree(std::move(nodes), 0, n);
}

bool is_cograph(const Graph& g) { return build_cotree(g).has_value(); }

Graph graph_from_cotree(const Cotree& t) {
  if (t.empty()) return Graph();
  // Children always have larger indices than their parent, so a reverse scan
  // is a post-order.
  std::vector<std::vector<Vertex>> leaves(t.num_nodes());
  std::vector<Edge> edges;
  for (int i = t.num_nodes() - 1; i >= 0; --i) {
    const auto& node = t.node(i);
    if (node.kind == Cotree::Kind::kLeaf) {
      leaves[i].push_back(node.vertex);
      continue;
    }
    for (size_t a = 0; a < node.children.size(); ++a) {
      const auto& la = leaves[node.children[a]];
      if (node.kind == Cotree::Kind::kJoin) {
        for (size_t b = a + 1; b < node.children.size(); ++b) {
          for (Vertex u : la) {
            for (Vertex v : leaves[node.children[b]]) edges.emplace_back(u, v);
          }
        }
      }
      leaves[i].insert(leaves[i].end(), la.begin(), la.end());
    }
    for (int c : node.children) std::vector<Vertex>().swap(leaves[c]);
  }
  return Graph(t.num_vertices(), edges);
}

std::string canonical_code(const Cotree& t, std::span<const int> colors) {
  if (t.empty()) return "E;";
  std::vector<std::string> code(t.num_nodes());
  for (int i = t.num_nodes() - 1; i >= 0; --i) {
    const auto& node = t.node(i);
    if (node.kind == Cotree::Kind::kLeaf) {
      code[i] = "L" + std::to_string(colors[node.vertex]) + ";";
      continue;
    }
    std::vector<std::string> parts;
    parts.reserve(node.children.size());
    for (int c : node.children) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = node.kind == Cotree::Kind::kUnion ? "U[" : "J[";
    for (const auto& p : parts) s += p;
    s += ']';
    code[i] = std::move(s);
  }
  return code[t.root()];
}

std::vector<int> CotreeInterner::intern(const Cotree& t,
                                        std::span<const int> colors) {
  std::vector<int> id(t.num_nodes(), -1);
  std::vector<int> key;
  for (int i = t.num_nodes() - 1; i >= 0; --i) {
    const auto& node = t.node(i);
    key.clear();
    key.push_back(static_cast<int>(node.kind));
    if (node.kind == Cotree::Kind::kLeaf) {
      key.push_back(colors[node.vertex]);
    } else {
      for (int c : node.children) key.push_back(id[c]);
      std::sort(key.begin() + 1, key.end());
    }
    auto [it, inserted] =
        ids_.try_emplace(key, static_cast<int>(ids_.size()));
    id[i] = it->second;
  }
  return id;
}

std::string Cotree::to_string() const {
  if (empty()) return "()";
  std::string out;
  // Iterative pre-order with explicit close markers.
  std::vector<std::pair<int, size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    const Node& node = nodes_[i];
    if (node.kind == Kind::kLeaf) {
      out += std::to_string(node.vertex);
      stack.pop_back();
      continue;
    }
    if (next == 0) out += node.kind == Kind::kUnion ? "U(" : "J(";
    if (next == node.children.size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (next > 0) out += ',';
    const int child = node.children[next++];
    stack.emplace_back(child, 0);
  }
  return out;
}

}  // namespace distgi
