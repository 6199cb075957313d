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

#include "distgi/colored_backends.h"

#include <algorithm>
#include <string>
#include <utility>

#include "distgi/cotree.h"

namespace distgi {
namespace {

struct Clique {
  std::vector<int> key;         // sorted colors
  std::vector<Vertex> members;  // sorted by (color, vertex)
};

std::vector<Clique> cliques_of(const ColoredGraph& cg) {
  std::vector<Clique> out;
  for (auto& comp : connected_components(cg.graph())) {
    const int want = static_cast<int>(comp.size()) - 1;
    for (Vertex v : comp) {
      if (cg.graph().degree(v) != want) {
        throw PreconditionError("cluster backend: component of vertex " +
                                std::to_string(v) + " is not a clique");
      }
    }
    std::stable_sort(comp.begin(), comp.end(), [&](Vertex x, Vertex y) {
      return cg.color(x) < cg.color(y);
    });
    Clique c;
    for (Vertex v : comp) c.key.push_back(cg.color(v));
    c.members = std::move(comp);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TypeCensus<int> independent_census(const ColoredGraph& cg) {
  if (cg.graph().num_edges() != 0) {
    throw PreconditionError("independent backend: graph has an edge");
  }
  TypeCensus<int> census;
  for (Vertex v = 0; v < cg.num_vertices(); ++v) ++census[cg.color(v)];
  return census;
}

IsoResult colored_gi_independent(const ColoredGraph& a, const ColoredGraph& b) {
  if (independent_census(a) != independent_census(b)) return IsoResult::no();
  std::map<int, std::vector<Vertex>> pool;
  for (Vertex v = 0; v < b.num_vertices(); ++v) pool[b.color(v)].push_back(v);
  std::map<int, size_t> next;
  VertexBijection w(a.num_vertices());
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    w[v] = pool[a.color(v)][next[a.color(v)]++];
  }
  return IsoResult::yes(std::move(w));
}

TypeCensus<std::vector<int>> cluster_census(const ColoredGraph& cg) {
  TypeCensus<std::vector<int>> census;
  for (auto& c : cliques_of(cg)) ++census[std::move(c.key)];
  return census;
}

IsoResult colored_gi_cluster(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_vertices() != b.num_vertices()) return IsoResult::no();
  auto ca = cliques_of(a);
  auto cb = cliques_of(b);
  if (ca.size() != cb.size()) return IsoResult::no();
  auto by_key = [](const Clique& x, const Clique& y) {
    return x.key < y.key ||
           (x.key == y.key && x.members.front() < y.members.front());
  };
  std::sort(ca.begin(), ca.end(), by_key);
  std::sort(cb.begin(), cb.end(), by_key);
  VertexBijection w(a.num_vertices(), -1);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].key != cb[i].key) return IsoResult::no();
    for (size_t j = 0; j < ca[i].members.size(); ++j) {
      w[ca[i].members[j]] = cb[i].members[j];
    }
  }
  return IsoResult::yes(std::move(w));
}

IsoResult colored_gi_cograph(const ColoredGraph& a, const ColoredGraph& b) {
  const auto ta = build_cotree(a.graph());
  const auto tb = build_cotree(b.graph());
  if (!ta || !tb) throw PreconditionError("cograph backend: not a cograph");
  if (a.num_vertices() != b.num_vertices()) return IsoResult::no();
  if (a.num_vertices() == 0) return IsoResult::yes({});
  CotreeInterner interner;
  const auto ida = interner.intern(*ta, a.colors());
  const auto idb = interner.intern(*tb, b.colors());
  if (ida[ta->root()] != idb[tb->root()]) return IsoResult::no();

  VertexBijection w(a.num_vertices(), -1);
  std::vector<std::pair<int, int>> stack{{ta->root(), tb->root()}};
  std::vector<int> ka, kb;
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = ta->node(x);
    const auto& ny = tb->node(y);
    if (nx.kind == Cotree::Kind::kLeaf) {
      w[nx.vertex] = ny.vertex;
      continue;
    }
    // Equal ids imply equal sorted child-id lists; pair children in that
    // order.
    ka = nx.children;
    kb = ny.children;
    std::stable_sort(ka.begin(), ka.end(),
                     [&](int p, int q) { return ida[p] < ida[q]; });
    std::stable_sort(kb.begin(), kb.end(),
                     [&](int p, int q) { return idb[p] < idb[q]; });
    for (size_t i = 0; i < ka.size(); ++i) stack.emplace_back(ka[i], kb[i]);
  }
  return IsoResult::yes(std::move(w));
}

Backend parse_backend_name(std::string_view name) {
  if (name == "independent") return Backend::kIndependent;
  if (name == "cluster") return Backend::kCluster;
  if (name == "cograph") return Backend::kCograph;
  throw PreconditionError("unknown backend '" + std::string(name) + "'");
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kIndependent:
      return "independent";
    case Backend::kCluster:
      return "cluster";
    case Backend::kCograph:
      return "cograph";
  }
  return "?";
}

IsoResult colored_gi(Backend backend, const ColoredGraph& a,
                     const ColoredGraph& b) {
  switch (backend) {
    case Backend::kIndependent:
      return colored_gi_independent(a, b);
    case Backend::kCluster:
      return colored_gi_cluster(a, b);
    case Backend::kCograph:
      return colored_gi_cograph(a, b);
  }
  return IsoResult::no();
}

}  // namespace distgi
