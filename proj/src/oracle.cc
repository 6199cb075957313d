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

#include "distgi/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace distgi::oracle {
namespace {

class Backtracker {
 public:
  Backtracker(const ColoredGraph& a, const ColoredGraph& b)
      : a_(a), b_(b), map_(a.num_vertices(), -1), used_(b.num_vertices(), 0) {}

  bool run(Vertex v) {
    const int n = a_.num_vertices();
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used_[w] || a_.color(v) != b_.color(w) ||
          a_.graph().degree(v) != b_.graph().degree(w)) {
        continue;
      }
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = a_.graph().has_edge(u, v) == b_.graph().has_edge(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      if (run(v + 1)) return true;
      used_[w] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const VertexBijection& map() const { return map_; }

 private:
  const ColoredGraph& a_;
  const ColoredGraph& b_;
  VertexBijection map_;
  std::vector<char> used_;
};

std::vector<Vertex> members_of(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

Graph without(const Graph& g, std::uint32_t mask) {
  return remove_vertices(g, members_of(mask)).graph;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (w == u || w == v) continue;
    if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
  }
  return true;
}

template <class Pred>
std::optional<int> smallest_subset(int n, int limit, Pred&& works) {
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > limit || (best && size >= *best)) continue;
    if (works(mask)) best = size;
  }
  return best;
}

}  // namespace

IsoResult brute_force_colored_gi(const ColoredGraph& g1,
                                 const ColoredGraph& g2) {
  if (g1.num_vertices() != g2.num_vertices() ||
      g1.graph().num_edges() != g2.graph().num_edges()) {
    return IsoResult::no();
  }
  Backtracker bt(g1, g2);
  if (!bt.run(0)) return IsoResult::no();
  return IsoResult::yes(bt.map());
}

IsoResult brute_force_gi(const Graph& g1, const Graph& g2) {
  return brute_force_colored_gi(ColoredGraph(g1), ColoredGraph(g2));
}

bool contains_pattern(const Graph& g, const Graph& pattern) {
  const int n = g.num_vertices();
  const int p = pattern.num_vertices();
  if (p > n) return false;
  std::vector<int> perm(p);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    const auto subset = members_of(mask);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool same = true;
      for (int a = 0; a < p && same; ++a) {
        for (int b = a + 1; b < p && same; ++b) {
          same = g.has_edge(subset[a], subset[b]) ==
                 pattern.has_edge(perm[a], perm[b]);
        }
      }
      if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

bool brute_force_member(const Graph& g, const ForbiddenFamily& family) {
  for (const Graph& h : family.patterns) {
    if (contains_pattern(g, h)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> brute_force_deletion_sets(
    const Graph& g, const ForbiddenFamily& family, int k) {
  const int n = g.num_vertices();
  std::set<std::uint32_t> works;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    if (brute_force_member(without(g, mask), family)) works.insert(mask);
  }
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask : works) {
    bool minimal = true;
    // Walks every proper submask, down to and including 0.
    for (std::uint32_t sub = mask; sub != 0 && minimal;) {
      sub = (sub - 1) & mask;
      if (works.count(sub)) minimal = false;
    }
    if (minimal) out.push_back(members_of(mask));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::optional<int> brute_force_distance(const Graph& g,
                                        const ForbiddenFamily& family,
                                        int limit) {
  return smallest_subset(g.num_vertices(), limit, [&](std::uint32_t mask) {
    return brute_force_member(without(g, mask), family);
  });
}

std::optional<int> brute_force_vertex_cover_number(const Graph& g, int limit) {
  const auto edges = g.edges();
  return smallest_subset(g.num_vertices(), limit, [&](std::uint32_t mask) {
    for (const auto& [u, v] : edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
    }
    return true;
  });
}

std::optional<int> brute_force_twin_cover_number(const Graph& g, int limit) {
  const auto edges = g.edges();
  return smallest_subset(g.num_vertices(), limit, [&](std::uint32_t mask) {
    for (const auto& [u, v] : edges) {
      if (((mask >> u) & 1) || ((mask >> v) & 1)) continue;
      if (!twins(g, u, v)) return false;
    }
    return true;
  });
}

}  // namespace distgi::oracle
