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

#include "distgi/recognition.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "distgi/cotree.h"
#include "distgi/graph_io.h"

namespace distgi {
namespace {

// Ordered graphs on up to 6 vertices fit in 15 bits.
constexpr int kMaxTabulated = 6;

constexpr int pair_bit(int a, int b) { return b * (b - 1) / 2 + a; }  // a < b
constexpr std::uint32_t low_bits(int j) {
  return (std::uint32_t{1} << (j * (j - 1) / 2)) - 1;
}

// Dense adjacency bits for the hot loop of the subset scan; falls back to
// binary search on large graphs.
class AdjacencyBits {
 public:
  static constexpr int kMaxDense = 8192;

  explicit AdjacencyBits(const Graph& g)
      : g_(g), words_((g.num_vertices() + 63) / 64) {
    if (g.num_vertices() > kMaxDense) return;
    bits_.assign(static_cast<size_t>(g.num_vertices()) * words_, 0);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v : g.neighbors(u)) {
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1}
                                                           << (v % 64);
      }
    }
  }

  bool operator()(Vertex u, Vertex v) const {
    if (bits_.empty()) return g_.has_edge(u, v);
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
  }

 private:
  const Graph& g_;
  size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

ForbiddenFamily make_family(std::string name, std::vector<Graph> patterns,
                            BaseClass base) {
  if (patterns.empty()) {
    throw PreconditionError("forbidden family '" + name + "' has no patterns");
  }
  int d = 0;
  for (const Graph& p : patterns) {
    if (p.num_vertices() < 1) {
      throw PreconditionError("forbidden pattern without vertices in '" +
                              name + "'");
    }
    d = std::max(d, p.num_vertices());
  }
  return ForbiddenFamily{std::move(name), std::move(patterns), d, base};
}

ForbiddenFamily builtin_family(std::string_view name) {
  if (name == "cograph") {
    return make_family("cograph", {path_graph(4)}, BaseClass::kCograph);
  }
  if (name == "cluster") {
    return make_family("cluster", {path_graph(3)}, BaseClass::kCluster);
  }
  if (name == "threshold") {
    Graph two_k2(4, {{0, 1}, {2, 3}});
    return make_family("threshold", {path_graph(4), cycle_graph(4), two_k2},
                       BaseClass::kThreshold);
  }
  if (name == "edgeless") {
    return make_family("edgeless", {complete_graph(2)}, BaseClass::kEdgeless);
  }
  throw PreconditionError("unknown graph family '" + std::string(name) + "'");
}

ForbiddenFamily parse_family(std::string name, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Graph> patterns;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    patterns.push_back(parse_graph6(line));
  }
  return make_family(std::move(name), std::move(patterns));
}

bool induces_pattern(const Graph& g, std::span<const Vertex> subset,
                     const Graph& pattern) {
  const int s = static_cast<int>(subset.size());
  if (s != pattern.num_vertices()) return false;
  std::int64_t edges = 0;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) edges += g.has_edge(subset[a], subset[b]);
  if (edges != pattern.num_edges()) return false;
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < s && ok; ++a) {
      for (int b = a + 1; b < s; ++b) {
        if (g.has_edge(subset[a], subset[b]) !=
            pattern.has_edge(perm[a], perm[b])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

OccurrenceMatcher::OccurrenceMatcher(const ForbiddenFamily& family)
    : family_(family) {
  std::vector<int> sizes;
  for (const Graph& p : family_.patterns) sizes.push_back(p.num_vertices());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int size : sizes) {
    SizeClass sc;
    sc.size = size;
    for (int i = 0; i < static_cast<int>(family_.patterns.size()); ++i) {
      if (family_.patterns[i].num_vertices() == size) sc.patterns.push_back(i);
    }
    if (size <= kMaxTabulated) {
      sc.tabulated = true;
      sc.allowed.resize(size + 1);
      for (int j = 0; j <= size; ++j) {
        sc.allowed[j].assign(std::size_t{1} << (j * (j - 1) / 2), 0);
      }
      std::vector<int> order(size);
      for (int pi : sc.patterns) {
        const Graph& p = family_.patterns[pi];
        std::iota(order.begin(), order.end(), 0);
        do {
          std::uint32_t mask = 0;
          for (int b = 1; b < size; ++b)
            for (int a = 0; a < b; ++a)
              if (p.has_edge(order[a], order[b])) mask |= 1u << pair_bit(a, b);
          for (int j = 0; j <= size; ++j) sc.allowed[j][mask & low_bits(j)] = 1;
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
    classes_.push_back(std::move(sc));
  }
}

template <class Visit>
void OccurrenceMatcher::scan(const Graph& g, Visit&& visit) const {
  const int n = g.num_vertices();
  AdjacencyBits adj(g);
  std::vector<Vertex> tuple;
  for (const SizeClass& sc : classes_) {
    const int s = sc.size;
    if (s > n) break;
    tuple.assign(s, 0);
    std::vector<std::uint32_t> mask(s + 1, 0);
    // Iterative lexicographic DFS over increasing tuples; depth = tuple slot.
    int depth = 0;
    tuple[0] = -1;
    while (depth >= 0) {
      const Vertex next = ++tuple[depth];
      if (next > n - (s - depth)) {
        --depth;
        continue;
      }
      std::uint32_t m = mask[depth];
      if (sc.tabulated) {
        for (int a = 0; a < depth; ++a) {
          if (adj(tuple[a], next)) m |= 1u << pair_bit(a, depth);
        }
        if (!sc.allowed[depth + 1][m]) continue;
      }
      if (depth + 1 < s) {
        mask[depth + 1] = m;
        ++depth;
        tuple[depth] = next;
        continue;
      }
      bool match = sc.tabulated;
      if (!match) {
        for (int pi : sc.patterns) {
          if (induces_pattern(g, tuple, family_.patterns[pi])) {
            match = true;
            break;
          }
        }
      }
      if (match && !visit(std::span<const Vertex>(tuple))) return;
    }
  }
}

std::optional<std::vector<Vertex>> OccurrenceMatcher::first(
    const Graph& g) const {
  if (family_.base != BaseClass::kCustom && is_member(g)) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  scan(g, [&](std::span<const Vertex> t) {
    found.emplace(t.begin(), t.end());
    return false;
  });
  return found;
}

std::vector<std::vector<Vertex>> OccurrenceMatcher::all(const Graph& g) const {
  std::vector<std::vector<Vertex>> out;
  if (family_.base != BaseClass::kCustom && is_member(g)) return out;
  scan(g, [&](std::span<const Vertex> t) {
    out.emplace_back(t.begin(), t.end());
    return true;
  });
  return out;
}

bool OccurrenceMatcher::is_member(const Graph& g) const {
  switch (family_.base) {
    case BaseClass::kCograph:
      return is_cograph(g);
    case BaseClass::kCluster:
      return is_cluster_graph(g);
    case BaseClass::kThreshold:
      return is_threshold_graph(g);
    case BaseClass::kEdgeless:
      return g.num_edges() == 0;
    case BaseClass::kCustom:
      break;
  }
  bool found = false;
  scan(g, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return !found;
}

std::optional<std::vector<Vertex>> find_forbidden_occurrence(
    const Graph& g, const ForbiddenFamily& family) {
  return OccurrenceMatcher(family).first(g);
}

bool is_member(const Graph& g, const ForbiddenFamily& family) {
  return OccurrenceMatcher(family).is_member(g);
}

bool is_cluster_graph(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    const int want = static_cast<int>(comp.size()) - 1;
    for (Vertex v : comp) {
      if (g.degree(v) != want) return false;
    }
  }
  return true;
}

bool is_threshold_graph(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> degree(n);
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  int remaining = n;
  while (remaining > 0) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (degree[v] == 0 || degree[v] == remaining - 1)) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return false;
    alive[pick] = 0;
    --remaining;
    for (Vertex w : g.neighbors(pick)) --degree[w];
  }
  return true;
}

}  // namespace distgi
