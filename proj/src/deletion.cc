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

#include "distgi/deletion.h"

#include <algorithm>
#include <set>

namespace distgi {
namespace {

void sort_sets(std::vector<std::vector<Vertex>>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const auto& a, const auto& b) { return set_order_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Drops every set that strictly contains another one. Input sorted by
// set_order_less, so candidates for subsets always come earlier.
std::vector<std::vector<Vertex>> keep_minimal(
    const std::vector<std::vector<Vertex>>& sorted) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sorted) {
    bool minimal = true;
    for (const auto& t : out) {
      if (t.size() < s.size() &&
          std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<DeletionSet> tag(std::vector<std::vector<Vertex>> sets,
                             const std::string& family) {
  std::vector<DeletionSet> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(DeletionSet{std::move(s), family});
  return out;
}

class SearchTree {
 public:
  SearchTree(const Graph& g, const ForbiddenFamily& family, int k)
      : g_(g), matcher_(family), k_(k) {}

  void run(std::vector<Vertex> removed, int depth) {
    if (!visited_.insert(removed).second) return;
    ++nodes_;
    const InducedSubgraph rest = remove_vertices(g_, removed);
    if (depth == k_) {
      if (matcher_.is_member(rest.graph)) found_.push_back(removed);
      return;
    }
    const auto occurrence = matcher_.first(rest.graph);
    if (!occurrence) {
      found_.push_back(removed);
      return;
    }
    for (Vertex local : *occurrence) {
      std::vector<Vertex> child = removed;
      child.insert(std::upper_bound(child.begin(), child.end(),
                                    rest.to_parent[local]),
                   rest.to_parent[local]);
      run(std::move(child), depth + 1);
    }
  }

  std::vector<std::vector<Vertex>>& found() { return found_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  OccurrenceMatcher matcher_;
  int k_;
  std::set<std::vector<Vertex>> visited_;
  std::vector<std::vector<Vertex>> found_;
  std::int64_t nodes_ = 0;
};

}  // namespace

bool set_order_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

OccurrenceList enumerate_occurrences(const Graph& g,
                                     const ForbiddenFamily& family) {
  return OccurrenceMatcher(family).all(g);
}

std::optional<std::vector<Vertex>> follow_branch_string(
    const OccurrenceList& occurrences, const BranchString& gammas) {
  std::vector<Vertex> chosen;
  auto first_unhit = [&]() -> const std::vector<Vertex>* {
    for (const auto& a : occurrences) {
      bool hit = false;
      for (Vertex v : a) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
          hit = true;
          break;
        }
      }
      if (!hit) return &a;
    }
    return nullptr;
  };
  for (int gamma : gammas) {
    const auto* a = first_unhit();
    if (a == nullptr) break;
    if (gamma < 1 || gamma > static_cast<int>(a->size())) return std::nullopt;
    chosen.push_back((*a)[gamma - 1]);
  }
  if (first_unhit() != nullptr) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<DeletionSet> enumerate_deletion_sets(const Graph& g,
                                                 const ForbiddenFamily& family,
                                                 int k, SearchStats* stats) {
  if (k < 0) throw PreconditionError("deletion parameter k must be >= 0");
  SearchTree tree(g, family, k);
  tree.run({}, 0);
  if (stats != nullptr) stats->nodes = tree.nodes();
  sort_sets(tree.found());
  return tag(keep_minimal(tree.found()), family.name);
}

std::optional<DeletionSet> minimum_deletion_set(const Graph& g,
                                                const ForbiddenFamily& family,
                                                int k) {
  auto sets = enumerate_deletion_sets(g, family, k);
  if (sets.empty()) return std::nullopt;
  return sets.front();
}

std::optional<KernelDecomposition> buss_kernel(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("vertex cover parameter k must be >= 0");
  KernelDecomposition kd;
  std::vector<char> is_high(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > k) {
      kd.high.push_back(v);
      is_high[v] = 1;
    }
  }
  kd.b = static_cast<int>(kd.high.size());
  if (kd.b > k) return std::nullopt;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (is_high[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (!is_high[w]) {
        kd.low.push_back(v);
        break;
      }
    }
  }
  const std::int64_t bound =
      static_cast<std::int64_t>(k - kd.b) * static_cast<std::int64_t>(k + 1);
  if (static_cast<std::int64_t>(kd.low.size()) > bound) return std::nullopt;
  return kd;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) in[v] = 1;
  for (const auto& [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

std::vector<DeletionSet> enumerate_minimal_vertex_covers(const Graph& g,
                                                         int k) {
  const auto kernel = buss_kernel(g, k);
  if (!kernel) return {};
  const InducedSubgraph low = induced_subgraph(g, kernel->low);
  const Graph& h = low.graph;
  const int size = h.num_vertices();
  const int budget = std::min(k - kernel->b, size);

  std::vector<std::vector<Vertex>> covers;
  std::vector<char> in(size, 0);
  std::vector<int> pick;
  // Combinations of each size r in lexicographic order.
  for (int r = 0; r <= budget; ++r) {
    pick.resize(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      std::fill(in.begin(), in.end(), 0);
      for (int i : pick) in[i] = 1;
      bool covers_all = true;
      for (int u = 0; u < size && covers_all; ++u) {
        if (in[u]) continue;
        for (Vertex w : h.neighbors(u)) {
          if (!in[w]) {
            covers_all = false;
            break;
          }
        }
      }
      // Minimal iff every chosen vertex has a neighbor outside the cover.
      bool minimal = covers_all;
      for (int i = 0; i < r && minimal; ++i) {
        bool needed = false;
        for (Vertex w : h.neighbors(pick[i])) {
          if (!in[w]) {
            needed = true;
            break;
          }
        }
        minimal = needed;
      }
      if (minimal) {
        std::vector<Vertex> cover = kernel->high;
        for (int i : pick) cover.push_back(low.to_parent[i]);
        std::sort(cover.begin(), cover.end());
        covers.push_back(std::move(cover));
      }
      int i = r - 1;
      while (i >= 0 && pick[i] == size - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  sort_sets(covers);
  return tag(std::move(covers), "vertex-cover");
}

Graph remove_twin_edges(const Graph& g) {
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges()) {
    if (!are_twins(g, u, v)) kept.emplace_back(u, v);
  }
  return Graph(g.num_vertices(), kept);
}

std::vector<DeletionSet> enumerate_twin_covers(const Graph& g, int k) {
  auto covers = enumerate_minimal_vertex_covers(remove_twin_edges(g), k);
  for (auto& c : covers) c.family = "twin-cover";
  return covers;
}

}  // namespace distgi
