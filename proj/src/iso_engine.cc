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

#include "distgi/iso_engine.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace distgi {
namespace {

constexpr int kMaxAnchor = 64;

ColoredGraph complement_colored(const ColoredGraph& g) {
  return ColoredGraph(complement(g.graph()),
                      std::vector<int>(g.colors().begin(), g.colors().end()));
}

int worker_count(const EngineOptions& options) {
  if (options.workers > 0) return options.workers;
  if (const char* env = std::getenv("DISTGI_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Vertices inside one clique of G - X must share their anchor neighborhood
// when X is a twin-cover.
void check_uniform_cliques(const Graph& rest, std::span<const Vertex> to_parent,
                           std::span<const std::uint64_t> masks) {
  for (const auto& [u, v] : rest.edges()) {
    if (masks[to_parent[u]] != masks[to_parent[v]]) {
      throw std::logic_error(
          "twin-cover remainder clique with mixed anchor neighborhoods");
    }
  }
}

// Search state shared by all (T, phi) candidates.
class AnchorSearch {
 public:
  AnchorSearch(const ColoredGraph& g1, const ColoredGraph& g2,
               std::vector<Vertex> anchor, Backend backend, bool twin_cover)
      : g1_(g1),
        g2_(g2),
        anchor_(std::move(anchor)),
        backend_(backend),
        twin_cover_(twin_cover),
        key_(make_anchor_key(g1, anchor_)),
        rest1_(anchor_color(g1, anchor_, key_)) {
    if (twin_cover_) {
      check_uniform_cliques(rest1_.colored.graph(), rest1_.to_parent,
                            anchor_masks(g1.graph(), anchor_));
    }
    for (Vertex v = 0; v < rest1_.colored.num_vertices(); ++v) {
      const int c = rest1_.colored.color(v);
      if (c >= static_cast<int>(census1_.size())) census1_.resize(c + 1, 0);
      ++census1_[c];
    }
  }

  // Tries every bijection anchor -> target. Returns the full witness on
  // success. `stop` is polled between bijections.
  std::optional<VertexBijection> try_target(std::span<const Vertex> target,
                                            const std::atomic<bool>& stop,
                                            EngineStats& stats) const {
    const int s = static_cast<int>(anchor_.size());
    const InducedSubgraph rest2 = remove_vertices(g2_.graph(), target);
    if (twin_cover_) {
      check_uniform_cliques(rest2.graph, rest2.to_parent,
                            anchor_masks(g2_.graph(), target));
    }
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vertex> image(s);
    std::vector<int> colors(rest2.graph.num_vertices());
    std::vector<int> census;
    do {
      if (stop.load(std::memory_order_relaxed)) return std::nullopt;
      ++stats.bijections_tried;
      for (int j = 0; j < s; ++j) image[j] = target[perm[j]];
      if (!isomorphic_on_anchor(image)) continue;
      ++stats.anchor_isomorphisms;

      // Color G2 - T through the shared key; anchor bit j is image[j].
      const auto masks = anchor_masks(g2_.graph(), image);
      census.assign(census1_.size(), 0);
      bool consistent = true;
      for (Vertex v = 0; v < rest2.graph.num_vertices() && consistent; ++v) {
        const Vertex p = rest2.to_parent[v];
        auto it = key_.find({g2_.color(p), masks[p]});
        if (it == key_.end() || ++census[it->second] > census1_[it->second]) {
          consistent = false;
          break;
        }
        colors[v] = it->second;
      }
      if (!consistent || census != census1_) continue;

      ++stats.backend_calls;
      const ColoredGraph colored2(rest2.graph, colors);
      IsoResult r = colored_gi(backend_, rest1_.colored, colored2);
      if (!r.isomorphic) continue;

      VertexBijection w(g1_.num_vertices(), -1);
      for (int j = 0; j < s; ++j) w[anchor_[j]] = image[j];
      for (size_t i = 0; i < r.witness.size(); ++i) {
        w[rest1_.to_parent[i]] = rest2.to_parent[r.witness[i]];
      }
      return w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

 private:
  bool isomorphic_on_anchor(std::span<const Vertex> image) const {
    const int s = static_cast<int>(anchor_.size());
    for (int a = 0; a < s; ++a) {
      if (g1_.color(anchor_[a]) != g2_.color(image[a])) return false;
      for (int b = a + 1; b < s; ++b) {
        if (g1_.graph().has_edge(anchor_[a], anchor_[b]) !=
            g2_.graph().has_edge(image[a], image[b])) {
          return false;
        }
      }
    }
    return true;
  }

  const ColoredGraph& g1_;
  const ColoredGraph& g2_;
  std::vector<Vertex> anchor_;
  Backend backend_;
  bool twin_cover_;
  AnchorKey key_;
  AnchoredRemainder rest1_;
  std::vector<int> census1_;
};

void add_stats(EngineStats& into, const EngineStats& from) {
  into.bijections_tried += from.bijections_tried;
  into.anchor_isomorphisms += from.anchor_isomorphisms;
  into.backend_calls += from.backend_calls;
}

}  // namespace

Parameterization Parameterization::vertex_cover(int k) {
  return {ParamKind::kVertexCover, k, std::nullopt, std::nullopt};
}

Parameterization Parameterization::twin_cover(int k) {
  return {ParamKind::kTwinCover, k, std::nullopt, std::nullopt};
}

Parameterization Parameterization::distance_to_clique(int k) {
  return {ParamKind::kDistanceToClique, k, std::nullopt, std::nullopt};
}

Parameterization Parameterization::distance_to_class(
    ForbiddenFamily family, int k, std::optional<Backend> backend) {
  return {ParamKind::kDistanceToClass, k, std::move(family), backend};
}

Parameterization parse_parameterization(std::string_view name, int k) {
  if (name == "vc") return Parameterization::vertex_cover(k);
  if (name == "twin-cover") return Parameterization::twin_cover(k);
  if (name == "dist-clique") return Parameterization::distance_to_clique(k);
  if (name.starts_with("dist-")) {
    name.remove_prefix(5);
    return Parameterization::distance_to_class(builtin_family(name), k);
  }
  throw PreconditionError("unknown parameterization '" + std::string(name) +
                          "'");
}

std::string parameterization_name(const Parameterization& p) {
  switch (p.kind) {
    case ParamKind::kVertexCover:
      return "vc";
    case ParamKind::kTwinCover:
      return "twin-cover";
    case ParamKind::kDistanceToClique:
      return "dist-clique";
    case ParamKind::kDistanceToClass:
      return "dist-" + (p.family ? p.family->name : std::string("?"));
  }
  return "?";
}

Backend backend_for(const Parameterization& p) {
  if (p.backend) return *p.backend;
  switch (p.kind) {
    case ParamKind::kVertexCover:
    case ParamKind::kDistanceToClique:
      return Backend::kIndependent;
    case ParamKind::kTwinCover:
      return Backend::kCluster;
    case ParamKind::kDistanceToClass:
      break;
  }
  if (!p.family) throw PreconditionError("distance-to-class without family");
  switch (p.family->base) {
    case BaseClass::kCograph:
    case BaseClass::kThreshold:
      return Backend::kCograph;
    case BaseClass::kCluster:
      return Backend::kCluster;
    case BaseClass::kEdgeless:
      return Backend::kIndependent;
    case BaseClass::kCustom:
      break;
  }
  throw PreconditionError("family '" + p.family->name +
                          "' needs an explicit colored-isomorphism backend");
}

std::vector<DeletionSet> deletion_sets_for(const Graph& g,
                                           const Parameterization& p) {
  if (p.k < 0) throw PreconditionError("parameter k must be >= 0");
  switch (p.kind) {
    case ParamKind::kVertexCover:
      return enumerate_minimal_vertex_covers(g, p.k);
    case ParamKind::kTwinCover:
      return enumerate_twin_covers(g, p.k);
    case ParamKind::kDistanceToClique:
      return enumerate_minimal_vertex_covers(complement(g), p.k);
    case ParamKind::kDistanceToClass:
      if (!p.family) {
        throw PreconditionError("distance-to-class without family");
      }
      return enumerate_deletion_sets(g, *p.family, p.k);
  }
  return {};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kIsomorphic:
      return "isomorphic";
    case Verdict::kNonIsomorphic:
      return "non-isomorphic";
    case Verdict::kDistanceExceeded:
      return "distance-exceeded";
  }
  return "?";
}

std::vector<std::uint64_t> anchor_masks(const Graph& g,
                                        std::span<const Vertex> anchor) {
  if (anchor.size() > kMaxAnchor) {
    throw PreconditionError("anchor sets larger than 64 are not supported");
  }
  std::vector<std::uint64_t> masks(g.num_vertices(), 0);
  for (size_t j = 0; j < anchor.size(); ++j) {
    for (Vertex w : g.neighbors(anchor[j])) masks[w] |= std::uint64_t{1} << j;
  }
  return masks;
}

AnchorKey make_anchor_key(const ColoredGraph& g,
                          std::span<const Vertex> anchor) {
  const auto masks = anchor_masks(g.graph(), anchor);
  std::vector<char> in_anchor(g.num_vertices(), 0);
  for (Vertex a : anchor) in_anchor[a] = 1;
  AnchorKey key;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_anchor[v]) continue;
    key.try_emplace({g.color(v), masks[v]}, static_cast<int>(key.size()));
  }
  return key;
}

AnchoredRemainder anchor_color(const ColoredGraph& g,
                               std::span<const Vertex> anchor,
                               const AnchorKey& key) {
  const auto masks = anchor_masks(g.graph(), anchor);
  InducedSubgraph rest = remove_vertices(g.graph(), anchor);
  std::vector<int> colors(rest.graph.num_vertices());
  for (Vertex v = 0; v < rest.graph.num_vertices(); ++v) {
    const Vertex p = rest.to_parent[v];
    auto it = key.find({g.color(p), masks[p]});
    if (it == key.end()) {
      throw std::logic_error("anchor key has no color for vertex " +
                             std::to_string(p));
    }
    colors[v] = it->second;
  }
  return {ColoredGraph(std::move(rest.graph), std::move(colors)),
          std::move(rest.to_parent)};
}

Decision decide(const ColoredGraph& g1, const ColoredGraph& g2,
                const Parameterization& p, const EngineOptions& options) {
  if (p.kind == ParamKind::kDistanceToClique) {
    // Isomorphisms of the complements are isomorphisms of the originals.
    Parameterization vc = Parameterization::vertex_cover(p.k);
    Decision d = decide(complement_colored(g1), complement_colored(g2), vc,
                        options);
    if (d.verdict == Verdict::kIsomorphic && options.verify &&
        !verify_colored_isomorphism(g1, g2, d.witness)) {
      throw std::logic_error("engine produced an invalid witness");
    }
    return d;
  }

  Decision out;
  // Isomorphism invariants first; they are sound whether or not the inputs
  // keep the distance promise.
  if (g1.num_vertices() != g2.num_vertices()) {
    out.reason = "vertex-count";
    return out;
  }
  if (g1.graph().num_edges() != g2.graph().num_edges()) {
    out.reason = "edge-count";
    return out;
  }
  {
    std::vector<int> c1(g1.colors().begin(), g1.colors().end());
    std::vector<int> c2(g2.colors().begin(), g2.colors().end());
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (c1 != c2) {
      out.reason = "color-count";
      return out;
    }
  }

  const Backend backend = backend_for(p);
  const auto sets1 = deletion_sets_for(g1.graph(), p);
  const auto sets2 = deletion_sets_for(g2.graph(), p);
  if (sets1.empty()) out.exceeded.push_back(1);
  if (sets2.empty()) out.exceeded.push_back(2);
  if (!out.exceeded.empty()) {
    out.verdict = Verdict::kDistanceExceeded;
    out.reason = "distance-exceeded";
    return out;
  }
  const int s = sets1.front().size();
  if (sets2.front().size() != s) {
    out.reason = "deletion-distance";
    return out;
  }

  std::vector<Vertex> anchor = sets1.front().vertices;
  if (options.anchor) {
    anchor = *options.anchor;
    std::sort(anchor.begin(), anchor.end());
    const bool known = std::any_of(sets1.begin(), sets1.end(), [&](auto& d) {
      return d.size() == s && d.vertices == anchor;
    });
    if (!known) {
      throw PreconditionError("anchor is not a minimum deletion set of G1");
    }
  }
  out.stats.anchor_size = s;

  std::vector<const DeletionSet*> targets;
  for (const auto& t : sets2) {
    if (t.size() == s) targets.push_back(&t);
  }
  out.stats.candidate_sets = static_cast<std::int64_t>(targets.size());

  const AnchorSearch search(g1, g2, anchor, backend,
                            p.kind == ParamKind::kTwinCover);
  std::optional<VertexBijection> witness;
  std::atomic<bool> stop{false};

  const int workers =
      options.deterministic
          ? 1
          : std::min<int>(worker_count(options),
                          static_cast<int>(targets.size()));
  if (workers <= 1) {
    for (const DeletionSet* t : targets) {
      witness = search.try_target(t->vertices, stop, out.stats);
      if (witness) break;
    }
  } else {
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    std::vector<EngineStats> local(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        while (!stop.load()) {
          const size_t i = next.fetch_add(1);
          if (i >= targets.size()) break;
          auto found = search.try_target(targets[i]->vertices, stop, local[w]);
          if (found) {
            std::lock_guard<std::mutex> lock(mu);
            if (!witness) witness = std::move(found);
            stop.store(true);
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& l : local) add_stats(out.stats, l);
  }

  if (!witness) {
    out.reason = "no-extension";
    return out;
  }
  if (options.verify && !verify_colored_isomorphism(g1, g2, *witness)) {
    throw std::logic_error("engine produced an invalid witness");
  }
  out.verdict = Verdict::kIsomorphic;
  out.witness = std::move(*witness);
  return out;
}

Decision decide(const Graph& g1, const Graph& g2, const Parameterization& p,
                const EngineOptions& options) {
  return decide(ColoredGraph(g1), ColoredGraph(g2), p, options);
}

Decision gi_distance_to_class(const Graph& g1, const Graph& g2,
                              const ForbiddenFamily& family, int k,
                              const EngineOptions& options) {
  return decide(g1, g2, Parameterization::distance_to_class(family, k),
                options);
}

Decision gi_vertex_cover(const Graph& g1, const Graph& g2, int k,
                         const EngineOptions& options) {
  return decide(g1, g2, Parameterization::vertex_cover(k), options);
}

Decision gi_twin_cover(const Graph& g1, const Graph& g2, int k,
                       const EngineOptions& options) {
  return decide(g1, g2, Parameterization::twin_cover(k), options);
}

Decision gi_distance_to_clique(const Graph& g1, const Graph& g2, int k,
                               const EngineOptions& options) {
  return decide(g1, g2, Parameterization::distance_to_clique(k), options);
}

}  // namespace distgi
