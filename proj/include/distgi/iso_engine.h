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

// Isomorphism for graphs a few vertex deletions away from a base class.
//
// Fix one minimum deletion set S of the first graph. For every minimal
// deletion set T of the second graph with |T| = |S| and every bijection
// phi: S -> T that is an isomorphism G1[S] -> G2[T], color the remainders by
// their neighborhoods in the anchor (u in G1 - S and v in G2 - T agree iff
// phi(N(u) & S) == N(v) & T) and ask the base-class colored isomorphism
// backend. The graphs are isomorphic iff some (T, phi) succeeds.

#ifndef DISTGI_ISO_ENGINE_H_
#define DISTGI_ISO_ENGINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distgi/colored_backends.h"
#include "distgi/deletion.h"
#include "distgi/graph.h"
#include "distgi/recognition.h"

namespace distgi {

enum class ParamKind {
  kVertexCover,
  kTwinCover,
  kDistanceToClique,
  kDistanceToClass,
};

struct Parameterization {
  ParamKind kind = ParamKind::kVertexCover;
  int k = 0;
  std::optional<ForbiddenFamily> family;  // kDistanceToClass only
  std::optional<Backend> backend;         // overrides the family default

  static Parameterization vertex_cover(int k);
  static Parameterization twin_cover(int k);
  static Parameterization distance_to_clique(int k);
  static Parameterization distance_to_class(
      ForbiddenFamily family, int k, std::optional<Backend> backend = {});
};

// vc | twin-cover | dist-clique | dist-cograph | dist-cluster |
// dist-threshold | dist-edgeless
Parameterization parse_parameterization(std::string_view name, int k);
std::string parameterization_name(const Parameterization& p);

// Backend that decides colored isomorphism on the family's class. Throws
// PreconditionError for custom families without an explicit backend.
Backend backend_for(const Parameterization& p);

// Minimal deletion sets of size <= k for the parameterization's base class,
// in (size, lexicographic) order. For distance to clique these are vertex
// covers of the complement.
std::vector<DeletionSet> deletion_sets_for(const Graph& g,
                                           const Parameterization& p);

enum class Verdict { kIsomorphic, kNonIsomorphic, kDistanceExceeded };

std::string_view verdict_name(Verdict v);

struct EngineStats {
  std::int64_t candidate_sets = 0;     // deletion sets of G2 of size |S|
  std::int64_t bijections_tried = 0;   // maps S -> T examined
  std::int64_t anchor_isomorphisms = 0;  // of those, isomorphisms on S
  std::int64_t backend_calls = 0;
  int anchor_size = -1;
};

struct Decision {
  Verdict verdict = Verdict::kNonIsomorphic;
  VertexBijection witness;      // set iff kIsomorphic
  std::vector<int> exceeded;    // 1 and/or 2 when kDistanceExceeded
  std::string reason;           // which test settled a non-isomorphic verdict
  EngineStats stats;
};

struct EngineOptions {
  // Sequential search in enumeration order; reproducible witnesses.
  bool deterministic = true;
  // Parallel workers when not deterministic; 0 reads DISTGI_WORKERS, then the
  // hardware concurrency.
  int workers = 0;
  // Re-check every witness before returning it.
  bool verify = false;
  // Use this minimum deletion set of G1 as the anchor instead of the first.
  std::optional<std::vector<Vertex>> anchor;
};

Decision decide(const ColoredGraph& g1, const ColoredGraph& g2,
                const Parameterization& p, const EngineOptions& options = {});
Decision decide(const Graph& g1, const Graph& g2, const Parameterization& p,
                const EngineOptions& options = {});

Decision gi_distance_to_class(const Graph& g1, const Graph& g2,
                              const ForbiddenFamily& family, int k,
                              const EngineOptions& options = {});
Decision gi_vertex_cover(const Graph& g1, const Graph& g2, int k,
                         const EngineOptions& options = {});
Decision gi_twin_cover(const Graph& g1, const Graph& g2, int k,
                       const EngineOptions& options = {});
Decision gi_distance_to_clique(const Graph& g1, const Graph& g2, int k,
                               const EngineOptions& options = {});

// (input color, neighborhood-in-anchor bitmask) -> remainder color. Bit j of
// the mask stands for anchor[j].
using AnchorKey = std::map<std::pair<int, std::uint64_t>, int>;

// Bitmask of N(v) & anchor for every vertex v, indexed like g.
std::vector<std::uint64_t> anchor_masks(const Graph& g,
                                        std::span<const Vertex> anchor);

// Numbers the (color, mask) pairs of g \ anchor by first occurrence.
AnchorKey make_anchor_key(const ColoredGraph& g,
                          std::span<const Vertex> anchor);

struct AnchoredRemainder {
  ColoredGraph colored;           // g \ anchor, colored through the key
  std::vector<Vertex> to_parent;  // remainder index -> vertex of g
};

// Throws std::logic_error when a remainder vertex has a (color, mask) pair the
// key does not know.
AnchoredRemainder anchor_color(const ColoredGraph& g,
                               std::span<const Vertex> anchor,
                               const AnchorKey& key);

}  // namespace distgi

#endif  // DISTGI_ISO_ENGINE_H_
