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

// Colored isomorphism for the base classes the engine reduces to.

#ifndef DISTGI_COLORED_BACKENDS_H_
#define DISTGI_COLORED_BACKENDS_H_

#include <map>
#include <string_view>
#include <vector>

#include "distgi/graph.h"

namespace distgi {

template <class Key>
using TypeCensus = std::map<Key, int>;

// Edgeless graphs: color -> multiplicity.
TypeCensus<int> independent_census(const ColoredGraph& cg);
IsoResult colored_gi_independent(const ColoredGraph& a, const ColoredGraph& b);

// Cluster graphs: sorted color multiset of a clique -> number of such cliques.
TypeCensus<std::vector<int>> cluster_census(const ColoredGraph& cg);
IsoResult colored_gi_cluster(const ColoredGraph& a, const ColoredGraph& b);

// Cographs (and so threshold graphs) through cotree interning.
IsoResult colored_gi_cograph(const ColoredGraph& a, const ColoredGraph& b);

enum class Backend { kIndependent, kCluster, kCograph };

Backend parse_backend_name(std::string_view name);
std::string_view backend_name(Backend backend);

IsoResult colored_gi(Backend backend, const ColoredGraph& a,
                     const ColoredGraph& b);

}  // namespace distgi

#endif  // DISTGI_COLORED_BACKENDS_H_
