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

// Membership in graph classes given by finitely many forbidden induced
// subgraphs.
//
// Occurrences (vertex subsets inducing a forbidden pattern) are ordered by
// size first and then lexicographically as sorted vertex tuples. Everything
// that talks about "the first occurrence" uses that order.

#ifndef DISTGI_RECOGNITION_H_
#define DISTGI_RECOGNITION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distgi/graph.h"

namespace distgi {

// Classes with a polynomial recognizer that can stand in for the subset scan.
enum class BaseClass { kCustom, kCograph, kCluster, kThreshold, kEdgeless };

struct ForbiddenFamily {
  std::string name;
  std::vector<Graph> patterns;
  int d = 0;  // largest pattern size
  BaseClass base = BaseClass::kCustom;
};

// Validates the patterns (at least one, each with >= 1 vertex) and sets d.
ForbiddenFamily make_family(std::string name, std::vector<Graph> patterns,
                            BaseClass base = BaseClass::kCustom);

// cograph {P4}, cluster {P3}, threshold {P4, C4, 2K2}, edgeless {K2}.
// Throws PreconditionError for any other name.
ForbiddenFamily builtin_family(std::string_view name);

// One graph6 line per pattern; blank lines and lines starting with '#' are
// skipped.
ForbiddenFamily parse_family(std::string name, std::string_view text);

// True iff G[subset] (in the given vertex order) is isomorphic to `pattern`;
// brute force over all |pattern|! maps.
bool induces_pattern(const Graph& g, std::span<const Vertex> subset,
                     const Graph& pattern);

// Scans vertex subsets in occurrence order, pruning any prefix that does not
// induce a graph found among the induced subgraphs of a same-size pattern.
// Construct once per family and reuse.
class OccurrenceMatcher {
 public:
  explicit OccurrenceMatcher(const ForbiddenFamily& family);

  const ForbiddenFamily& family() const { return family_; }

  std::optional<std::vector<Vertex>> first(const Graph& g) const;
  std::vector<std::vector<Vertex>> all(const Graph& g) const;

  // Class membership through the family's polynomial recognizer when it has
  // one; otherwise through the scan.
  bool is_member(const Graph& g) const;

 private:
  struct SizeClass {
    int size = 0;
    std::vector<int> patterns;  // indices into family_.patterns
    bool tabulated = false;
    // allowed[j][mask]: some ordering of some pattern's vertices has a length
    // j prefix inducing the ordered graph `mask`; allowed[size] is the exact
    // match test. Only built for sizes up to kMaxTabulated.
    std::vector<std::vector<char>> allowed;
  };

  // `visit` returns false to stop the scan.
  template <class Visit>
  void scan(const Graph& g, Visit&& visit) const;

  ForbiddenFamily family_;
  std::vector<SizeClass> classes_;
};

std::optional<std::vector<Vertex>> find_forbidden_occurrence(
    const Graph& g, const ForbiddenFamily& family);
bool is_member(const Graph& g, const ForbiddenFamily& family);

// Polynomial recognizers for the builtin classes.
bool is_cluster_graph(const Graph& g);
bool is_threshold_graph(const Graph& g);  // isolated/universal peeling

}  // namespace distgi

#endif  // DISTGI_RECOGNITION_H_
