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

// Cotrees of cographs and their canonical codes.
//
// A cograph is either a single vertex, the disjoint union of cographs, or the
// join of cographs. The cotree records that decomposition: leaves are
// vertices, internal nodes are UNION or JOIN, and the two internal labels
// alternate along every root-to-leaf path. Two colored cographs are
// isomorphic exactly when their cotrees are, which is decided here by
// bottom-up interning of (label, sorted child ids).

#ifndef DISTGI_COTREE_H_
#define DISTGI_COTREE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distgi/graph.h"

namespace distgi {

class Cotree {
 public:
  enum class Kind { kLeaf, kUnion, kJoin };

  struct Node {
    Kind kind = Kind::kLeaf;
    Vertex vertex = -1;         // leaves only
    std::vector<int> children;  // node indices; internal nodes only
  };

  Cotree() = default;
  Cotree(std::vector<Node> nodes, int root, int num_vertices)
      : nodes_(std::move(nodes)), root_(root), num_vertices_(num_vertices) {}

  int root() const { return root_; }
  int num_vertices() const { return num_vertices_; }
  bool empty() const { return root_ < 0; }
  const Node& node(int i) const { return nodes_[i]; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }

  // Bracketed debug form, e.g. "J(U(0,2),1)".
  std::string to_string() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
  int num_vertices_ = 0;
};

// Recursive connectivity / co-connectivity decomposition. nullopt iff the
// graph contains an induced P4. The empty graph yields an empty cotree.
std::optional<Cotree> build_cotree(const Graph& g);

bool is_cograph(const Graph& g);

// Graph whose cotree is `t`: two leaves are adjacent iff their lowest common
// ancestor is a JOIN node.
Graph graph_from_cotree(const Cotree& t);

// Prefix-free serialization: leaf "L<color>;", internal "U[" or "J[" followed
// by the sorted child codes and "]".
std::string canonical_code(const Cotree& t, std::span<const int> colors);

// Assigns equal ids to equal (label, color, child-id multiset) keys. One
// interner shared by several trees makes their node ids comparable.
class CotreeInterner {
 public:
  // Returns per-node ids of `t`; the root's id identifies the colored cograph
  // up to isomorphism among all trees passed to this interner.
  std::vector<int> intern(const Cotree& t, std::span<const int> colors);

 private:
  std::map<std::vector<int>, int> ids_;
};

}  // namespace distgi

#endif  // DISTGI_COTREE_H_
