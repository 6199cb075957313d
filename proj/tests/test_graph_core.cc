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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "distgi/graph.h"
#include "test_util.h"

namespace distgi {
namespace {

void expect_well_formed(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      ASSERT_NE(u, v);
      ASSERT_GE(v, 0);
      ASSERT_LT(v, g.num_vertices());
      ASSERT_TRUE(g.has_edge(v, u));
    }
  }
}

TEST(GraphTest, CollapsesDuplicateAndReversedEdges) {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.degree(1), 2);
  expect_well_formed(g);
}

TEST(GraphTest, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(2, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{-1, 0}}), PreconditionError);
}

TEST(GraphTest, ColoredGraphValidatesColors) {
  EXPECT_THROW(ColoredGraph(path_graph(2), {0}), PreconditionError);
  EXPECT_THROW(ColoredGraph(path_graph(2), {0, -1}), PreconditionError);
  const ColoredGraph cg(path_graph(2));
  EXPECT_EQ(cg.color(0), 0);
  EXPECT_EQ(cg.color(1), 0);
}

TEST(GraphTest, PaletteSharesIdsAcrossGraphs) {
  Palette palette;
  const std::vector<std::string> first = {"a", "b"};
  const std::vector<std::string> second = {"b", "a"};
  const ColoredGraph a = make_colored(empty_graph(2), first, palette);
  const ColoredGraph b = make_colored(empty_graph(2), second, palette);
  EXPECT_EQ(a.color(0), b.color(1));
  EXPECT_EQ(a.color(1), b.color(0));
  EXPECT_EQ(palette.size(), 2);
  EXPECT_EQ(palette.label(a.color(1)), "b");
}

TEST(InducedSubgraphTest, EmptySubset) {
  const auto sub = induced_subgraph(cycle_graph(4), {});
  EXPECT_EQ(sub.graph.num_vertices(), 0);
  EXPECT_TRUE(sub.to_parent.empty());
}

TEST(InducedSubgraphTest, ThreeVerticesOfC4IsP3) {
  const std::vector<Vertex> s = {0, 1, 2};
  const auto sub = induced_subgraph(cycle_graph(4), s);
  EXPECT_EQ(sub.graph, path_graph(3));
  EXPECT_EQ(sub.to_parent, s);
}

TEST(InducedSubgraphTest, WholeVertexSetIsACopy) {
  const Graph g = star_graph(4);
  const std::vector<Vertex> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
}

TEST(InducedSubgraphTest, RejectsBadSubsets) {
  const std::vector<Vertex> repeated = {0, 0};
  const std::vector<Vertex> outside = {0, 5};
  EXPECT_THROW(induced_subgraph(path_graph(3), repeated), PreconditionError);
  EXPECT_THROW(induced_subgraph(path_graph(3), outside), PreconditionError);
}

TEST(InducedSubgraphTest, RemoveVerticesKeepsOrder) {
  const std::vector<Vertex> removed = {1};
  const auto rest = remove_vertices(path_graph(4), removed);
  EXPECT_EQ(rest.to_parent, (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(rest.graph, Graph(3, {{1, 2}}));
}

TEST(ComplementTest, Examples) {
  EXPECT_EQ(complement(complete_graph(3)), empty_graph(3));
  EXPECT_EQ(complement(empty_graph(5)), complete_graph(5));
  // a-b-c-d becomes b-d-a-c.
  const Graph p4 = path_graph(4);
  EXPECT_EQ(complement(p4), Graph(4, {{1, 3}, {3, 0}, {0, 2}}));
}

TEST(ComplementTest, Involution) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(i % 12, 0.4, rng);
    const Graph c = complement(g);
    expect_well_formed(c);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(TwinsTest, Examples) {
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(are_twins(k3, 0, 1));
  EXPECT_TRUE(are_twins(k3, 1, 2));
  EXPECT_FALSE(are_twins(path_graph(3), 1, 0));
  EXPECT_TRUE(are_twins(cycle_graph(4), 0, 2));
  EXPECT_THROW(are_twins(k3, 1, 1), PreconditionError);
}

TEST(TwinsTest, Symmetric) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(7, 0.5, rng);
    for (Vertex u = 0; u < 7; ++u) {
      for (Vertex v = u + 1; v < 7; ++v) {
        EXPECT_EQ(are_twins(g, u, v), are_twins(g, v, u));
      }
    }
  }
}

TEST(VerifyTest, Examples) {
  const Graph p4 = path_graph(4);
  const std::vector<Vertex> id = {0, 1, 2, 3};
  EXPECT_TRUE(verify_isomorphism(p4, p4, id));

  const std::vector<Vertex> keep = {0, 1};
  const std::vector<Vertex> swap = {1, 0};
  EXPECT_FALSE(verify_isomorphism(complete_graph(2), empty_graph(2), keep));
  EXPECT_FALSE(verify_isomorphism(complete_graph(2), empty_graph(2), swap));

  const Graph other(3, {{1, 0}, {0, 2}});
  const std::vector<Vertex> f = {1, 0, 2};
  EXPECT_TRUE(verify_isomorphism(path_graph(3), other, f));
}

TEST(VerifyTest, RejectsNonBijections) {
  const std::vector<Vertex> twice = {0, 0};
  const std::vector<Vertex> short_map = {0};
  EXPECT_FALSE(verify_isomorphism(empty_graph(2), empty_graph(2), twice));
  EXPECT_FALSE(verify_isomorphism(empty_graph(2), empty_graph(2), short_map));
}

TEST(VerifyTest, ColoredExamples) {
  const std::vector<Vertex> keep = {0, 1};
  const std::vector<Vertex> swap = {1, 0};
  const ColoredGraph g(path_graph(2), {3, 5});
  EXPECT_TRUE(verify_colored_isomorphism(g, g, keep));

  const ColoredGraph red_red(complete_graph(2), {0, 0});
  const ColoredGraph red_blue(complete_graph(2), {0, 1});
  EXPECT_FALSE(verify_colored_isomorphism(red_red, red_blue, keep));
  EXPECT_FALSE(verify_colored_isomorphism(red_red, red_blue, swap));

  const ColoredGraph ab(empty_graph(2), {0, 1});
  const ColoredGraph ba(empty_graph(2), {1, 0});
  EXPECT_TRUE(verify_colored_isomorphism(ab, ba, swap));
  EXPECT_FALSE(verify_colored_isomorphism(ab, ba, keep));
}

TEST(VerifyTest, IdentityAlwaysVerifies) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(i % 15, 0.3, rng);
    std::vector<Vertex> id(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) id[v] = v;
    EXPECT_TRUE(verify_isomorphism(g, g, id));
  }
}

TEST(VerifyTest, PermutationIsAWitness) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(10, 0.4, rng);
    const auto perm = testing::random_permutation(10, rng);
    const Graph h = permute(g, perm);
    expect_well_formed(h);
    EXPECT_TRUE(verify_isomorphism(g, h, perm));
  }
}

TEST(GraphTest, Builders) {
  EXPECT_EQ(path_graph(4).num_edges(), 3);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5);
  EXPECT_EQ(complete_graph(5).num_edges(), 10);
  EXPECT_EQ(star_graph(3).degree(0), 3);
  const Graph u = disjoint_union(complete_graph(3), path_graph(2));
  EXPECT_EQ(u.num_vertices(), 5);
  EXPECT_TRUE(u.has_edge(3, 4));
  EXPECT_FALSE(u.has_edge(2, 3));
  EXPECT_EQ(connected_components(u).size(), 2u);
}

}  // namespace
}  // namespace distgi
