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
#include "distgi/oracle.h"
#include "distgi/recognition.h"
#include "test_util.h"

namespace distgi {
namespace {

using oracle::brute_force_colored_gi;
using oracle::brute_force_gi;

TEST(OracleTest, Examples) {
  const Graph p4 = path_graph(4);
  const IsoResult self = brute_force_gi(p4, p4);
  ASSERT_TRUE(self.isomorphic);
  EXPECT_TRUE(verify_isomorphism(p4, p4, self.witness));
  EXPECT_FALSE(brute_force_gi(cycle_graph(6),
                              disjoint_union(complete_graph(3), complete_graph(3)))
                   .isomorphic);
  EXPECT_FALSE(brute_force_gi(complete_graph(3), path_graph(3)).isomorphic);
  EXPECT_TRUE(brute_force_gi(Graph(0), Graph(0)).isomorphic);
}

TEST(OracleTest, ColoredExamples) {
  const ColoredGraph g(path_graph(3), {0, 1, 0});
  EXPECT_TRUE(brute_force_colored_gi(g, g).isomorphic);
  EXPECT_FALSE(brute_force_colored_gi(ColoredGraph(complete_graph(2), {0, 1}),
                                      ColoredGraph(complete_graph(2), {0, 0}))
                   .isomorphic);
  EXPECT_FALSE(brute_force_colored_gi(ColoredGraph(path_graph(3), {0, 1, 0}),
                                      ColoredGraph(path_graph(3), {0, 0, 1}))
                   .isomorphic);
}

TEST(OracleTest, SymmetricAndClosedUnderPermutation) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 300; ++i) {
    const int n = i % 9;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Graph h = testing::random_graph(n, 0.5, rng);
    EXPECT_EQ(brute_force_gi(g, h).isomorphic, brute_force_gi(h, g).isomorphic);
    const Graph moved = permute(g, testing::random_permutation(n, rng));
    const IsoResult r = brute_force_gi(g, moved);
    ASSERT_TRUE(r.isomorphic);
    EXPECT_TRUE(verify_isomorphism(g, moved, r.witness));
  }
}

TEST(OracleTest, DeletionSetExamples) {
  const ForbiddenFamily cograph = builtin_family("cograph");
  using Sets = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(oracle::brute_force_deletion_sets(path_graph(4), cograph, 1),
            (Sets{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(oracle::brute_force_deletion_sets(cycle_graph(4), cograph, 2),
            (Sets{{}}));
  EXPECT_TRUE(
      oracle::brute_force_deletion_sets(cycle_graph(5), cograph, 1).empty());
}

TEST(OracleTest, Distances) {
  const ForbiddenFamily cograph = builtin_family("cograph");
  EXPECT_EQ(oracle::brute_force_distance(cycle_graph(5), cograph, 5), 2);
  EXPECT_EQ(oracle::brute_force_distance(cycle_graph(5), cograph, 1),
            std::nullopt);
  EXPECT_EQ(oracle::brute_force_vertex_cover_number(cycle_graph(5), 5), 3);
  EXPECT_EQ(oracle::brute_force_vertex_cover_number(star_graph(4), 5), 1);
  EXPECT_EQ(oracle::brute_force_twin_cover_number(complete_graph(5), 5), 0);
  EXPECT_EQ(oracle::brute_force_twin_cover_number(path_graph(3), 5), 1);
}

TEST(OracleTest, ContainsPattern) {
  EXPECT_TRUE(oracle::contains_pattern(path_graph(5), path_graph(4)));
  EXPECT_FALSE(oracle::contains_pattern(cycle_graph(4), path_graph(4)));
  EXPECT_FALSE(oracle::contains_pattern(path_graph(2), path_graph(4)));
}

}  // namespace
}  // namespace distgi
