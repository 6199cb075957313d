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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "distgi/deletion.h"
#include "distgi/graph.h"
#include "distgi/oracle.h"
#include "distgi/recognition.h"
#include "test_util.h"

namespace distgi {
namespace {

using Sets = std::vector<std::vector<Vertex>>;

Sets vertices_of(const std::vector<DeletionSet>& sets) {
  Sets out;
  for (const auto& s : sets) out.push_back(s.vertices);
  return out;
}

std::int64_t tree_bound(int d, int k) {
  std::int64_t total = 0, power = 1;
  for (int i = 0; i <= k; ++i, power *= d) total += power;
  return total;
}

Graph k4_with_pendant() {
  // Clique on 0..3, pendant 4 attached to 0.
  std::vector<Edge> edges = complete_graph(4).edges();
  edges.emplace_back(0, 4);
  return Graph(5, edges);
}

TEST(OccurrencesTest, Examples) {
  const ForbiddenFamily cograph = builtin_family("cograph");
  EXPECT_EQ(enumerate_occurrences(path_graph(4), cograph),
            (OccurrenceList{{0, 1, 2, 3}}));
  EXPECT_TRUE(enumerate_occurrences(cycle_graph(4), cograph).empty());
  EXPECT_EQ(enumerate_occurrences(path_graph(5), cograph),
            (OccurrenceList{{0, 1, 2, 3}, {1, 2, 3, 4}}));
}

TEST(DeletionSetsTest, Examples) {
  const ForbiddenFamily cograph = builtin_family("cograph");
  EXPECT_EQ(vertices_of(enumerate_deletion_sets(path_graph(4), cograph, 1)),
            (Sets{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(vertices_of(enumerate_deletion_sets(complete_graph(5), cograph, 2)),
            (Sets{{}}));
  EXPECT_TRUE(enumerate_deletion_sets(cycle_graph(5), cograph, 1).empty());
  EXPECT_EQ(enumerate_deletion_sets(path_graph(4), cograph, 1)[0].family,
            "cograph");
  EXPECT_THROW(enumerate_deletion_sets(path_graph(4), cograph, -1),
               PreconditionError);
}

TEST(DeletionSetsTest, KZeroSucceedsIffMember) {
  const ForbiddenFamily cluster = builtin_family("cluster");
  EXPECT_EQ(vertices_of(enumerate_deletion_sets(complete_graph(3), cluster, 0)),
            (Sets{{}}));
  EXPECT_TRUE(enumerate_deletion_sets(path_graph(3), cluster, 0).empty());
}

TEST(MinimumDeletionSetTest, Examples) {
  const ForbiddenFamily cograph = builtin_family("cograph");
  const auto c5 = minimum_deletion_set(cycle_graph(5), cograph, 2);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->size(), 2);
  EXPECT_TRUE(is_member(remove_vertices(cycle_graph(5), c5->vertices).graph,
                        cograph));
  // First 2-set in (size, lex) order that works: {0,1} leaves P3, a cograph.
  EXPECT_EQ(c5->vertices, oracle::brute_force_deletion_sets(cycle_graph(5),
                                                            cograph, 2)
                              .front());
  const auto member = minimum_deletion_set(complete_graph(4), cograph, 3);
  ASSERT_TRUE(member.has_value());
  EXPECT_TRUE(member->vertices.empty());
  EXPECT_FALSE(minimum_deletion_set(cycle_graph(5), cograph, 1).has_value());
}

TEST(DeletionSetsTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(61);
  for (const char* name : {"cograph", "cluster", "edgeless", "threshold"}) {
    const ForbiddenFamily fam = builtin_family(name);
    const ForbiddenFamily scan = make_family(fam.name, fam.patterns);
    for (int i = 0; i < 150; ++i) {
      const int n = 1 + i % 9;
      const int k = i % 4;
      const Graph g = testing::random_graph(n, 0.2 + 0.6 * (i % 5) / 4.0, rng);
      const Sets expected = oracle::brute_force_deletion_sets(g, fam, k);
      ASSERT_EQ(vertices_of(enumerate_deletion_sets(g, fam, k)), expected)
          << name << " k=" << k << " " << to_string(g);
      ASSERT_EQ(vertices_of(enumerate_deletion_sets(g, scan, k)), expected);
    }
  }
}

TEST(DeletionSetsTest, HitsEveryOccurrenceAndRespectsNodeBound) {
  std::mt19937_64 rng(62);
  for (const char* name : {"cograph", "cluster", "threshold"}) {
    const ForbiddenFamily fam = builtin_family(name);
    for (int i = 0; i < 100; ++i) {
      const Graph g = testing::random_graph(9, 0.5, rng);
      const int k = 1 + i % 3;
      SearchStats stats;
      const auto sets = enumerate_deletion_sets(g, fam, k, &stats);
      EXPECT_LE(stats.nodes, tree_bound(fam.d, k));
      const auto occurrences = enumerate_occurrences(g, fam);
      for (const auto& s : sets) {
        ASSERT_TRUE(std::is_sorted(s.vertices.begin(), s.vertices.end()));
        for (const auto& occ : occurrences) {
          const bool hit = std::any_of(occ.begin(), occ.end(), [&](Vertex v) {
            return std::binary_search(s.vertices.begin(), s.vertices.end(), v);
          });
          ASSERT_TRUE(hit);
        }
      }
      for (size_t j = 1; j < sets.size(); ++j) {
        ASSERT_TRUE(set_order_less(sets[j - 1].vertices, sets[j].vertices));
      }
    }
  }
}

TEST(BranchStringTest, FollowsFirstUnhitOccurrence) {
  const OccurrenceList occ = {{0, 1, 2, 3}, {1, 2, 3, 4}};
  EXPECT_EQ(follow_branch_string(occ, {2}), (std::vector<Vertex>{1}));
  EXPECT_EQ(follow_branch_string(occ, {1, 4}), (std::vector<Vertex>{0, 4}));
  EXPECT_FALSE(follow_branch_string(occ, {1}).has_value());
  EXPECT_FALSE(follow_branch_string(occ, {5}).has_value());
  EXPECT_EQ(follow_branch_string({}, {}), (std::vector<Vertex>{}));
}

TEST(BranchStringTest, UnionOverStringsCoversMinimalSets) {
  std::mt19937_64 rng(63);
  const ForbiddenFamily fam = builtin_family("cograph");
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::random_graph(7, 0.5, rng);
    const int k = 2;
    const auto occ = enumerate_occurrences(g, fam);
    std::vector<std::vector<Vertex>> found;
    for (int a = 1; a <= fam.d; ++a) {
      for (int b = 1; b <= fam.d; ++b) {
        if (auto s = follow_branch_string(occ, {a, b})) found.push_back(*s);
      }
    }
    if (occ.empty()) found.push_back({});
    for (const auto& s : vertices_of(enumerate_deletion_sets(g, fam, k))) {
      ASSERT_NE(std::find(found.begin(), found.end(), s), found.end());
    }
  }
}

TEST(BussKernelTest, Examples) {
  const auto star = buss_kernel(star_graph(5), 2);
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(star->high, (std::vector<Vertex>{0}));
  EXPECT_TRUE(star->low.empty());
  EXPECT_EQ(star->b, 1);
  const auto empty = buss_kernel(Graph(6), 3);
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->high.empty());
  EXPECT_TRUE(empty->low.empty());
  EXPECT_FALSE(buss_kernel(complete_graph(5), 2).has_value());
}

TEST(BussKernelTest, Soundness) {
  std::mt19937_64 rng(64);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + i % 11;
    const int k = i % 5;
    const Graph g = testing::random_graph(n, 0.05 + 0.4 * (i % 7) / 6.0, rng);
    const auto vc = oracle::brute_force_vertex_cover_number(g, n);
    const auto kernel = buss_kernel(g, k);
    if (!kernel) {
      ASSERT_GT(*vc, k) << to_string(g);
      continue;
    }
    ASSERT_LE(static_cast<int>(kernel->low.size()),
              (k - kernel->b) * (k + 1));
    const auto covers = enumerate_minimal_vertex_covers(g, k);
    ASSERT_EQ(!covers.empty(), *vc <= k);
  }
}

TEST(VertexCoverTest, Examples) {
  EXPECT_EQ(vertices_of(enumerate_minimal_vertex_covers(path_graph(3), 2)),
            (Sets{{1}, {0, 2}}));
  EXPECT_EQ(vertices_of(enumerate_minimal_vertex_covers(complete_graph(2), 1)),
            (Sets{{0}, {1}}));
  EXPECT_EQ(vertices_of(enumerate_minimal_vertex_covers(cycle_graph(4), 2)),
            (Sets{{0, 2}, {1, 3}}));
  EXPECT_EQ(enumerate_minimal_vertex_covers(path_graph(3), 2)[0].family,
            "vertex-cover");
}

TEST(VertexCoverTest, MatchesEdgelessFamilySearchAndTwoToTheK) {
  std::mt19937_64 rng(65);
  const ForbiddenFamily edgeless = builtin_family("edgeless");
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 10;
    const int k = i % 5;
    const Graph g = testing::random_graph(n, 0.3, rng);
    const auto covers = enumerate_minimal_vertex_covers(g, k);
    EXPECT_EQ(vertices_of(covers),
              vertices_of(enumerate_deletion_sets(g, edgeless, k)));
    EXPECT_LE(covers.size(), std::size_t{1} << k);
    for (const auto& c : covers) ASSERT_TRUE(is_vertex_cover(g, c.vertices));
  }
}

TEST(TwinCoverTest, Examples) {
  EXPECT_EQ(vertices_of(enumerate_twin_covers(k4_with_pendant(), 1)),
            (Sets{{0}}));
  EXPECT_EQ(vertices_of(enumerate_twin_covers(complete_graph(5), 0)),
            (Sets{{}}));
  EXPECT_EQ(vertices_of(enumerate_twin_covers(path_graph(3), 1)), (Sets{{1}}));
  EXPECT_EQ(remove_twin_edges(k4_with_pendant()),
            Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST(TwinCoverTest, RemainderIsClusterAndMatchesBruteForceSize) {
  std::mt19937_64 rng(66);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 10;
    const int k = i % 4;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto covers = enumerate_twin_covers(g, k);
    for (const auto& c : covers) {
      ASSERT_TRUE(is_cluster_graph(remove_vertices(g, c.vertices).graph));
    }
    const auto tc = oracle::brute_force_twin_cover_number(g, k);
    ASSERT_EQ(!covers.empty(), tc.has_value()) << to_string(g);
    if (tc) {
      ASSERT_EQ(covers.front().size(), *tc);
    }
  }
}

}  // namespace
}  // namespace distgi
