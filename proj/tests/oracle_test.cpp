// Copyright 2026 The linkwl Authors
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

#include <gtest/gtest.h>

#include <numeric>

#include "linkwl/generators.hpp"
#include "linkwl/lockstep.hpp"
#include "linkwl/random.hpp"
#include "linkwl/refinement.hpp"
#include "linkwl/unroll.hpp"

namespace linkwl {
namespace {

TEST(UnrollTest, OneWlTreeOfK2) {
  UnrollTree t = unroll(TreeKind::kB, gen::complete(2), {0, 1}, 1);
  ASSERT_EQ(t.root->branches.size(), 2u);
  EXPECT_EQ(t.root->branches[0].size(), 1u);
  EXPECT_EQ(t.root->branches[1].size(), 1u);
  EXPECT_EQ(t.root->branches[0][0]->label, std::vector<std::uint32_t>{0});
}

TEST(UnrollTest, LocalTreeFollowsObservedEdges) {
  // Path 0-1-2 with target (0,1): left children (0,i) for i in N(0) = {1};
  // right children (j,1) for j in N(1) = {0, 2}.
  UnrollTree t = unroll(TreeKind::kA, gen::path(3), {0, 1}, 1);
  ASSERT_EQ(t.root->branches.size(), 2u);
  EXPECT_EQ(t.root->branches[0].size(), 1u);
  EXPECT_EQ(t.root->branches[1].size(), 2u);
  EXPECT_EQ(t.root->label.size(), 2u);
}

TEST(UnrollTest, FolkloreTreeOfTriangle) {
  UnrollTree t = unroll(TreeKind::kD, gen::complete(3), {0, 1}, 1);
  ASSERT_EQ(t.root->branches.size(), 1u);
  const auto& children = t.root->branches[0];
  ASSERT_EQ(children.size(), 3u);
  std::size_t both_edges = 0;
  for (const auto& c : children) {
    ASSERT_EQ(c->label.size(), 7u);
    both_edges += c->label[3] == 1 && c->label[4] == 1 ? 1 : 0;
  }
  EXPECT_EQ(both_edges, 1u);
}

TEST(UnrollTest, DepthChecks) {
  EXPECT_THROW(unroll(TreeKind::kB, gen::path(3), {0, 1}, -1), std::invalid_argument);
  EXPECT_THROW(unroll(TreeKind::kC, gen::path(9), {0, 1}, 5), std::invalid_argument);
  EXPECT_NO_THROW(unroll(TreeKind::kB, gen::path(9), {0, 1}, 5));
  EXPECT_THROW(unroll(TreeKind::kB, gen::path(3), {0, 0}, 1), std::invalid_argument);
}

TEST(TreeEqualTest, IdenticalAndPermuted) {
  Graph g = gen::path(4);
  UnrollTree a = unroll(TreeKind::kB, g, {0, 3}, 1);
  EXPECT_TRUE(tree_equal(a, unroll(TreeKind::kB, g, {0, 3}, 1)));
  std::vector<NodeId> perm = {3, 1, 0, 2};
  EXPECT_TRUE(tree_equal(a, unroll(TreeKind::kB, permute(g, perm), {3, 2}, 1)));
}

TEST(TreeEqualTest, TwoWlSeesGraphSize) {
  auto [two, offset] = disjoint_union(gen::complete(2), gen::complete(2));
  UnrollTree a = unroll(TreeKind::kC, gen::complete(2), {0, 1}, 1);
  UnrollTree b = unroll(TreeKind::kC, two, {0, 1}, 1);
  EXPECT_EQ(a.root->branches[0].size(), 2u);
  EXPECT_EQ(b.root->branches[0].size(), 4u);
  EXPECT_FALSE(tree_equal(a, b));
}

TEST(TreeEqualTest, MismatchThrows) {
  Graph g = gen::path(3);
  EXPECT_THROW(tree_equal(unroll(TreeKind::kB, g, {0, 1}, 1), unroll(TreeKind::kA, g, {0, 1}, 1)),
               std::invalid_argument);
  EXPECT_THROW(tree_equal(unroll(TreeKind::kB, g, {0, 1}, 1), unroll(TreeKind::kB, g, {0, 1}, 2)),
               std::invalid_argument);
}

TEST(TreeEqualTest, ChildOrderDoesNotMatter) {
  // Same star with the leaf labels listed in different node orders.
  std::vector<Link> edges = {{0, 1}, {0, 2}, {0, 3}};
  Graph a = Graph::from_edges(4, edges, {0, 1, 2, 3});
  Graph b = Graph::from_edges(4, edges, {0, 3, 1, 2});
  EXPECT_TRUE(tree_equal(unroll(TreeKind::kB, a, {0, 1}, 2), unroll(TreeKind::kB, b, {0, 2}, 2)));
}

TEST(TreeCatalogTest, AssignsDenseIds) {
  TreeCatalog catalog;
  Graph g = gen::path(4);
  EXPECT_EQ(catalog.classify(unroll(TreeKind::kB, g, {0, 1}, 2)), 0u);
  EXPECT_EQ(catalog.classify(unroll(TreeKind::kB, g, {3, 2}, 2)), 0u);
  EXPECT_EQ(catalog.classify(unroll(TreeKind::kB, g, {1, 2}, 2)), 1u);
  EXPECT_EQ(catalog.size(), 2u);
}

TEST(LinkIsomorphicTest, Examples) {
  Graph c4 = gen::cycle(4);
  EXPECT_TRUE(link_isomorphic(c4, {0, 1}, c4, {1, 2}));
  EXPECT_FALSE(link_isomorphic(c4, {0, 1}, c4, {0, 2}));
  Graph p4 = gen::path(4);
  EXPECT_FALSE(link_isomorphic(p4, {0, 3}, p4, {0, 2}));
  EXPECT_TRUE(link_isomorphic(p4, {0, 3}, p4, {3, 0}));
  EXPECT_FALSE(link_isomorphic(p4, {0, 1}, p4, {1, 0}));
}

TEST(LinkIsomorphicTest, MaskedModeIgnoresTargetEdge) {
  Graph c4 = gen::cycle(4);
  EXPECT_FALSE(link_isomorphic(c4, {0, 1}, c4, {0, 2}, {.masked = false}));
  // C4 minus (0,1) is a path 1-2-3-0 with endpoints 0,1; (0,2) in C4 stays a
  // distance-2 pair, so the graphs still differ.
  EXPECT_FALSE(link_isomorphic(c4, {0, 1}, c4, {0, 2}, {.masked = true}));
  Graph p4 = gen::path(4);
  EXPECT_TRUE(link_isomorphic(c4, {0, 1}, p4, {0, 3}, {.masked = true}));
}

TEST(LinkIsomorphicTest, SizeBound) {
  EXPECT_THROW(link_isomorphic(gen::cycle(10), {0, 1}, gen::cycle(10), {0, 1}),
               std::length_error);
  EXPECT_TRUE(link_isomorphic(gen::cycle(10), {0, 1}, gen::cycle(10), {4, 5}, {.max_nodes = 10}));
}

// Pairwise agreement of tree equality with color equality at every depth.
TEST(CorrespondenceTest, TreesTrackColors) {
  Rng rng(43);
  for (TreeKind tk : {TreeKind::kA, TreeKind::kB, TreeKind::kC, TreeKind::kD}) {
    const TestKind kind = tree_test_kind(tk);
    for (int trial = 0; trial < 15; ++trial) {
      Graph g1 = gen::erdos_renyi(6, 0.4, rng);
      Graph g2 = gen::erdos_renyi(6, 0.4, rng);
      const Link e1{0, 1};
      const Link e2{static_cast<NodeId>(rng.below(3)), static_cast<NodeId>(3 + rng.below(3))};
      std::vector<RefinementSession> sessions;
      sessions.emplace_back(kind, g1, e1);
      sessions.emplace_back(kind, g2, e2);
      Lockstep lockstep(std::move(sessions));
      for (int depth = 0; depth <= 3; ++depth) {
        if (depth > 0) lockstep.step();
        const bool same_color = lockstep.session(0).ordered_link_color(lockstep.colors(0), e1) ==
                                lockstep.session(1).ordered_link_color(lockstep.colors(1), e2);
        const bool same_tree = tree_equal(unroll(tk, g1.without_edge(e1), e1, depth),
                                          unroll(tk, g2.without_edge(e2), e2, depth));
        EXPECT_EQ(same_color, same_tree) << to_string(tk) << " trial " << trial << " depth " << depth;
      }
    }
  }
}

}  // namespace
}  // namespace linkwl
