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

#include <algorithm>
#include <set>

#include "linkwl/generators.hpp"
#include "linkwl/graph.hpp"
#include "linkwl/graph_io.hpp"
#include "linkwl/random.hpp"
#include "linkwl/split.hpp"

namespace linkwl {
namespace {

TEST(GraphTest, FromEdgesCollapsesDuplicates) {
  std::vector<Link> edges = {{0, 1}, {1, 0}, {1, 2}, {0, 1}};
  Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ((std::vector<Link>{{0, 1}, {1, 2}}), g.edges());
}

TEST(GraphTest, RejectsBadInput) {
  std::vector<Link> loop = {{1, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop), std::invalid_argument);
  std::vector<Link> far = {{0, 5}};
  EXPECT_THROW(Graph::from_edges(3, far), std::invalid_argument);
  std::vector<Link> none;
  EXPECT_THROW(Graph::from_edges(3, none, {1, 2}), std::invalid_argument);
}

TEST(GraphTest, SlotsIndexOrientedEdges) {
  Graph g = gen::cycle(4);
  ASSERT_EQ(g.slot_count(), 8u);
  for (NodeId v = 0; v < 4; ++v) {
    for (std::size_t s = g.slot_begin(v); s < g.slot_end(v); ++s) {
      EXPECT_EQ(g.slot_of(v, g.slot_target(s)), s);
    }
  }
  EXPECT_FALSE(g.slot_of(0, 2).has_value());
}

TEST(GraphTest, PermuteMovesEdgesAndLabels) {
  std::vector<Link> edges = {{0, 1}};
  Graph g = Graph::from_edges(3, edges, {7, 8, 9});
  std::vector<NodeId> perm = {2, 0, 1};
  Graph h = permute(g, perm);
  EXPECT_TRUE(h.has_edge(2, 0));
  EXPECT_EQ(h.label(2), 7u);
  EXPECT_EQ(h.label(0), 8u);
  std::vector<NodeId> bad = {0, 0, 1};
  EXPECT_THROW(permute(g, bad), std::invalid_argument);
}

TEST(GraphTest, DisjointUnionOffsetsSecondGraph) {
  auto [u, offset] = disjoint_union(gen::complete(2), gen::path(3));
  EXPECT_EQ(offset, 2u);
  EXPECT_EQ(u.node_count(), 5u);
  EXPECT_TRUE(u.has_edge(0, 1));
  EXPECT_TRUE(u.has_edge(2, 3));
  EXPECT_TRUE(u.has_edge(3, 4));
  EXPECT_FALSE(u.has_edge(1, 2));
}

TEST(GraphTest, Label01MarksTargets) {
  Graph g = label01(gen::path(4), {1, 3});
  EXPECT_EQ((std::vector<Label>{0, 1, 0, 1}),
            std::vector<Label>(g.labels().begin(), g.labels().end()));
  EXPECT_THROW(label01(gen::path(4), {2, 2}), std::invalid_argument);
  EXPECT_THROW(label01(gen::path(4), {0, 9}), std::invalid_argument);
}

TEST(GraphTest, WithoutEdgeKeepsNodes) {
  Graph g = gen::complete(3).without_edge({2, 0});
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphIoTest, RoundTripPreservesIsolatedNodes) {
  std::vector<Link> edges = {{0, 1}};
  Graph g = Graph::from_edges(4, edges);
  Graph back = load_edgelist(write_edgelist(g));
  EXPECT_EQ(back, g);
}

TEST(GraphIoTest, ParseErrorsCarryLineNumbers) {
  try {
    load_edgelist("0 1\n# note\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_edgelist("0 1 2\n"), ParseError);
  EXPECT_THROW(load_edgelist("3 3\n"), ParseError);
  std::vector<Label> labels = {0, 0};
  EXPECT_THROW(load_edgelist("0 2\n", labels), ParseError);
}

TEST(GraphIoTest, LabelsApply) {
  auto labels = load_labels("1\n\n2\n0\n");
  Graph g = load_edgelist("0 1\n", labels);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.label(1), 2u);
  EXPECT_THROW(load_labels("a\n"), ParseError);
}

TEST(RngTest, DeterministicAndBounded) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
    const double u = a.unit();
    EXPECT_EQ(u, b.unit());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(GeneratorTest, Shapes) {
  EXPECT_EQ(gen::cycle(6).edge_count(), 6u);
  EXPECT_EQ(gen::complete(5).edge_count(), 10u);
  EXPECT_EQ(gen::star(4).degree(0), 4u);
  EXPECT_EQ(gen::ring_lattice(10, 4).edge_count(), 20u);
  Rng rng(3);
  Graph g = gen::gnm(20, 30, rng);
  EXPECT_EQ(g.edge_count(), 30u);
  EXPECT_THROW(gen::gnm(4, 7, rng), std::invalid_argument);
}

TEST(GeneratorTest, WattsStrogatzKeepsEdgeCountAndSeed) {
  Graph a = gen::watts_strogatz(50, 4, 0.3, 11);
  Graph b = gen::watts_strogatz(50, 4, 0.3, 11);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_count(), 100u);
  EXPECT_NE(a, gen::ring_lattice(50, 4));
}

TEST(SplitTest, PartitionsEdgesAndSamplesNonEdges) {
  Graph g = gen::watts_strogatz(100, 4, 0.1, 2);
  LinkSplit s = split_links(g, 0.10, 0.05, 9);
  EXPECT_EQ(s.test_pos.size(), 20u);
  EXPECT_EQ(s.val_pos.size(), 10u);
  EXPECT_EQ(s.test_neg.size(), s.test_pos.size());
  EXPECT_EQ(s.val_neg.size(), s.val_pos.size());
  EXPECT_EQ(s.train_graph.edge_count(), g.edge_count() - 30);
  std::set<Link> seen;
  for (const auto* list : {&s.test_pos, &s.val_pos}) {
    for (const Link& e : *list) {
      EXPECT_TRUE(g.has_edge(e.p, e.q));
      EXPECT_FALSE(s.train_graph.has_edge(e.p, e.q));
      EXPECT_TRUE(seen.insert(e).second);
    }
  }
  for (const auto* list : {&s.test_neg, &s.val_neg}) {
    for (const Link& e : *list) {
      EXPECT_LT(e.p, e.q);
      EXPECT_FALSE(g.has_edge(e.p, e.q));
      EXPECT_TRUE(seen.insert(e).second);
    }
  }
  LinkSplit again = split_links(g, 0.10, 0.05, 9);
  EXPECT_EQ(again.test_pos, s.test_pos);
  EXPECT_EQ(again.val_neg, s.val_neg);
}

TEST(SplitTest, RejectsBadFractions) {
  Graph g = gen::cycle(30);
  EXPECT_THROW(split_links(g, 0.0, 0.1, 1), std::invalid_argument);
  EXPECT_THROW(split_links(g, 0.6, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(split_links(gen::cycle(4), 0.1, 0.05, 1), std::invalid_argument);
  EXPECT_THROW(split_links(gen::complete(6), 0.2, 0.1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace linkwl
