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

#include <cmath>

#include "linkwl/generators.hpp"
#include "linkwl/linkpred.hpp"
#include "linkwl/random.hpp"

namespace linkwl {
namespace {

Graph k2_k2() { return Graph::from_edges(4, std::vector<Link>{{0, 1}, {2, 3}}); }

TEST(HeuristicsTest, MaskedTriangle) {
  const Graph g = gen::complete(3).without_edge({0, 1});
  EXPECT_EQ(heuristic_cn(g, 0, 1), 1);
  EXPECT_EQ(heuristic_pa(g, 0, 1), 1);
  EXPECT_DOUBLE_EQ(heuristic_ra(g, 0, 1), 0.5);
}

TEST(HeuristicsTest, CrossComponentPair) {
  const Graph g = k2_k2();
  EXPECT_EQ(heuristic_cn(g, 0, 2), 0);
  EXPECT_EQ(heuristic_ra(g, 0, 2), 0);
}

TEST(HeuristicsTest, StarLeaves) {
  const Graph g = gen::star(4);
  EXPECT_EQ(heuristic_cn(g, 1, 2), 1);
  EXPECT_EQ(heuristic_pa(g, 1, 2), 1);
  EXPECT_DOUBLE_EQ(heuristic_ra(g, 1, 2), 0.25);
}

TEST(HeuristicsTest, RejectsEqualEndpoints) {
  EXPECT_THROW(heuristic_cn(gen::cycle(4), 1, 1), std::invalid_argument);
  EXPECT_THROW(heuristic_pa(gen::cycle(4), 1, 1), std::invalid_argument);
  EXPECT_THROW(heuristic_ra(gen::cycle(4), 1, 1), std::invalid_argument);
}

TEST(FeaturizeTest, TriangleCommonNeighborFeature) {
  const FeatureConfig config{.width = 4};
  const auto f = featurize(TestKind::FWL2_Local, gen::complete(3), {0, 1}, config);
  ASSERT_EQ(f.size(), feature_dimension(config));
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[0], static_cast<double>(cn_from_fwl2_signature(gen::complete(3), {0, 1})));
}

TEST(FeaturizeTest, CommonNeighborFeatureMatchesCountOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = gen::erdos_renyi(12, 0.4, rng);
    for (NodeId p = 0; p < 12; ++p) {
      for (NodeId q = 0; q < 12; ++q) {
        if (p == q) continue;
        const auto f = featurize(TestKind::FWL2_Local, g, {p, q}, {});
        EXPECT_EQ(f[0], heuristic_cn(g, p, q));
      }
    }
  }
}

TEST(FeaturizeTest, NonFolkloreKindsZeroFillCommonNeighborSlot) {
  for (TestKind kind : {TestKind::WL1, TestKind::WL2_Local, TestKind::WL2}) {
    EXPECT_EQ(featurize(kind, gen::complete(4), {0, 1}, {})[0], 0) << to_string(kind);
  }
}

TEST(FeaturizeTest, VertexTransitiveCycleUsesOneBucket) {
  const FeatureConfig config{.width = 4};
  for (NodeId q : {1u, 2u, 3u}) {
    const auto f = featurize(TestKind::WL1, gen::cycle(6), {0, q}, config);
    ASSERT_EQ(f.size(), 1 + 2 * config.width);
    for (std::size_t side = 0; side < 2; ++side) {
      int nonzero = 0;
      for (std::size_t b = 0; b < config.width; ++b) nonzero += f[1 + side * config.width + b] != 0 ? 1 : 0;
      EXPECT_EQ(nonzero, 1) << "q=" << q << " side " << side;
    }
  }
}

TEST(FeaturizeTest, NodeKindsIgnoreNeighborhoodOverlap) {
  // Both graphs are 2-regular; (0,2) in C4 shares both neighbors, (0,4) in C8
  // shares none.
  EXPECT_EQ(featurize(TestKind::WL1, gen::cycle(4), {0, 2}, {}),
            featurize(TestKind::WL1, gen::cycle(8), {0, 4}, {}));
  EXPECT_NE(featurize(TestKind::FWL2_Local, gen::cycle(4), {0, 2}, {}),
            featurize(TestKind::FWL2_Local, gen::cycle(8), {0, 4}, {}));
}

TEST(FeaturizeTest, AutomorphicTargetsGetEqualFeatures) {
  const Graph c8 = gen::cycle(8);
  const FeatureConfig config{.width = 3, .heuristics = true};
  for (TestKind kind : {TestKind::WL1, TestKind::WL1_Label01, TestKind::WL2_Local,
                        TestKind::FWL2_Local, TestKind::WL2, TestKind::FWL2}) {
    // Rotation by 3 and the reflection v -> -v map (0,2) to these.
    EXPECT_EQ(featurize(kind, c8, {0, 2}, config), featurize(kind, c8, {3, 5}, config))
        << to_string(kind);
    EXPECT_EQ(featurize(kind, c8, {0, 2}, config), featurize(kind, c8, {0, 6}, config))
        << to_string(kind);
  }
}

TEST(FeaturizeTest, IgnoresTargetEdge) {
  const Graph g = gen::watts_strogatz(30, 4, 0.2, 3);
  for (const Link e : g.edges()) {
    for (TestKind kind : {TestKind::WL1, TestKind::WL2_Local, TestKind::FWL2_Local}) {
      EXPECT_EQ(featurize(kind, g, e, {.heuristics = true}),
                featurize(kind, g.without_edge(e), e, {.heuristics = true}));
    }
  }
}

TEST(FeaturizeTest, Errors) {
  EXPECT_THROW(featurize(TestKind::WL1, gen::cycle(5), {0, 1}, {.width = 0}), std::invalid_argument);
  EXPECT_THROW(featurize(TestKind::WL1, gen::cycle(5), {0, 0}, {}), std::invalid_argument);
  EXPECT_THROW(featurize(TestKind::WL1, gen::cycle(5), {0, 9}, {}), std::out_of_range);
  EXPECT_THROW(featurize(TestKind::FWL2, gen::cycle(40), {0, 1}, {.limits = {.max_dense_pairs = 1000}}),
               MemoryGateError);
}

TEST(FeaturizeTest, ParallelMatchesSerial) {
  const Graph g = gen::watts_strogatz(40, 4, 0.1, 1);
  const auto targets = g.edges();
  EXPECT_EQ(featurize_all(TestKind::FWL2_Local, g, targets, {}, 1),
            featurize_all(TestKind::FWL2_Local, g, targets, {}, 4));
}

TEST(ScorerTest, SeparableLossDecreases) {
  const std::vector<std::vector<double>> x = {{-2}, {-1}, {-0.5}, {0.5}, {1}, {2}};
  const std::vector<int> y = {0, 0, 0, 1, 1, 1};
  const LinearScorer s = train_scorer(x, y);
  ASSERT_EQ(s.loss_history.size(), 500u);
  for (std::size_t i = 1; i < s.loss_history.size(); ++i) {
    EXPECT_LT(s.loss_history[i], s.loss_history[i - 1]) << "epoch " << i;
  }
  EXPECT_GT(s.score(std::vector<double>{1.0}), s.score(std::vector<double>{-1.0}));
}

TEST(ScorerTest, ConstantFeaturesGivePrior) {
  const std::vector<std::vector<double>> x(8, std::vector<double>{3, 3});
  const std::vector<int> y = {1, 0, 0, 0, 1, 0, 0, 0};
  const LinearScorer s = train_scorer(x, y);
  EXPECT_EQ(s.weights, (std::vector<double>{0, 0}));
  EXPECT_NEAR(s.score(std::vector<double>{3, 3}), std::log(2.0 / 6.0), 0.05);
}

TEST(ScorerTest, XorPatternIsNearChance) {
  const std::vector<std::vector<double>> x = {{0}, {1}, {2}, {3}, {0}, {1}, {2}, {3}};
  const std::vector<int> y = {0, 1, 1, 0, 0, 1, 1, 0};
  const LinearScorer s = train_scorer(x, y);
  std::vector<double> scores;
  for (const auto& row : x) scores.push_back(s.score(row));
  EXPECT_NEAR(auc(scores, y), 0.5, 0.1);
}

TEST(ScorerTest, Errors) {
  EXPECT_THROW(train_scorer({{1}, {2}}, std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(train_scorer({{1}, {NAN}}, std::vector<int>{0, 1}), std::invalid_argument);
  EXPECT_THROW(train_scorer({{1}}, std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(train_scorer({{1}, {2, 3}}, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(AucTest, Examples) {
  const std::vector<int> y = {1, 1, 0, 0};
  EXPECT_EQ(auc(std::vector<double>{2, 3, 0, 1}, y), 1.0);
  EXPECT_EQ(auc(std::vector<double>{0, 1, 2, 3}, y), 0.0);
  EXPECT_EQ(auc(std::vector<double>{1, 1}, std::vector<int>{1, 0}), 0.5);
  EXPECT_THROW(auc(std::vector<double>{1, 2}, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(AucTest, InvariantUnderIncreasingTransform) {
  Rng rng(5);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 200; ++i) {
    scores.push_back(std::floor(rng.unit() * 20));
    labels.push_back(rng.bernoulli(0.4) ? 1 : 0);
  }
  std::vector<double> mapped;
  for (double s : scores) mapped.push_back(std::exp(s / 3) - 7);
  EXPECT_DOUBLE_EQ(auc(scores, labels), auc(mapped, labels));
}

TEST(BenchmarkTest, ErdosRenyiHasLittleSignal) {
  Rng rng(11);
  const Graph g = gen::erdos_renyi(200, 0.03, rng);
  for (TestKind kind : {TestKind::WL1, TestKind::WL2_Local, TestKind::FWL2_Local}) {
    const BenchmarkResult r = benchmark(g, kind, 1);
    EXPECT_GE(r.test_auc, 0.35) << to_string(kind);
    EXPECT_LE(r.test_auc, 0.75) << to_string(kind);
  }
}

TEST(BenchmarkTest, Deterministic) {
  const Graph g = gen::watts_strogatz(100, 4, 0.1, 2);
  const BenchmarkResult a = benchmark(g, TestKind::FWL2_Local, 9);
  const BenchmarkResult b = benchmark(g, TestKind::FWL2_Local, 9, {.threads = 3});
  EXPECT_EQ(to_json(a, false), to_json(b, false));
  EXPECT_EQ(a.n, 100u);
  EXPECT_EQ(a.m, 200u);
}

TEST(BenchmarkTest, JsonFields) {
  const BenchmarkResult r = benchmark(gen::watts_strogatz(60, 4, 0.1, 2), TestKind::WL1, 4, {}, "ws");
  const std::string with = to_json(r, true);
  const std::string without = to_json(r, false);
  EXPECT_NE(with.find("\"featurize_seconds\""), std::string::npos);
  EXPECT_EQ(without.find("featurize_seconds"), std::string::npos);
  EXPECT_EQ(without.rfind("{\"dataset\":\"ws\",\"kind\":\"WL1\",\"split_seed\":4,", 0), 0u);
}

TEST(BenchmarkTest, PropagatesSplitErrors) {
  EXPECT_THROW(benchmark(gen::path(4), TestKind::WL1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace linkwl
