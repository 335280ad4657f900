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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/refinement.hpp"
#include "linkwl/test_kind.hpp"

namespace linkwl {

// Classical heuristics on `g` as given; callers remove the pair's own edge
// first. Throw std::invalid_argument when p == q.
double heuristic_cn(const Graph& g, NodeId p, NodeId q);
double heuristic_pa(const Graph& g, NodeId p, NodeId q);
double heuristic_ra(const Graph& g, NodeId p, NodeId q);

struct FeatureConfig {
  std::size_t depth = 2;  // refinement rounds behind the histogram colors
  std::size_t width = 8;  // histogram buckets
  bool heuristics = false;
  Limits limits{};
};

// Layout: [cn, pa, ra] when heuristics are on, then the count of first-round
// (edge, edge) folklore entries (0 for non-folklore kinds), then two
// `width`-bucket histograms, one over the units around p and one over the
// units around q.
std::size_t feature_dimension(const FeatureConfig& config);

// Features of `target` on `g_train` with the target masked. Units around p
// and q are N(p) and N(q) for node kinds, (p, v) and (u, q) over v in N(p),
// u in N(q) for WL2_Local, and (p, u) and (u, q) over u in N(p) u N(q) for
// the other pair kinds. Classes are ranked over both sides pooled, by size,
// then p-side count, then first occurrence; rank r lands in bucket r % width.
// Keeping the sides apart means node kinds only see the colors of p and q,
// never the overlap of their neighborhoods. Throws std::invalid_argument for
// width < 1 and MemoryGateError when a dense kind exceeds the limit.
std::vector<double> featurize(TestKind kind, const Graph& g_train, Link target,
                              const FeatureConfig& config);

// featurize over many targets, spread over `threads` workers. Row order
// follows `targets`.
std::vector<std::vector<double>> featurize_all(TestKind kind, const Graph& g_train,
                                               std::span<const Link> targets,
                                               const FeatureConfig& config, std::size_t threads);

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  std::uint64_t seed = 0;
};

// Logistic model over standardized features.
struct LinearScorer {
  std::vector<double> weights;
  double bias = 0;
  std::vector<double> mean;
  std::vector<double> stdev;  // 0 marks a constant feature, which is ignored
  TrainConfig config;
  std::vector<double> loss_history;  // mean log loss before each epoch

  // Logit of the positive class.
  double score(std::span<const double> features) const;
};

// Full-batch gradient descent from zero weights. Throws std::invalid_argument
// on size mismatch, fewer than two rows, single-class labels, ragged rows and
// non-finite features.
LinearScorer train_scorer(const std::vector<std::vector<double>>& features,
                          std::span<const int> labels, const TrainConfig& config = {});

// Rank-statistic AUC with ties counted half. Throws std::invalid_argument on
// size mismatch or single-class labels.
double auc(std::span<const double> scores, std::span<const int> labels);

struct BenchmarkConfig {
  double test_frac = 0.10;
  double val_frac = 0.05;
  FeatureConfig features{};
  TrainConfig train{};
  std::size_t threads = 1;
};

struct BenchmarkResult {
  std::string dataset;
  TestKind kind = TestKind::WL1;
  std::uint64_t split_seed = 0;
  double val_auc = 0;
  double test_auc = 0;
  double featurize_seconds = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t isolated_nodes = 0;  // in the train graph
};

// Splits, featurizes on the train graph, trains on self-masked train edges
// against as many sampled train non-edges, and scores val and test.
BenchmarkResult benchmark(const Graph& g, TestKind kind, std::uint64_t split_seed,
                          const BenchmarkConfig& config = {}, std::string dataset = "graph");

// Stable key order. Without timing the output depends only on the inputs.
std::string to_json(const BenchmarkResult& result, bool include_timing = true);

}  // namespace linkwl
