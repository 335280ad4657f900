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

#include <chrono>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "linkwl/linkpred.hpp"
#include "linkwl/random.hpp"
#include "linkwl/split.hpp"

namespace linkwl {
namespace {

// Train negatives come from a stream separate from the split's.
constexpr std::uint64_t kNegativeStream = 0x9e3779b97f4a7c15ULL;

std::vector<Link> sample_train_negatives(const Graph& g, const LinkSplit& split, std::size_t count,
                                         Rng& rng) {
  std::set<Link> taken(split.val_neg.begin(), split.val_neg.end());
  taken.insert(split.test_neg.begin(), split.test_neg.end());
  const std::size_t n = g.node_count();
  std::vector<Link> picked;
  for (std::size_t attempt = 0; attempt < 50 * count && picked.size() < count; ++attempt) {
    const auto u = static_cast<NodeId>(rng.below(n));
    const auto v = static_cast<NodeId>(rng.below(n));
    if (u == v || g.has_edge(u, v)) continue;
    const Link pair = Link{u, v}.canonical();
    if (taken.insert(pair).second) picked.push_back(pair);
  }
  if (picked.size() < count) {
    std::vector<Link> pool;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v) && taken.count(Link{u, v}) == 0) pool.push_back({u, v});
      }
    }
    if (pool.size() < count - picked.size()) {
      throw std::invalid_argument("not enough non-edges left for " + std::to_string(count) +
                                  " train negatives");
    }
    rng.shuffle(std::span<Link>(pool));
    pool.resize(count - picked.size());
    picked.insert(picked.end(), pool.begin(), pool.end());
  }
  return picked;
}

std::vector<double> scores(const LinearScorer& scorer, const std::vector<std::vector<double>>& rows) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(scorer.score(row));
  return out;
}

// Features and labels of positives followed by negatives.
struct Labeled {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
};

}  // namespace

BenchmarkResult benchmark(const Graph& g, TestKind kind, std::uint64_t split_seed,
                          const BenchmarkConfig& config, std::string dataset) {
  const LinkSplit split = split_links(g, config.test_frac, config.val_frac, split_seed);
  const Graph& train_graph = split.train_graph;
  const std::vector<Link> train_pos = train_graph.edges();
  Rng rng(split_seed ^ kNegativeStream);
  const std::vector<Link> train_neg = sample_train_negatives(g, split, train_pos.size(), rng);

  double seconds = 0;
  auto featurize_set = [&](const std::vector<Link>& pos, const std::vector<Link>& neg) {
    std::vector<Link> targets = pos;
    targets.insert(targets.end(), neg.begin(), neg.end());
    const auto start = std::chrono::steady_clock::now();
    Labeled out{featurize_all(kind, train_graph, targets, config.features, config.threads), {}};
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.labels.assign(pos.size(), 1);
    out.labels.resize(targets.size(), 0);
    return out;
  };
  const Labeled train = featurize_set(train_pos, train_neg);
  const Labeled val = featurize_set(split.val_pos, split.val_neg);
  const Labeled test = featurize_set(split.test_pos, split.test_neg);

  const LinearScorer scorer = train_scorer(train.rows, train.labels, config.train);

  BenchmarkResult result;
  result.dataset = std::move(dataset);
  result.kind = kind;
  result.split_seed = split_seed;
  result.val_auc = auc(scores(scorer, val.rows), val.labels);
  result.test_auc = auc(scores(scorer, test.rows), test.labels);
  result.featurize_seconds = seconds;
  result.n = g.node_count();
  result.m = g.edge_count();
  for (NodeId v = 0; v < train_graph.node_count(); ++v) {
    if (train_graph.degree(v) == 0) ++result.isolated_nodes;
  }
  return result;
}

std::string to_json(const BenchmarkResult& result, bool include_timing) {
  nlohmann::ordered_json j;
  j["dataset"] = result.dataset;
  j["kind"] = std::string(to_string(result.kind));
  j["split_seed"] = result.split_seed;
  j["val_auc"] = result.val_auc;
  j["test_auc"] = result.test_auc;
  if (include_timing) j["featurize_seconds"] = result.featurize_seconds;
  j["n"] = result.n;
  j["m"] = result.m;
  j["isolated_nodes"] = result.isolated_nodes;
  return j.dump();
}

}  // namespace linkwl
