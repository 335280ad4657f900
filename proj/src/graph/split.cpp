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

#include "linkwl/split.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "linkwl/random.hpp"

namespace linkwl {
namespace {

std::vector<Link> sample_non_edges(const Graph& g, std::size_t count, Rng& rng) {
  const std::size_t n = g.node_count();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (pairs - g.edge_count() < count) {
    throw std::invalid_argument("need " + std::to_string(count) +
                                " negative links but the graph has only " +
                                std::to_string(pairs - g.edge_count()) + " non-edges");
  }
  std::vector<Link> picked;
  std::set<Link> seen;
  const std::size_t max_attempts = 50 * count;
  for (std::size_t attempt = 0; attempt < max_attempts && picked.size() < count; ++attempt) {
    auto u = static_cast<NodeId>(rng.below(n));
    auto v = static_cast<NodeId>(rng.below(n));
    if (u == v || g.has_edge(u, v)) continue;
    const Link pair = Link{u, v}.canonical();
    if (seen.insert(pair).second) picked.push_back(pair);
  }
  if (picked.size() < count) {
    std::vector<Link> pool;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && seen.count(Link{u, v}) == 0) pool.push_back({u, v});
    rng.shuffle(std::span<Link>(pool));
    pool.resize(count - picked.size());
    picked.insert(picked.end(), pool.begin(), pool.end());
  }
  return picked;
}

nlohmann::json links_json(const std::vector<Link>& links) {
  auto arr = nlohmann::json::array();
  for (const Link& e : links) arr.push_back({e.p, e.q});
  return arr;
}

}  // namespace

LinkSplit split_links(const Graph& g, double test_frac, double val_frac, std::uint64_t seed) {
  if (!(test_frac > 0.0 && val_frac > 0.0 && test_frac + val_frac < 1.0)) {
    throw std::invalid_argument("split fractions must be positive with test + val < 1");
  }
  const std::size_t m = g.edge_count();
  const auto n_test = static_cast<std::size_t>(std::floor(test_frac * static_cast<double>(m)));
  const auto n_val = static_cast<std::size_t>(std::floor(val_frac * static_cast<double>(m)));
  if (n_test == 0 || n_val == 0) {
    throw std::invalid_argument("graph with " + std::to_string(m) +
                                " edges is too small for the requested fractions");
  }
  Rng rng(seed);
  std::vector<Link> edges = g.edges();
  rng.shuffle(std::span<Link>(edges));

  LinkSplit split;
  split.seed = seed;
  split.test_pos.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(n_test));
  split.val_pos.assign(edges.begin() + static_cast<std::ptrdiff_t>(n_test),
                       edges.begin() + static_cast<std::ptrdiff_t>(n_test + n_val));
  std::vector<Link> train(edges.begin() + static_cast<std::ptrdiff_t>(n_test + n_val),
                          edges.end());

  std::vector<Link> negatives = sample_non_edges(g, n_test + n_val, rng);
  split.test_neg.assign(negatives.begin(),
                        negatives.begin() + static_cast<std::ptrdiff_t>(n_test));
  split.val_neg.assign(negatives.begin() + static_cast<std::ptrdiff_t>(n_test), negatives.end());

  split.train_graph =
      Graph::from_edges(g.node_count(), train, std::vector<Label>(g.labels().begin(),
                                                                   g.labels().end()));
  return split;
}

std::string split_to_json(const LinkSplit& split) {
  nlohmann::json j;
  j["seed"] = split.seed;
  j["train_edges"] = links_json(split.train_graph.edges());
  j["val_pos"] = links_json(split.val_pos);
  j["val_neg"] = links_json(split.val_neg);
  j["test_pos"] = links_json(split.test_pos);
  j["test_neg"] = links_json(split.test_neg);
  return j.dump();
}

}  // namespace linkwl
