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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "linkwl/cone.hpp"
#include "linkwl/linkpred.hpp"
#include "../engine/signatures.hpp"

namespace linkwl {
namespace {

std::vector<NodeId> masked_neighbors(const Graph& g, NodeId v, NodeId other) {
  std::vector<NodeId> out;
  for (NodeId u : g.neighbors(v)) {
    if (u != other) out.push_back(u);
  }
  return out;
}

// Ranks classes by pooled size (largest first), then by their count on the p
// side, then by first occurrence, and folds the p-side and q-side counts of a
// class of rank r into bucket r % width of the two halves. Classes still tied
// after the count key have equal counts on both sides, so their order does not
// show in the output.
void histogram(std::span<const ColorId> colors, std::span<const std::uint8_t> on_p_side, std::size_t width,
               std::vector<double>& out) {
  struct Class {
    std::size_t first = 0;
    std::size_t p_count = 0;
    std::size_t q_count = 0;
    std::size_t size() const { return p_count + q_count; }
  };
  std::unordered_map<ColorId, Class> classes;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto [it, inserted] = classes.try_emplace(colors[i], Class{i, 0, 0});
    ++(on_p_side[i] ? it->second.p_count : it->second.q_count);
  }
  std::vector<Class> ranked;
  ranked.reserve(classes.size());
  for (const auto& [color, cls] : classes) ranked.push_back(cls);
  std::sort(ranked.begin(), ranked.end(), [](const Class& a, const Class& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    if (a.p_count != b.p_count) return a.p_count > b.p_count;
    return a.first < b.first;
  });
  const std::size_t base = out.size();
  out.resize(base + 2 * width, 0.0);
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    out[base + r % width] += static_cast<double>(ranked[r].p_count);
    out[base + width + r % width] += static_cast<double>(ranked[r].q_count);
  }
}

}  // namespace

std::size_t feature_dimension(const FeatureConfig& config) {
  return (config.heuristics ? 3 : 0) + 1 + 2 * config.width;
}

std::vector<double> featurize(TestKind kind, const Graph& g_train, Link target,
                              const FeatureConfig& config) {
  if (config.width < 1) throw std::invalid_argument("histogram width must be at least 1");
  if (kind == TestKind::WL2 || kind == TestKind::FWL2) {
    const std::size_t n = g_train.node_count();
    if (n * n > config.limits.max_dense_pairs) {
      throw MemoryGateError(std::string(to_string(kind)) + " needs " + std::to_string(n * n) +
                            " pair colors for n=" + std::to_string(n) + ", above the limit of " +
                            std::to_string(config.limits.max_dense_pairs));
    }
  }
  const ConeEvaluator cone(kind, g_train, target);
  const NodeId p = target.p;
  const NodeId q = target.q;
  const auto np = masked_neighbors(g_train, p, q);
  const auto nq = masked_neighbors(g_train, q, p);

  std::vector<double> out;
  out.reserve(feature_dimension(config));
  if (config.heuristics) {
    // Masking only changes the degrees of p and q, which CN and RA never read.
    out.push_back(heuristic_cn(g_train, p, q));
    out.push_back(static_cast<double>(np.size()) * static_cast<double>(nq.size()));
    out.push_back(heuristic_ra(g_train, p, q));
  }

  Interner interner;
  double edge_edge = 0;
  if (kind == TestKind::FWL2 || kind == TestKind::FWL2_Local) {
    constexpr std::size_t slot = detail::kInitEdgeSlot;
    for (const auto& [a, b] : cone.first_folklore_entries(target, interner)) {
      if (interner.signature(0, a)[slot] == 1 && interner.signature(0, b)[slot] == 1) edge_edge += 1;
    }
  }
  out.push_back(edge_edge);

  // Units around p come first, then units around q.
  std::vector<std::uint8_t> on_p_side;
  std::vector<ColorId> colors;
  if (!is_pair_kind(kind)) {
    std::vector<NodeId> units = np;
    units.insert(units.end(), nq.begin(), nq.end());
    on_p_side.assign(units.size(), 0);
    std::fill_n(on_p_side.begin(), np.size(), 1);
    colors = cone.node_colors(units, config.depth, interner);
  } else {
    std::vector<NodeId> p_ends;  // v in (p, v)
    std::vector<NodeId> q_ends;  // u in (u, q)
    if (kind == TestKind::WL2_Local) {
      p_ends = np;
      q_ends = nq;
    } else {
      std::set_union(np.begin(), np.end(), nq.begin(), nq.end(), std::back_inserter(p_ends));
      q_ends = p_ends;
    }
    std::vector<Link> units;
    for (NodeId v : p_ends) units.push_back({p, v});
    for (NodeId u : q_ends) units.push_back({u, q});
    on_p_side.assign(units.size(), 0);
    std::fill_n(on_p_side.begin(), p_ends.size(), 1);
    colors = cone.pair_colors(units, config.depth, interner);
  }
  histogram(colors, on_p_side, config.width, out);
  return out;
}

std::vector<std::vector<double>> featurize_all(TestKind kind, const Graph& g_train,
                                               std::span<const Link> targets,
                                               const FeatureConfig& config, std::size_t threads) {
  std::vector<std::vector<double>> rows(targets.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size() && !failed; i = next++) {
      try {
        rows[i] = featurize(kind, g_train, targets[i], config);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const std::size_t count = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(targets.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace linkwl
