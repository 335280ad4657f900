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

#include <map>

#include "linkwl/power.hpp"

namespace linkwl {
namespace {

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

// Cheap isomorphism invariants of a masked instance.
std::vector<std::uint64_t> bucket_key(const Graph& g, Link e) {
  std::vector<std::uint64_t> key = {g.node_count(), g.edge_count(), g.degree(e.p), g.degree(e.q),
                                    g.label(e.p), g.label(e.q)};
  std::vector<std::uint64_t> profile;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    profile.push_back((std::uint64_t{g.label(v)} << 32) | g.degree(v));
  }
  std::sort(profile.begin(), profile.end());
  key.insert(key.end(), profile.begin(), profile.end());
  return key;
}

std::vector<std::size_t> small_instances(const Corpus& corpus, std::size_t max_nodes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    if (corpus.graph_of(corpus.instances[i]).node_count() <= max_nodes) out.push_back(i);
  }
  return out;
}

}  // namespace

OracleSoundness check_oracle_soundness(const Corpus& corpus, std::span<const KindBatch> batches,
                                       std::size_t max_nodes) {
  OracleSoundness result;
  const auto chosen = small_instances(corpus, max_nodes);
  result.instances = chosen.size();

  std::map<std::vector<std::uint64_t>, std::vector<std::vector<std::size_t>>> buckets;
  for (std::size_t i : chosen) {
    const Instance& inst = corpus.instances[i];
    const Graph masked = corpus.graph_of(inst).without_edge(inst.target);
    auto& classes = buckets[bucket_key(masked, inst.target)];
    bool placed = false;
    for (auto& cls : classes) {
      const Instance& rep = corpus.instances[cls.front()];
      if (link_isomorphic(corpus.graph_of(rep), rep.target, corpus.graph_of(inst), inst.target,
                          {.max_nodes = max_nodes, .masked = true})) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }

  for (const auto& [key, classes] : buckets) {
    for (const auto& cls : classes) {
      ++result.iso_classes;
      const std::uint64_t pairs = choose2(cls.size());
      result.isomorphic_pairs += pairs;
      for (const KindBatch& batch : batches) {
        std::vector<std::uint64_t> colors;
        for (std::size_t i : cls) colors.push_back(batch.final_color(i));
        result.checked += pairs;
        result.violations += pairs - same_key_pairs(std::move(colors));
      }
    }
  }
  return result;
}

std::vector<TreeAgreement> check_tree_correspondence(const Corpus& corpus,
                                                     std::span<const KindBatch> batches,
                                                     std::size_t max_nodes,
                                                     std::size_t max_depth) {
  std::vector<TreeAgreement> out;
  const auto chosen = small_instances(corpus, max_nodes);
  std::vector<Graph> masked;
  masked.reserve(chosen.size());
  for (std::size_t i : chosen) {
    const Instance& inst = corpus.instances[i];
    masked.push_back(corpus.graph_of(inst).without_edge(inst.target));
  }
  for (TreeKind tree : {TreeKind::kA, TreeKind::kB, TreeKind::kC, TreeKind::kD}) {
    const KindBatch* batch = nullptr;
    for (const auto& b : batches) {
      if (b.kind == tree_test_kind(tree)) batch = &b;
    }
    if (!batch) continue;
    for (std::size_t depth = 0; depth <= max_depth; ++depth) {
      TreeCatalog catalog;
      std::vector<std::uint64_t> tree_ids;
      std::vector<std::uint64_t> color_ids;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const Instance& inst = corpus.instances[chosen[k]];
        const auto id = catalog.classify(
            unroll(tree, masked[k], inst.target, static_cast<int>(depth)));
        tree_ids.push_back(id);
        color_ids.push_back(batch->ordered_at(chosen[k], depth));
      }
      // Pairs where tree equality and color equality disagree.
      std::vector<std::uint64_t> joint_keys;
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> joint_ids;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        auto [it, inserted] = joint_ids.emplace(std::pair{tree_ids[k], color_ids[k]}, joint_ids.size());
        joint_keys.push_back(it->second);
      }
      const std::uint64_t same_tree = same_key_pairs(tree_ids);
      const std::uint64_t same_color = same_key_pairs(color_ids);
      const std::uint64_t same_both = same_key_pairs(joint_keys);
      out.push_back({tree, depth, choose2(chosen.size()), same_tree + same_color - 2 * same_both});
    }
  }
  return out;
}

}  // namespace linkwl
