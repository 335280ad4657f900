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
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/test_kind.hpp"

namespace linkwl {

// Unrolled computation trees of the link tests:
//   kA  local 2-WL   children are observed edges (p,i) / (j,q)
//   kB  1-WL         the two node subtrees of p and q
//   kC  2-WL         children (p,i) / (j,q) over all nodes
//   kD  2-FWL        children ((p,i),(i,q)) over all nodes
enum class TreeKind { kA, kB, kC, kD };

std::string_view to_string(TreeKind kind);
// The test whose depth-k colors the tree of `kind` tracks. kA -> WL2_Local,
// kB -> WL1, kC -> WL2, kD -> FWL2.
TestKind tree_test_kind(TreeKind kind);

struct TreeNode {
  std::vector<std::uint32_t> label;
  // Children per branch tag, in canonical order.
  std::vector<std::vector<std::shared_ptr<const TreeNode>>> branches;
  std::uint64_t hash = 0;
};

struct UnrollTree {
  TreeKind kind = TreeKind::kB;
  std::size_t depth = 0;
  std::uint64_t canonical_hash = 0;
  std::shared_ptr<const TreeNode> root;
};

// Builds the depth-`depth` tree of link `e` in `g` as given (no masking here;
// pass the masked graph for prediction-mode comparisons). The root carries
// (l(p), l(q)) only. Subtrees are shared, so memory stays proportional to the
// number of distinct (unit, depth) states.
//
// Throws std::invalid_argument for depth < 0, a bad link, or depth > 4 on
// kC/kD trees with more than 8 nodes.
UnrollTree unroll(TreeKind kind, const Graph& g, Link e, int depth);

// Hash comparison confirmed by an exact structural comparison.
// Throws std::invalid_argument when kind or depth differ.
bool tree_equal(const UnrollTree& a, const UnrollTree& b);

// Exact equivalence classes of trees: equal trees get the same id, ids are
// dense in order of first appearance.
class TreeCatalog {
 public:
  std::size_t classify(const UnrollTree& tree);
  std::size_t size() const { return count_; }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::pair<UnrollTree, std::size_t>>> buckets_;
  std::size_t count_ = 0;
};

// Exhaustive search for an isomorphism pi of g1 onto g2 with pi(e1.p) = e2.p,
// pi(e1.q) = e2.q preserving edges and labels. With `masked`, the target edge
// is removed from each graph first. Throws std::length_error when either
// graph has more than `max_nodes` nodes.
struct IsoOptions {
  std::size_t max_nodes = 9;
  bool masked = false;
};
bool link_isomorphic(const Graph& g1, Link e1, const Graph& g2, Link e2,
                     const IsoOptions& options = {});

}  // namespace linkwl
