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

#include "linkwl/unroll.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linkwl {
namespace {

using NodePtr = std::shared_ptr<const TreeNode>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int compare(const TreeNode& a, const TreeNode& b) {
  if (&a == &b) return 0;
  if (a.hash != b.hash) return a.hash < b.hash ? -1 : 1;
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  if (a.branches.size() != b.branches.size()) return a.branches.size() < b.branches.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    const auto& x = a.branches[i];
    const auto& y = b.branches[i];
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (int c = compare(*x[k], *y[k]); c != 0) return c;
    }
  }
  return 0;
}

NodePtr make_node(std::vector<std::uint32_t> label, std::vector<std::vector<NodePtr>> branches) {
  auto node = std::make_shared<TreeNode>();
  std::uint64_t h = mix(0x5eed ^ label.size());
  for (std::uint32_t w : label) h = mix(h ^ w);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    auto& children = branches[b];
    std::sort(children.begin(), children.end(),
              [](const NodePtr& x, const NodePtr& y) { return compare(*x, *y) < 0; });
    h = mix(h ^ (0x100 + b));
    h = mix(h ^ children.size());
    for (const auto& child : children) h = mix(h ^ child->hash);
  }
  node->label = std::move(label);
  node->branches = std::move(branches);
  node->hash = h;
  return node;
}

class Builder {
 public:
  Builder(TreeKind kind, const Graph& g, std::size_t depth)
      : kind_(kind), g_(g), n_(g.node_count()), memo_(depth + 1) {}

  NodePtr root(Link e, std::size_t depth) {
    std::vector<std::uint32_t> label = {g_.label(e.p), g_.label(e.q)};
    std::vector<std::vector<NodePtr>> branches;
    if (depth > 0) {
      switch (kind_) {
        case TreeKind::kB: {
          std::vector<NodePtr> left;
          std::vector<NodePtr> right;
          for (NodeId u : g_.neighbors(e.p)) left.push_back(node_b(u, depth - 1));
          for (NodeId u : g_.neighbors(e.q)) right.push_back(node_b(u, depth - 1));
          branches = {std::move(left), std::move(right)};
          break;
        }
        case TreeKind::kA:
        case TreeKind::kC:
          branches = pair_branches(e.p, e.q, depth - 1);
          break;
        case TreeKind::kD:
          branches = {expand(e.p, e.q, depth)};
          break;
      }
    }
    return make_node(std::move(label), std::move(branches));
  }

 private:
  std::uint32_t edge(NodeId r, NodeId s) const { return r != s && g_.has_edge(r, s) ? 1 : 0; }

  NodePtr node_b(NodeId v, std::size_t d) {
    auto& slot = memo_[d][v];
    if (slot) return slot;
    std::vector<std::vector<NodePtr>> branches;
    if (d > 0) {
      std::vector<NodePtr> children;
      for (NodeId u : g_.neighbors(v)) children.push_back(node_b(u, d - 1));
      branches.push_back(std::move(children));
    }
    slot = make_node({g_.label(v)}, std::move(branches));
    return slot;
  }

  // Children of pair (r, s) for kA / kC at child depth `d`.
  std::vector<std::vector<NodePtr>> pair_branches(NodeId r, NodeId s, std::size_t d) {
    std::vector<NodePtr> left;
    std::vector<NodePtr> right;
    if (kind_ == TreeKind::kA) {
      for (NodeId i : g_.neighbors(r)) left.push_back(node_pair(r, i, d));
      for (NodeId j : g_.neighbors(s)) right.push_back(node_pair(j, s, d));
    } else {
      for (NodeId i = 0; i < n_; ++i) left.push_back(node_pair(r, i, d));
      for (NodeId j = 0; j < n_; ++j) right.push_back(node_pair(j, s, d));
    }
    std::vector<std::vector<NodePtr>> branches;
    branches.push_back(std::move(left));
    branches.push_back(std::move(right));
    return branches;
  }

  NodePtr node_pair(NodeId r, NodeId s, std::size_t d) {
    auto& slot = memo_[d][std::uint64_t{r} * n_ + s];
    if (slot) return slot;
    std::vector<std::uint32_t> label = {g_.label(r), g_.label(s)};
    if (kind_ == TreeKind::kC) {
      label.push_back(edge(r, s));
      label.push_back(r == s ? 1 : 0);
    }
    std::vector<std::vector<NodePtr>> branches;
    if (d > 0) branches = pair_branches(r, s, d - 1);
    slot = make_node(std::move(label), std::move(branches));
    return slot;
  }

  // Witness nodes ((x,t),(t,y)) for every t, each unrolled `e - 1` further.
  std::vector<NodePtr> expand(NodeId x, NodeId y, std::size_t e) {
    std::vector<NodePtr> out;
    out.reserve(n_);
    for (NodeId t = 0; t < n_; ++t) out.push_back(witness(x, t, y, e - 1));
    return out;
  }

  NodePtr witness(NodeId x, NodeId t, NodeId y, std::size_t e) {
    auto& slot = memo_[e][(std::uint64_t{x} * n_ + t) * n_ + y];
    if (slot) return slot;
    std::vector<std::uint32_t> label = {g_.label(x), g_.label(t), g_.label(y),
                                        edge(x, t),  edge(t, y),  x == t ? 1u : 0u,
                                        t == y ? 1u : 0u};
    std::vector<std::vector<NodePtr>> branches;
    if (e > 0) {
      branches.push_back(expand(x, t, e));
      branches.push_back(expand(t, y, e));
    }
    slot = make_node(std::move(label), std::move(branches));
    return slot;
  }

  TreeKind kind_;
  const Graph& g_;
  std::size_t n_;
  std::vector<std::unordered_map<std::uint64_t, NodePtr>> memo_;
};

}  // namespace

std::string_view to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kA: return "T_A";
    case TreeKind::kB: return "T_B";
    case TreeKind::kC: return "T_C";
    case TreeKind::kD: return "T_D";
  }
  return "?";
}

TestKind tree_test_kind(TreeKind kind) {
  switch (kind) {
    case TreeKind::kA: return TestKind::WL2_Local;
    case TreeKind::kB: return TestKind::WL1;
    case TreeKind::kC: return TestKind::WL2;
    case TreeKind::kD: return TestKind::FWL2;
  }
  return TestKind::WL1;
}

UnrollTree unroll(TreeKind kind, const Graph& g, Link e, int depth) {
  if (depth < 0) throw std::invalid_argument("unroll depth must be non-negative");
  if (!g.contains(e.p) || !g.contains(e.q) || e.p == e.q) {
    throw std::invalid_argument("link " + to_string(e) + " is not a valid pair of distinct nodes");
  }
  if ((kind == TreeKind::kC || kind == TreeKind::kD) && g.node_count() > 8 && depth > 4) {
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " unrolling is limited to depth 4 above 8 nodes");
  }
  const auto d = static_cast<std::size_t>(depth);
  Builder builder(kind, g, d);
  UnrollTree tree;
  tree.kind = kind;
  tree.depth = d;
  tree.root = builder.root(e, d);
  tree.canonical_hash = tree.root->hash;
  return tree;
}

bool tree_equal(const UnrollTree& a, const UnrollTree& b) {
  if (a.kind != b.kind || a.depth != b.depth) {
    throw std::invalid_argument("tree_equal needs trees of the same kind and depth");
  }
  if (a.canonical_hash != b.canonical_hash) return false;
  return compare(*a.root, *b.root) == 0;
}

std::size_t TreeCatalog::classify(const UnrollTree& tree) {
  auto& bucket = buckets_[tree.canonical_hash];
  for (const auto& [rep, id] : bucket) {
    if (tree_equal(rep, tree)) return id;
  }
  bucket.emplace_back(tree, count_);
  return count_++;
}

}  // namespace linkwl
