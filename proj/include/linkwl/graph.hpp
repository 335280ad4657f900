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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkwl {

using NodeId = std::uint32_t;
using Label = std::uint32_t;

// An ordered node pair. Undirected edges are stored with p < q; targets keep
// the caller's orientation.
struct Link {
  NodeId p = 0;
  NodeId q = 0;

  constexpr Link reversed() const { return {q, p}; }
  // Same pair with p <= q.
  constexpr Link canonical() const { return p <= q ? *this : reversed(); }

  friend constexpr auto operator<=>(const Link&, const Link&) = default;
};

std::string to_string(const Link& link);

// Parses "p,q".
std::optional<Link> parse_link(std::string_view text);

// Simple undirected node-labeled graph stored in CSR form. Neighbor lists are
// sorted; the slot of directed edge (v, adj[k]) is offsets[v] + k, which the
// pair-refinement code uses as a dense index over oriented edges.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either orientation)
  // collapse. Throws std::invalid_argument on self-loops or out-of-range ids.
  // An empty `labels` means all-zero labels.
  static Graph from_edges(std::size_t node_count, std::span<const Link> edges,
                          std::vector<Label> labels = {});

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  Label label(NodeId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  // One past the largest label in use (0 for the empty graph).
  Label label_alphabet() const;

  // CSR slot access for oriented edges.
  std::size_t slot_begin(NodeId v) const { return offsets_[v]; }
  std::size_t slot_end(NodeId v) const { return offsets_[v + 1]; }
  std::size_t slot_count() const { return targets_.size(); }
  NodeId slot_target(std::size_t slot) const { return targets_[slot]; }
  // Slot of (v, u), or nullopt when {u, v} is not an edge.
  std::optional<std::size_t> slot_of(NodeId v, NodeId u) const;

  // Edges with p < q in lexicographic order.
  std::vector<Link> edges() const;

  Graph without_edge(Link e) const;
  Graph with_labels(std::vector<Label> labels) const;

  bool contains(NodeId v) const { return v < node_count(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
};

// Relabels nodes: node u of `g` becomes node perm[u]. Throws
// std::invalid_argument when `perm` is not a bijection on [n].
Graph permute(const Graph& g, std::span<const NodeId> perm);

std::vector<NodeId> inverse_permutation(std::span<const NodeId> perm);

// Nodes of `second` are shifted by `offset` = first.node_count().
struct UnionResult {
  Graph graph;
  NodeId offset = 0;
};
UnionResult disjoint_union(const Graph& first, const Graph& second);

// 0/1 labeling trick: label(v) becomes 2 * label(v) + [v is p or q].
// Throws std::invalid_argument when p == q or either node is out of range.
Graph label01(const Graph& g, Link target);

}  // namespace linkwl
