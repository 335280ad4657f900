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

#include "linkwl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace linkwl {

std::string to_string(const Link& link) {
  return std::to_string(link.p) + "," + std::to_string(link.q);
}

std::optional<Link> parse_link(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto parse = [](std::string_view part) -> std::optional<NodeId> {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    NodeId value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc() || ptr != end) return std::nullopt;
    return value;
  };
  auto p = parse(text.substr(0, comma));
  auto q = parse(text.substr(comma + 1));
  if (!p || !q) return std::nullopt;
  return Link{*p, *q};
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Link> edges,
                        std::vector<Label> labels) {
  if (labels.empty()) labels.assign(node_count, 0);
  if (labels.size() != node_count) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match node count " +
                                std::to_string(node_count));
  }
  std::vector<Link> oriented;
  oriented.reserve(edges.size() * 2);
  for (const Link& e : edges) {
    if (e.p >= node_count || e.q >= node_count) {
      throw std::invalid_argument("edge " + to_string(e) +
                                  " references a node outside [0, " +
                                  std::to_string(node_count) + ")");
    }
    if (e.p == e.q) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.p));
    }
    oriented.push_back(e);
    oriented.push_back(e.reversed());
  }
  std::sort(oriented.begin(), oriented.end());
  oriented.erase(std::unique(oriented.begin(), oriented.end()), oriented.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(node_count + 1, 0);
  g.targets_.reserve(oriented.size());
  for (const Link& e : oriented) {
    ++g.offsets_[e.p + 1];
    g.targets_.push_back(e.q);
  }
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const { return slot_of(u, v).has_value(); }

std::optional<std::size_t> Graph::slot_of(NodeId v, NodeId u) const {
  if (v >= node_count()) return std::nullopt;
  const auto nbrs = neighbors(v);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
  if (it == nbrs.end() || *it != u) return std::nullopt;
  return offsets_[v] + static_cast<std::size_t>(it - nbrs.begin());
}

Label Graph::label_alphabet() const {
  if (labels_.empty()) return 0;
  return *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<Link> Graph::edges() const {
  std::vector<Link> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    for (NodeId u : neighbors(v)) {
      if (v < u) out.push_back({v, u});
    }
  }
  return out;
}

Graph Graph::without_edge(Link e) const {
  if (!has_edge(e.p, e.q)) return *this;
  const Link drop = e.canonical();
  std::vector<Link> kept;
  kept.reserve(edge_count());
  for (const Link& f : edges()) {
    if (f != drop) kept.push_back(f);
  }
  return from_edges(node_count(), kept, labels_);
}

Graph Graph::with_labels(std::vector<Label> labels) const {
  if (labels.size() != node_count()) {
    throw std::invalid_argument("label count does not match node count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::vector<NodeId> inverse_permutation(std::span<const NodeId> perm) {
  std::vector<NodeId> inv(perm.size(), 0);
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t u = 0; u < perm.size(); ++u) {
    const NodeId image = perm[u];
    if (image >= perm.size() || seen[image]) {
      throw std::invalid_argument("permutation is not a bijection on [0, " +
                                  std::to_string(perm.size()) + ")");
    }
    seen[image] = true;
    inv[image] = static_cast<NodeId>(u);
  }
  return inv;
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count()) {
    throw std::invalid_argument("permutation size does not match node count");
  }
  inverse_permutation(perm);  // validates bijectivity
  std::vector<Link> edges;
  edges.reserve(g.edge_count());
  for (const Link& e : g.edges()) edges.push_back({perm[e.p], perm[e.q]});
  std::vector<Label> labels(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) labels[perm[u]] = g.label(u);
  return Graph::from_edges(g.node_count(), edges, std::move(labels));
}

UnionResult disjoint_union(const Graph& first, const Graph& second) {
  const auto offset = static_cast<NodeId>(first.node_count());
  std::vector<Link> edges = first.edges();
  for (const Link& e : second.edges()) edges.push_back({e.p + offset, e.q + offset});
  std::vector<Label> labels(first.labels().begin(), first.labels().end());
  labels.insert(labels.end(), second.labels().begin(), second.labels().end());
  const std::size_t n = labels.size();
  return {Graph::from_edges(n, edges, std::move(labels)), offset};
}

Graph label01(const Graph& g, Link target) {
  if (target.p == target.q) {
    throw std::invalid_argument("0/1 labeling needs two distinct target nodes");
  }
  if (!g.contains(target.p) || !g.contains(target.q)) {
    throw std::invalid_argument("target " + to_string(target) + " is out of range");
  }
  std::vector<Label> labels(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const bool marked = v == target.p || v == target.q;
    labels[v] = 2 * g.label(v) + (marked ? 1 : 0);
  }
  return g.with_labels(std::move(labels));
}

}  // namespace linkwl
