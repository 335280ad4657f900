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
#include <stdexcept>
#include <string>

#include "linkwl/unroll.hpp"

namespace linkwl {
namespace {

class LinkMatcher {
 public:
  LinkMatcher(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.node_count()) {
    adj_a_.assign(n_ * n_, 0);
    adj_b_.assign(n_ * n_, 0);
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId u : a.neighbors(v)) adj_a_[v * n_ + u] = 1;
      for (NodeId u : b.neighbors(v)) adj_b_[v * n_ + u] = 1;
    }
    map_.assign(n_, kUnset);
    used_.assign(n_, 0);
  }

  bool run(Link e1, Link e2) {
    order_.push_back(e1.p);
    if (e1.q != e1.p) order_.push_back(e1.q);
    pinned_ = order_.size();
    // Remaining nodes in BFS order from the targets so adjacency constraints bite early.
    std::vector<char> seen(n_, 0);
    for (NodeId v : order_) seen[v] = 1;
    for (std::size_t head = 0; order_.size() < n_;) {
      if (head == order_.size()) {
        NodeId best = 0;
        bool found = false;
        for (NodeId v = 0; v < n_; ++v) {
          if (!seen[v] && (!found || a_.degree(v) > a_.degree(best))) {
            best = v;
            found = true;
          }
        }
        seen[best] = 1;
        order_.push_back(best);
      }
      for (NodeId u : a_.neighbors(order_[head])) {
        if (!seen[u]) {
          seen[u] = 1;
          order_.push_back(u);
        }
      }
      ++head;
    }
    fixed_ = {e2.p, e2.q};
    return extend(0);
  }

 private:
  static constexpr NodeId kUnset = ~NodeId{0};

  bool compatible(std::size_t depth, NodeId w) const {
    const NodeId v = order_[depth];
    if (used_[w] || a_.label(v) != b_.label(w) || a_.degree(v) != b_.degree(w)) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const NodeId u = order_[k];
      if (adj_a_[v * n_ + u] != adj_b_[w * n_ + map_[u]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const NodeId v = order_[depth];
    auto attempt = [&](NodeId w) {
      if (!compatible(depth, w)) return false;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      map_[v] = kUnset;
      used_[w] = 0;
      return false;
    };
    // The first one or two nodes are the targets and are pinned.
    if (depth < pinned_) return attempt(depth == 0 ? fixed_.p : fixed_.q);
    for (NodeId w = 0; w < n_; ++w) {
      if (attempt(w)) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<char> adj_a_;
  std::vector<char> adj_b_;
  std::vector<NodeId> order_;
  std::vector<NodeId> map_;
  std::vector<char> used_;
  Link fixed_;
  std::size_t pinned_ = 0;
};

std::vector<std::pair<Label, std::size_t>> profile(const Graph& g) {
  std::vector<std::pair<Label, std::size_t>> out;
  for (NodeId v = 0; v < g.node_count(); ++v) out.emplace_back(g.label(v), g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool link_isomorphic(const Graph& g1, Link e1, const Graph& g2, Link e2,
                     const IsoOptions& options) {
  if (g1.node_count() > options.max_nodes || g2.node_count() > options.max_nodes) {
    throw std::length_error("link isomorphism search is limited to " +
                            std::to_string(options.max_nodes) + " nodes");
  }
  for (const auto& [g, e] : {std::pair{&g1, e1}, std::pair{&g2, e2}}) {
    if (!g->contains(e.p) || !g->contains(e.q)) {
      throw std::out_of_range("link " + to_string(e) + " is outside its graph");
    }
  }
  const Graph a = options.masked ? g1.without_edge(e1) : g1;
  const Graph b = options.masked ? g2.without_edge(e2) : g2;
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  if ((e1.p == e1.q) != (e2.p == e2.q)) return false;
  if (profile(a) != profile(b)) return false;
  LinkMatcher matcher(a, b);
  return matcher.run(e1, e2);
}

}  // namespace linkwl
