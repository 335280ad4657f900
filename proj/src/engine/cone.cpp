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

#include "linkwl/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "linkwl/refinement.hpp"
#include "signatures.hpp"

namespace linkwl {
namespace {

using Key = std::uint64_t;

Key pair_key(NodeId p, NodeId q) { return detail::pack(p, q); }
NodeId key_p(Key k) { return static_cast<NodeId>(k >> 32); }
NodeId key_q(Key k) { return static_cast<NodeId>(k); }

void sort_unique(std::vector<Key>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

}  // namespace

ConeEvaluator::ConeEvaluator(TestKind kind, const Graph& g, std::optional<Link> mask)
    : kind_(kind), graph_(g), mask_(mask) {
  if (mask_) {
    const Link m = *mask_;
    if (!g.contains(m.p) || !g.contains(m.q)) {
      throw std::out_of_range("target " + to_string(m) + " is outside the graph (n=" +
                              std::to_string(g.node_count()) + ")");
    }
    if (m.p == m.q) throw std::invalid_argument("target " + to_string(m) + " needs two distinct nodes");
    for (NodeId u : g.neighbors(m.p)) {
      if (u != m.q) masked_p_.push_back(u);
    }
    for (NodeId u : g.neighbors(m.q)) {
      if (u != m.p) masked_q_.push_back(u);
    }
  } else if (kind_ == TestKind::WL1_Label01) {
    throw std::invalid_argument("WL1_Label01 needs a target link to label");
  }
}

std::span<const NodeId> ConeEvaluator::neighbors(NodeId v) const {
  if (mask_) {
    if (v == mask_->p) return masked_p_;
    if (v == mask_->q) return masked_q_;
  }
  return graph_.neighbors(v);
}

bool ConeEvaluator::has_edge(NodeId r, NodeId s) const {
  if (mask_ && Link{r, s}.canonical() == mask_->canonical()) return false;
  return r != s && graph_.has_edge(r, s);
}

Label ConeEvaluator::label(NodeId v) const {
  if (kind_ != TestKind::WL1_Label01) return graph_.label(v);
  return 2 * graph_.label(v) + (v == mask_->p || v == mask_->q ? 1 : 0);
}

void ConeEvaluator::dependencies(Key key, std::vector<Key>& out) const {
  out.push_back(key);
  if (!is_pair_kind(kind_)) {
    for (NodeId u : neighbors(static_cast<NodeId>(key))) out.push_back(u);
    return;
  }
  const NodeId p = key_p(key);
  const NodeId q = key_q(key);
  const auto n = static_cast<NodeId>(graph_.node_count());
  switch (kind_) {
    case TestKind::WL2:
    case TestKind::FWL2:
      for (NodeId u = 0; u < n; ++u) {
        out.push_back(pair_key(u, q));
        out.push_back(pair_key(p, u));
      }
      break;
    case TestKind::WL2_Local:
      for (NodeId u : neighbors(q)) out.push_back(pair_key(u, q));
      for (NodeId v : neighbors(p)) out.push_back(pair_key(p, v));
      break;
    case TestKind::FWL2_Local: {
      std::vector<NodeId> witnesses;
      detail::merge_neighbors(neighbors(p), neighbors(q), witnesses);
      for (NodeId u : witnesses) {
        out.push_back(pair_key(u, q));
        out.push_back(pair_key(p, u));
      }
      break;
    }
    default:
      break;
  }
}

std::vector<ColorId> ConeEvaluator::evaluate(std::vector<Key> keys, std::size_t depth,
                                             Interner& interner) const {
  // levels[t] holds every unit whose round-t color is needed.
  std::vector<std::vector<Key>> levels(depth + 1);
  levels[depth] = keys;
  sort_unique(levels[depth]);
  for (std::size_t t = depth; t > 0; --t) {
    auto& below = levels[t - 1];
    for (Key k : levels[t]) dependencies(k, below);
    sort_unique(below);
  }

  const auto n = static_cast<NodeId>(graph_.node_count());
  detail::Signature sig;
  std::unordered_map<Key, ColorId> prev;
  std::unordered_map<Key, ColorId> cur;
  for (Key k : levels[0]) {
    if (is_pair_kind(kind_)) {
      const NodeId p = key_p(k);
      const NodeId q = key_q(k);
      detail::pair_init_signature(sig, label(p), label(q),
                                  has_edge(p, q), p == q);
    } else {
      detail::node_init_signature(sig, label(static_cast<NodeId>(k)));
    }
    cur.emplace(k, interner.intern(0, sig));
  }

  std::vector<ColorId> first;
  std::vector<ColorId> second;
  std::vector<std::uint64_t> entries;
  std::vector<NodeId> witnesses;
  for (std::size_t t = 1; t <= depth; ++t) {
    prev.swap(cur);
    cur.clear();
    auto c = [&](Key k) { return prev.at(k); };
    for (Key k : levels[t]) {
      if (!is_pair_kind(kind_)) {
        const auto v = static_cast<NodeId>(k);
        detail::wl1_signature(sig, c(k), neighbors(v), [&](NodeId u) { return c(u); });
        cur.emplace(k, interner.intern(t, sig));
        continue;
      }
      const NodeId p = key_p(k);
      const NodeId q = key_q(k);
      switch (kind_) {
        case TestKind::WL2:
        case TestKind::WL2_Local:
          first.clear();
          second.clear();
          if (kind_ == TestKind::WL2) {
            for (NodeId u = 0; u < n; ++u) first.push_back(c(pair_key(u, q)));
            for (NodeId v = 0; v < n; ++v) second.push_back(c(pair_key(p, v)));
          } else {
            for (NodeId u : neighbors(q)) first.push_back(c(pair_key(u, q)));
            for (NodeId v : neighbors(p)) second.push_back(c(pair_key(p, v)));
          }
          detail::two_branch_signature(sig, c(k), first, second);
          break;
        default:
          entries.clear();
          if (kind_ == TestKind::FWL2) {
            witnesses.resize(n);
            for (NodeId u = 0; u < n; ++u) witnesses[u] = u;
          } else {
            detail::merge_neighbors(neighbors(p), neighbors(q), witnesses);
          }
          for (NodeId u : witnesses) {
            entries.push_back(detail::pack(c(pair_key(u, q)), c(pair_key(p, u))));
          }
          detail::folklore_signature(sig, c(k), entries);
          break;
      }
      cur.emplace(k, interner.intern(t, sig));
    }
  }

  std::vector<ColorId> out;
  out.reserve(keys.size());
  for (Key k : keys) out.push_back(cur.at(k));
  return out;
}

std::vector<ColorId> ConeEvaluator::node_colors(std::span<const NodeId> nodes, std::size_t depth,
                                                Interner& interner) const {
  if (is_pair_kind(kind_)) throw std::logic_error("node colors requested from a pair test");
  std::vector<Key> keys;
  keys.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (!graph_.contains(v)) throw std::out_of_range("node " + std::to_string(v) + " out of range");
    keys.push_back(v);
  }
  return evaluate(std::move(keys), depth, interner);
}

std::vector<ColorId> ConeEvaluator::pair_colors(std::span<const Link> pairs, std::size_t depth,
                                                Interner& interner) const {
  if (!is_pair_kind(kind_)) throw std::logic_error("pair colors requested from a node test");
  std::vector<Key> keys;
  keys.reserve(pairs.size());
  for (const Link& l : pairs) {
    if (!graph_.contains(l.p) || !graph_.contains(l.q)) {
      throw std::out_of_range("pair " + to_string(l) + " out of range");
    }
    if (kind_ == TestKind::WL2_Local && l.p == l.q) {
      throw std::invalid_argument("WL2_Local has no diagonal pairs");
    }
    keys.push_back(pair_key(l.p, l.q));
  }
  return evaluate(std::move(keys), depth, interner);
}

std::vector<std::pair<ColorId, ColorId>> ConeEvaluator::first_folklore_entries(
    Link link, Interner& interner) const {
  if (kind_ != TestKind::FWL2 && kind_ != TestKind::FWL2_Local) {
    throw std::logic_error("folklore entries exist only for FWL2 and FWL2_Local");
  }
  std::vector<NodeId> witnesses;
  if (kind_ == TestKind::FWL2) {
    for (NodeId u = 0; u < graph_.node_count(); ++u) witnesses.push_back(u);
  } else {
    detail::merge_neighbors(neighbors(link.p), neighbors(link.q), witnesses);
  }
  std::vector<Link> pairs;
  for (NodeId u : witnesses) {
    pairs.push_back({u, link.q});
    pairs.push_back({link.p, u});
  }
  const auto colors = pair_colors(pairs, 0, interner);
  std::vector<std::pair<ColorId, ColorId>> out;
  for (std::size_t i = 0; i < witnesses.size(); ++i) out.emplace_back(colors[2 * i], colors[2 * i + 1]);
  return out;
}

std::size_t cn_from_fwl2_signature(const Graph& g, Link target) {
  ConeEvaluator cone(TestKind::FWL2, g, target);
  Interner interner;
  std::size_t count = 0;
  for (const auto& [a, b] : cone.first_folklore_entries(target, interner)) {
    const bool a_edge = interner.signature(0, a)[detail::kInitEdgeSlot] == 1;
    const bool b_edge = interner.signature(0, b)[detail::kInitEdgeSlot] == 1;
    if (a_edge && b_edge) ++count;
  }
  return count;
}

}  // namespace linkwl
