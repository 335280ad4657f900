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

// Signature layouts shared by the full-graph sessions and the cone evaluator.
// Both paths must serialize identically so their partitions can be compared.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/interner.hpp"

namespace linkwl::detail {

using Signature = std::vector<std::uint32_t>;

inline void node_init_signature(Signature& sig, Label label) { sig.assign({label}); }

inline void pair_init_signature(Signature& sig, Label lp, Label lq, bool edge, bool diagonal) {
  sig.assign({lp, lq, edge ? 1u : 0u, diagonal ? 1u : 0u});
}

// Position of the edge indicator in pair_init_signature.
inline constexpr std::size_t kInitEdgeSlot = 2;

// [prev, sorted neighbor colors]
template <typename ColorOf>
void wl1_signature(Signature& sig, ColorId prev, std::span<const NodeId> nbrs, ColorOf color) {
  sig.clear();
  sig.push_back(prev);
  for (NodeId u : nbrs) sig.push_back(color(u));
  std::sort(sig.begin() + 1, sig.end());
}

// [prev, |branch1|, sorted branch1, sorted branch2]. Used by WL2 (branches
// over all nodes) and WL2_Local (branches over neighbors).
inline void two_branch_signature(Signature& sig, ColorId prev, std::span<const ColorId> first,
                                 std::span<const ColorId> second) {
  sig.clear();
  sig.reserve(2 + first.size() + second.size());
  sig.push_back(prev);
  sig.push_back(static_cast<std::uint32_t>(first.size()));
  sig.insert(sig.end(), first.begin(), first.end());
  std::sort(sig.begin() + 2, sig.end());
  const auto mid = sig.size();
  sig.insert(sig.end(), second.begin(), second.end());
  std::sort(sig.begin() + static_cast<std::ptrdiff_t>(mid), sig.end());
}

inline std::uint64_t pack(ColorId a, ColorId b) {
  return (std::uint64_t{a} << 32) | b;
}

// [prev, a0, b0, a1, b1, ...] with the (a, b) entries sorted.
inline void folklore_signature(Signature& sig, ColorId prev, std::vector<std::uint64_t>& entries) {
  std::sort(entries.begin(), entries.end());
  sig.clear();
  sig.reserve(1 + 2 * entries.size());
  sig.push_back(prev);
  for (std::uint64_t e : entries) {
    sig.push_back(static_cast<std::uint32_t>(e >> 32));
    sig.push_back(static_cast<std::uint32_t>(e));
  }
}

// Sorted union of two sorted neighbor lists.
inline void merge_neighbors(std::span<const NodeId> a, std::span<const NodeId> b,
                            std::vector<NodeId>& out) {
  out.clear();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace linkwl::detail
