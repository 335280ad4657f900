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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/interner.hpp"
#include "linkwl/test_kind.hpp"

namespace linkwl {

// Evaluates the round-`depth` colors of a handful of units by refining only
// their dependency cone. Signatures are serialized exactly like a full
// RefinementSession, so partitions agree with refine_to_stable truncated at
// `depth`; ids are only comparable within one Interner.
//
// The mask is applied as a view, so construction costs O(deg(p) + deg(q))
// and `g` must outlive the evaluator.
class ConeEvaluator {
 public:
  ConeEvaluator(TestKind kind, const Graph& g, std::optional<Link> mask);

  TestKind kind() const { return kind_; }

  // Node kinds only.
  std::vector<ColorId> node_colors(std::span<const NodeId> nodes, std::size_t depth,
                                   Interner& interner) const;
  // Pair kinds only.
  std::vector<ColorId> pair_colors(std::span<const Link> pairs, std::size_t depth,
                                   Interner& interner) const;

  // (c0(u,q), c0(p,u)) for every entry of the first folklore update of
  // `link`. FWL2 and FWL2_Local only.
  std::vector<std::pair<ColorId, ColorId>> first_folklore_entries(Link link,
                                                                  Interner& interner) const;

 private:
  std::vector<ColorId> evaluate(std::vector<std::uint64_t> keys, std::size_t depth,
                                Interner& interner) const;
  void dependencies(std::uint64_t key, std::vector<std::uint64_t>& out) const;

  std::span<const NodeId> neighbors(NodeId v) const;
  bool has_edge(NodeId r, NodeId s) const;
  Label label(NodeId v) const;

  TestKind kind_;
  const Graph& graph_;
  std::optional<Link> mask_;
  std::vector<NodeId> masked_p_;  // N(p) without q
  std::vector<NodeId> masked_q_;  // N(q) without p
};

}  // namespace linkwl
