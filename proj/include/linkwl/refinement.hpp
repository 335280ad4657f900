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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/interner.hpp"
#include "linkwl/test_kind.hpp"

namespace linkwl {

// How the units of a ColorMap are indexed.
enum class UnitLayout {
  kNodes,         // index v
  kDensePairs,    // index p * n + q, all n^2 ordered pairs including (p, p)
  kTrackedPairs,  // index into the sorted `tracked` list (local 2-WL)
};

// Colors of every unit after `iteration` rounds of one refinement session.
// Ids come from the session's Interner: dense 0..k-1 over everything interned
// in the same round (a single graph, or the union of graphs run in lockstep).
struct ColorMap {
  TestKind kind = TestKind::WL1;
  UnitLayout layout = UnitLayout::kNodes;
  std::size_t iteration = 0;
  std::uint64_t session = 0;
  std::size_t node_count = 0;
  std::optional<Link> mask;
  std::shared_ptr<const std::vector<Link>> tracked;  // kTrackedPairs only
  std::vector<ColorId> colors;

  std::size_t unit_count() const { return colors.size(); }
  std::size_t class_count() const;

  std::optional<std::size_t> index_of(Link pair) const;
  Link pair_at(std::size_t index) const;

  ColorId node_color(NodeId v) const;
  // Throws std::out_of_range for pairs that are not units of this map.
  ColorId pair_color(Link pair) const;
};

struct Limits {
  // Largest n^2 accepted by the kinds that keep all ordered pairs.
  std::size_t max_dense_pairs = std::size_t{1} << 22;
};

class MemoryGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ColorMap was handed to a session (or interner) that did not produce it.
class SessionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// `g` with the target edge removed (and 0/1 labels applied for WL1_Label01).
// Throws std::out_of_range / std::invalid_argument for a bad target.
Graph masked_working_graph(TestKind kind, const Graph& g, std::optional<Link> mask);

// Prepared state for refining one graph under one test kind.
//
// When `mask` is set, the pair's edge (if any) is removed from the working
// graph before anything else happens, so neither the target's initial color
// nor any neighborhood can see whether the link exists. WL1_Label01 also
// applies the 0/1 labeling for `mask`, which it therefore requires.
//
// `extra_targets` adds non-edge pairs to the tracked set of WL2_Local (both
// orientations) so several targets of one graph share a session. They are
// centers only and never appear in a neighborhood.
class RefinementSession {
 public:
  RefinementSession(TestKind kind, const Graph& g, std::optional<Link> mask,
                    std::span<const Link> extra_targets = {}, const Limits& limits = {});

  TestKind kind() const { return kind_; }
  const Graph& working_graph() const { return graph_; }
  std::optional<Link> mask() const { return mask_; }
  // WL2_Local only; null otherwise.
  const std::shared_ptr<const std::vector<Link>>& tracked_pairs() const { return tracked_; }

  ColorMap initial_colors(Interner& interner) const;
  ColorMap refine(const ColorMap& colors, Interner& interner) const;

  // c(p,q) for pair kinds, (c(p), c(q)) packed for node kinds.
  std::uint64_t ordered_link_color(const ColorMap& colors, Link link) const;
  // Orientation-free link color: {c(p,q), c(q,p)} or {c(p), c(q)} as a sorted
  // packed pair.
  std::uint64_t link_color(const ColorMap& colors, Link link) const;

  // The (c(u,q), c(p,u)) entries a 2-FWL-style update of `link` aggregates,
  // unsorted, in increasing u. Only for FWL2 and FWL2_Local.
  std::vector<std::pair<ColorId, ColorId>> folklore_entries(const ColorMap& colors,
                                                            Link link) const;

 private:
  void check_compatible(const ColorMap& colors, const Interner& interner) const;
  std::size_t pair_index(NodeId p, NodeId q) const { return std::size_t{p} * n_ + q; }

  TestKind kind_;
  Graph graph_;
  std::optional<Link> mask_;
  std::size_t n_ = 0;
  UnitLayout layout_ = UnitLayout::kNodes;
  std::vector<std::uint8_t> adjacency_;  // dense kinds, n x n
  // WL2_Local: sorted tracked pairs and, per unit, its two neighbor branches
  // as indices into `tracked_`.
  std::shared_ptr<const std::vector<Link>> tracked_;
  std::vector<std::size_t> branch_offsets_;
  std::vector<std::size_t> branch_units_;
  std::vector<std::size_t> branch_split_;  // start of branch 2 per unit
};

struct RefinementResult {
  TestKind test_kind = TestKind::WL1;
  std::optional<Link> masked_target;
  std::vector<ColorMap> history;  // t = 0 .. last
  // First t whose partition equals the one at t - 1; empty when capped.
  std::optional<std::size_t> stable_at;
  bool capped = false;

  const ColorMap& final_colors() const { return history.back(); }
};

// n^2 + 2 for pair kinds, n + 2 for node kinds.
std::size_t default_max_iters(TestKind kind, std::size_t node_count);

ColorMap init_colors(TestKind kind, const Graph& g, std::optional<Link> mask,
                     Interner& interner, const Limits& limits = {});
ColorMap refine_step(TestKind kind, const Graph& g, const ColorMap& colors,
                     Interner& interner, const Limits& limits = {});

RefinementResult refine_to_stable(TestKind kind, const Graph& g, std::optional<Link> mask,
                                  std::optional<std::size_t> max_iters = std::nullopt,
                                  const Limits& limits = {});

// {"test":..., "stable_at":..., "colors":{"t":[[p,q,color],...]}}; node kinds
// emit [v,color] rows. Deterministic for a given (graph, kind, mask).
std::string to_json(const RefinementResult& result);

struct Verdict {
  std::optional<std::size_t> distinguished_at;
  std::size_t rounds = 0;  // rounds executed after initialization
  bool stable = false;     // joint partition stopped splitting

  bool distinguished() const { return distinguished_at.has_value(); }
};

// Runs both instances in lockstep with one shared Interner, each with its own
// link masked, and compares orientation-free link colors each round.
Verdict indistinguishable(TestKind kind, Link e1, const Graph& g1, Link e2, const Graph& g2,
                          std::optional<std::size_t> max_iters = std::nullopt,
                          const Limits& limits = {});

// Counts the entries of the first 2-FWL update of masked `target` in which
// both pairs were edges at initialization. Equals |N(p) n N(q)|.
std::size_t cn_from_fwl2_signature(const Graph& g, Link target);

// True when every class of `next` lies inside a class of `prev` and the class
// count did not drop. Both maps must come from the same session.
bool refines(const ColorMap& prev, const ColorMap& next);

// Process-wide tally of the refinement invariants checked on every step
// (monotone class count, splits only, stabilization bound).
struct InvariantTally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};
InvariantTally invariant_tally();
void record_invariant_check(bool ok);

}  // namespace linkwl
