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

#include "linkwl/refinement.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "json.hpp"
#include "linkwl/lockstep.hpp"
#include "signatures.hpp"

namespace linkwl {
namespace {

std::atomic<std::uint64_t> g_checks{0};
std::atomic<std::uint64_t> g_violations{0};

constexpr ColorId kNoColor = std::numeric_limits<ColorId>::max();

UnitLayout layout_for(TestKind kind) {
  if (!is_pair_kind(kind)) return UnitLayout::kNodes;
  return kind == TestKind::WL2_Local ? UnitLayout::kTrackedPairs : UnitLayout::kDensePairs;
}

void check_link(const Graph& g, Link link, const char* what) {
  if (!g.contains(link.p) || !g.contains(link.q)) {
    throw std::out_of_range(std::string(what) + " " + to_string(link) +
                            " is outside the graph (n=" + std::to_string(g.node_count()) +
                            ")");
  }
  if (link.p == link.q) {
    throw std::invalid_argument(std::string(what) + " " + to_string(link) +
                                " needs two distinct nodes");
  }
}

}  // namespace

Graph masked_working_graph(TestKind kind, const Graph& g, std::optional<Link> mask) {
  if (mask) check_link(g, *mask, "target");
  Graph working = mask ? g.without_edge(*mask) : g;
  if (kind == TestKind::WL1_Label01) {
    if (!mask) throw std::invalid_argument("WL1_Label01 needs a target link to label");
    working = label01(working, *mask);
  }
  return working;
}

std::size_t ColorMap::class_count() const {
  if (colors.empty()) return 0;
  std::vector<char> seen(*std::max_element(colors.begin(), colors.end()) + std::size_t{1}, 0);
  std::size_t count = 0;
  for (ColorId c : colors) {
    if (!seen[c]) {
      seen[c] = 1;
      ++count;
    }
  }
  return count;
}

std::optional<std::size_t> ColorMap::index_of(Link pair) const {
  switch (layout) {
    case UnitLayout::kNodes:
      return std::nullopt;
    case UnitLayout::kDensePairs:
      if (pair.p >= node_count || pair.q >= node_count) return std::nullopt;
      return std::size_t{pair.p} * node_count + pair.q;
    case UnitLayout::kTrackedPairs: {
      auto it = std::lower_bound(tracked->begin(), tracked->end(), pair);
      if (it == tracked->end() || *it != pair) return std::nullopt;
      return static_cast<std::size_t>(it - tracked->begin());
    }
  }
  return std::nullopt;
}

Link ColorMap::pair_at(std::size_t index) const {
  switch (layout) {
    case UnitLayout::kDensePairs:
      return {static_cast<NodeId>(index / node_count), static_cast<NodeId>(index % node_count)};
    case UnitLayout::kTrackedPairs:
      return tracked->at(index);
    case UnitLayout::kNodes:
      break;
  }
  throw std::logic_error("node-indexed colors have no pair units");
}

ColorId ColorMap::node_color(NodeId v) const {
  if (layout != UnitLayout::kNodes) throw std::logic_error("pair-indexed colors have no node units");
  return colors.at(v);
}

ColorId ColorMap::pair_color(Link pair) const {
  auto index = index_of(pair);
  if (!index) throw std::out_of_range("pair " + to_string(pair) + " is not tracked");
  return colors[*index];
}

RefinementSession::RefinementSession(TestKind kind, const Graph& g, std::optional<Link> mask,
                                     std::span<const Link> extra_targets,
                                     const Limits& limits)
    : kind_(kind), mask_(mask), layout_(layout_for(kind)) {
  graph_ = masked_working_graph(kind_, g, mask_);
  n_ = graph_.node_count();
  if (!extra_targets.empty() && layout_ != UnitLayout::kTrackedPairs) {
    throw std::invalid_argument("extra targets only apply to WL2_Local");
  }

  if (layout_ == UnitLayout::kDensePairs) {
    if (n_ * n_ > limits.max_dense_pairs) {
      throw MemoryGateError(std::string(to_string(kind_)) + " needs " + std::to_string(n_ * n_) +
                            " pair colors for n=" + std::to_string(n_) + ", above the limit of " +
                            std::to_string(limits.max_dense_pairs));
    }
    adjacency_.assign(n_ * n_, 0);
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId u : graph_.neighbors(v)) adjacency_[pair_index(v, u)] = 1;
    }
  }

  if (layout_ == UnitLayout::kTrackedPairs) {
    std::vector<Link> tracked;
    tracked.reserve(graph_.slot_count() + 2 + 2 * extra_targets.size());
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId u : graph_.neighbors(v)) tracked.push_back({v, u});
    }
    auto add_target = [&](Link t) {
      tracked.push_back(t);
      tracked.push_back(t.reversed());
    };
    if (mask_) add_target(*mask_);
    for (const Link& t : extra_targets) {
      check_link(graph_, t, "target");
      add_target(t);
    }
    std::sort(tracked.begin(), tracked.end());
    tracked.erase(std::unique(tracked.begin(), tracked.end()), tracked.end());

    auto index = [&](Link l) {
      return static_cast<std::size_t>(std::lower_bound(tracked.begin(), tracked.end(), l) -
                                      tracked.begin());
    };
    branch_offsets_.reserve(tracked.size() + 1);
    branch_offsets_.push_back(0);
    for (const Link& unit : tracked) {
      for (NodeId u : graph_.neighbors(unit.q)) branch_units_.push_back(index({u, unit.q}));
      branch_split_.push_back(branch_units_.size());
      for (NodeId v : graph_.neighbors(unit.p)) branch_units_.push_back(index({unit.p, v}));
      branch_offsets_.push_back(branch_units_.size());
    }
    tracked_ = std::make_shared<const std::vector<Link>>(std::move(tracked));
  }
}

void RefinementSession::check_compatible(const ColorMap& colors, const Interner& interner) const {
  if (colors.session != interner.session_id()) {
    throw SessionMismatch("colors were produced under a different interner");
  }
  std::size_t units = 0;
  switch (layout_) {
    case UnitLayout::kNodes: units = n_; break;
    case UnitLayout::kDensePairs: units = n_ * n_; break;
    case UnitLayout::kTrackedPairs: units = tracked_->size(); break;
  }
  if (colors.kind != kind_ || colors.layout != layout_ || colors.node_count != n_ ||
      colors.mask != mask_ || colors.unit_count() != units ||
      (layout_ == UnitLayout::kTrackedPairs && colors.tracked != tracked_)) {
    throw SessionMismatch("colors do not belong to this refinement session");
  }
}

ColorMap RefinementSession::initial_colors(Interner& interner) const {
  ColorMap out;
  out.kind = kind_;
  out.layout = layout_;
  out.iteration = 0;
  out.session = interner.session_id();
  out.node_count = n_;
  out.mask = mask_;
  out.tracked = tracked_;
  detail::Signature sig;
  switch (layout_) {
    case UnitLayout::kNodes:
      out.colors.resize(n_);
      for (NodeId v = 0; v < n_; ++v) {
        detail::node_init_signature(sig, graph_.label(v));
        out.colors[v] = interner.intern(0, sig);
      }
      break;
    case UnitLayout::kDensePairs:
      out.colors.resize(n_ * n_);
      for (NodeId p = 0; p < n_; ++p) {
        for (NodeId q = 0; q < n_; ++q) {
          detail::pair_init_signature(sig, graph_.label(p), graph_.label(q),
                                      adjacency_[pair_index(p, q)] != 0, p == q);
          out.colors[pair_index(p, q)] = interner.intern(0, sig);
        }
      }
      break;
    case UnitLayout::kTrackedPairs:
      out.colors.resize(tracked_->size());
      for (std::size_t i = 0; i < tracked_->size(); ++i) {
        const Link& unit = (*tracked_)[i];
        detail::pair_init_signature(sig, graph_.label(unit.p), graph_.label(unit.q),
                                    graph_.has_edge(unit.p, unit.q), false);
        out.colors[i] = interner.intern(0, sig);
      }
      break;
  }
  return out;
}

ColorMap RefinementSession::refine(const ColorMap& colors, Interner& interner) const {
  check_compatible(colors, interner);
  const std::size_t round = colors.iteration + 1;
  const auto& c = colors.colors;
  ColorMap out = colors;
  out.iteration = round;
  auto& next = out.colors;
  detail::Signature sig;

  switch (kind_) {
    case TestKind::WL1:
    case TestKind::WL1_Label01:
      for (NodeId v = 0; v < n_; ++v) {
        detail::wl1_signature(sig, c[v], graph_.neighbors(v), [&](NodeId u) { return c[u]; });
        next[v] = interner.intern(round, sig);
      }
      break;

    case TestKind::WL2: {
      // Sorted rows c(p, *) and columns c(*, q), shared by all n^2 signatures.
      std::vector<ColorId> rows(c.begin(), c.end());
      std::vector<ColorId> cols(n_ * n_);
      for (NodeId p = 0; p < n_; ++p) {
        auto row = rows.begin() + static_cast<std::ptrdiff_t>(pair_index(p, 0));
        std::sort(row, row + static_cast<std::ptrdiff_t>(n_));
      }
      for (NodeId q = 0; q < n_; ++q) {
        for (NodeId u = 0; u < n_; ++u) cols[pair_index(q, u)] = c[pair_index(u, q)];
        auto col = cols.begin() + static_cast<std::ptrdiff_t>(pair_index(q, 0));
        std::sort(col, col + static_cast<std::ptrdiff_t>(n_));
      }
      for (NodeId p = 0; p < n_; ++p) {
        for (NodeId q = 0; q < n_; ++q) {
          sig.clear();
          sig.push_back(c[pair_index(p, q)]);
          sig.push_back(static_cast<std::uint32_t>(n_));
          sig.insert(sig.end(), cols.begin() + static_cast<std::ptrdiff_t>(pair_index(q, 0)),
                     cols.begin() + static_cast<std::ptrdiff_t>(pair_index(q, 0) + n_));
          sig.insert(sig.end(), rows.begin() + static_cast<std::ptrdiff_t>(pair_index(p, 0)),
                     rows.begin() + static_cast<std::ptrdiff_t>(pair_index(p, 0) + n_));
          next[pair_index(p, q)] = interner.intern(round, sig);
        }
      }
      break;
    }

    case TestKind::FWL2:
    case TestKind::FWL2_Local: {
      std::vector<std::uint64_t> entries;
      std::vector<NodeId> witnesses;
      for (NodeId p = 0; p < n_; ++p) {
        for (NodeId q = 0; q < n_; ++q) {
          entries.clear();
          if (kind_ == TestKind::FWL2) {
            for (NodeId u = 0; u < n_; ++u) {
              entries.push_back(detail::pack(c[pair_index(u, q)], c[pair_index(p, u)]));
            }
          } else {
            detail::merge_neighbors(graph_.neighbors(p), graph_.neighbors(q), witnesses);
            for (NodeId u : witnesses) {
              entries.push_back(detail::pack(c[pair_index(u, q)], c[pair_index(p, u)]));
            }
          }
          detail::folklore_signature(sig, c[pair_index(p, q)], entries);
          next[pair_index(p, q)] = interner.intern(round, sig);
        }
      }
      break;
    }

    case TestKind::WL2_Local: {
      std::vector<ColorId> first;
      std::vector<ColorId> second;
      for (std::size_t i = 0; i < tracked_->size(); ++i) {
        first.clear();
        second.clear();
        for (std::size_t k = branch_offsets_[i]; k < branch_split_[i]; ++k) {
          first.push_back(c[branch_units_[k]]);
        }
        for (std::size_t k = branch_split_[i]; k < branch_offsets_[i + 1]; ++k) {
          second.push_back(c[branch_units_[k]]);
        }
        detail::two_branch_signature(sig, c[i], first, second);
        next[i] = interner.intern(round, sig);
      }
      break;
    }
  }

  record_invariant_check(refines(colors, out));
  return out;
}

std::uint64_t RefinementSession::ordered_link_color(const ColorMap& colors, Link link) const {
  if (layout_ == UnitLayout::kNodes) {
    return detail::pack(colors.node_color(link.p), colors.node_color(link.q));
  }
  return colors.pair_color(link);
}

std::uint64_t RefinementSession::link_color(const ColorMap& colors, Link link) const {
  ColorId a = 0;
  ColorId b = 0;
  if (layout_ == UnitLayout::kNodes) {
    a = colors.node_color(link.p);
    b = colors.node_color(link.q);
  } else {
    a = colors.pair_color(link);
    b = colors.pair_color(link.reversed());
  }
  return detail::pack(std::min(a, b), std::max(a, b));
}

std::vector<std::pair<ColorId, ColorId>> RefinementSession::folklore_entries(
    const ColorMap& colors, Link link) const {
  if (kind_ != TestKind::FWL2 && kind_ != TestKind::FWL2_Local) {
    throw std::logic_error("folklore entries exist only for FWL2 and FWL2_Local");
  }
  std::vector<NodeId> witnesses;
  if (kind_ == TestKind::FWL2) {
    for (NodeId u = 0; u < n_; ++u) witnesses.push_back(u);
  } else {
    detail::merge_neighbors(graph_.neighbors(link.p), graph_.neighbors(link.q), witnesses);
  }
  std::vector<std::pair<ColorId, ColorId>> out;
  out.reserve(witnesses.size());
  for (NodeId u : witnesses) {
    out.emplace_back(colors.pair_color({u, link.q}), colors.pair_color({link.p, u}));
  }
  return out;
}

std::size_t default_max_iters(TestKind kind, std::size_t node_count) {
  return is_pair_kind(kind) ? node_count * node_count + 2 : node_count + 2;
}

ColorMap init_colors(TestKind kind, const Graph& g, std::optional<Link> mask,
                     Interner& interner, const Limits& limits) {
  return RefinementSession(kind, g, mask, {}, limits).initial_colors(interner);
}

ColorMap refine_step(TestKind kind, const Graph& g, const ColorMap& colors, Interner& interner,
                     const Limits& limits) {
  if (colors.kind != kind) throw SessionMismatch("colors were produced by another test kind");
  // Rebuild the session's working graph; tracked pairs must line up exactly.
  RefinementSession session(kind, g, colors.mask, {}, limits);
  if (colors.layout == UnitLayout::kTrackedPairs) {
    if (!colors.tracked || *colors.tracked != *session.tracked_pairs()) {
      throw SessionMismatch("tracked pairs do not match the graph");
    }
    ColorMap adopted = colors;
    adopted.tracked = session.tracked_pairs();
    return session.refine(adopted, interner);
  }
  return session.refine(colors, interner);
}

RefinementResult refine_to_stable(TestKind kind, const Graph& g, std::optional<Link> mask,
                                  std::optional<std::size_t> max_iters, const Limits& limits) {
  const std::size_t cap = max_iters.value_or(default_max_iters(kind, g.node_count()));
  if (cap < 1) throw std::invalid_argument("max_iters must be at least 1");
  RefinementSession session(kind, g, mask, {}, limits);
  Interner interner;
  RefinementResult result;
  result.test_kind = kind;
  result.masked_target = mask;
  result.history.push_back(session.initial_colors(interner));
  for (std::size_t t = 1; t <= cap; ++t) {
    ColorMap next = session.refine(result.history.back(), interner);
    const bool same = next.class_count() == result.history.back().class_count();
    result.history.push_back(std::move(next));
    interner.release_before(t);
    if (same) {
      result.stable_at = t;
      break;
    }
  }
  result.capped = !result.stable_at.has_value();
  if (result.stable_at) {
    record_invariant_check(*result.stable_at <= result.history.front().unit_count() + 1);
  }
  return result;
}

std::string to_json(const RefinementResult& result) {
  nlohmann::ordered_json out;
  out["test"] = std::string(to_string(result.test_kind));
  if (result.masked_target) {
    out["masked_target"] = {result.masked_target->p, result.masked_target->q};
  } else {
    out["masked_target"] = nullptr;
  }
  if (result.stable_at) {
    out["stable_at"] = *result.stable_at;
  } else {
    out["stable_at"] = nullptr;
  }
  out["capped"] = result.capped;
  nlohmann::ordered_json rounds = nlohmann::ordered_json::object();
  for (const ColorMap& cm : result.history) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cm.unit_count(); ++i) {
      if (cm.layout == UnitLayout::kNodes) {
        rows.push_back({i, cm.colors[i]});
      } else {
        const Link pair = cm.pair_at(i);
        rows.push_back({pair.p, pair.q, cm.colors[i]});
      }
    }
    rounds[std::to_string(cm.iteration)] = std::move(rows);
  }
  out["colors"] = std::move(rounds);
  return out.dump();
}

Verdict indistinguishable(TestKind kind, Link e1, const Graph& g1, Link e2, const Graph& g2,
                          std::optional<std::size_t> max_iters, const Limits& limits) {
  check_link(g1, e1, "link");
  check_link(g2, e2, "link");
  std::vector<RefinementSession> sessions;
  sessions.emplace_back(kind, g1, e1, std::span<const Link>{}, limits);
  sessions.emplace_back(kind, g2, e2, std::span<const Link>{}, limits);
  Lockstep lockstep(std::move(sessions));
  const std::size_t cap =
      max_iters.value_or(default_max_iters(kind, g1.node_count() + g2.node_count()));

  auto differ = [&] {
    return lockstep.session(0).link_color(lockstep.colors(0), e1) !=
           lockstep.session(1).link_color(lockstep.colors(1), e2);
  };
  Verdict verdict;
  if (differ()) {
    verdict.distinguished_at = 0;
    return verdict;
  }
  for (std::size_t t = 1; t <= cap; ++t) {
    const bool split = lockstep.step();
    verdict.rounds = t;
    if (differ()) {
      verdict.distinguished_at = t;
      return verdict;
    }
    if (!split) {
      verdict.stable = true;
      return verdict;
    }
  }
  return verdict;
}

bool refines(const ColorMap& prev, const ColorMap& next) {
  if (prev.unit_count() != next.unit_count()) return false;
  std::size_t bound = 0;
  for (ColorId c : next.colors) bound = std::max<std::size_t>(bound, c + std::size_t{1});
  std::vector<ColorId> parent(bound, kNoColor);
  for (std::size_t i = 0; i < next.unit_count(); ++i) {
    ColorId& slot = parent[next.colors[i]];
    if (slot == kNoColor) {
      slot = prev.colors[i];
    } else if (slot != prev.colors[i]) {
      return false;
    }
  }
  return next.class_count() >= prev.class_count();
}

InvariantTally invariant_tally() { return {g_checks.load(), g_violations.load()}; }

void record_invariant_check(bool ok) {
  g_checks.fetch_add(1, std::memory_order_relaxed);
  if (!ok) g_violations.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace linkwl
