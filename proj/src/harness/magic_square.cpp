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

#include "linkwl/magic_square.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "linkwl/lockstep.hpp"
#include "linkwl/refinement.hpp"

namespace linkwl {
namespace {

struct Candidate {
  std::size_t square;
  Graph graph;
};

struct Probe {
  std::size_t candidate;
  Link target;
};

// Final orientation-free target colors of every probe under `kind`, all in
// one lockstep so they are comparable.
std::vector<std::uint64_t> final_colors(TestKind kind, const std::vector<Candidate>& candidates,
                                        const std::vector<Probe>& probes) {
  std::vector<RefinementSession> sessions;
  sessions.reserve(probes.size());
  for (const Probe& probe : probes) {
    sessions.emplace_back(kind, candidates[probe.candidate].graph, probe.target);
  }
  Lockstep lockstep(std::move(sessions));
  while (lockstep.step()) {
  }
  std::vector<std::uint64_t> out;
  out.reserve(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    out.push_back(lockstep.session(i).link_color(lockstep.colors(i), probes[i].target));
  }
  return out;
}

}  // namespace

Graph square_graph(const Square& square) {
  std::vector<Link> edges;
  for (NodeId a = 0; a < 16; ++a) {
    for (NodeId b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4 || square[a] == square[b]) edges.push_back({a, b});
    }
  }
  return Graph::from_edges(16, edges);
}

std::vector<Square> square_pool(SquarePool pool) {
  std::vector<Square> out;
  if (pool == SquarePool::kRows) {
    Square s{};
    for (std::size_t i = 0; i < 16; ++i) s[i] = static_cast<std::uint8_t>(i / 4 + 1);
    out.push_back(s);
    return out;
  }
  std::vector<std::array<std::uint8_t, 4>> perms;
  std::array<std::uint8_t, 4> row = {1, 2, 3, 4};
  do perms.push_back(row); while (std::next_permutation(row.begin(), row.end()));
  auto fits = [](const Square& s, std::size_t rows, const std::array<std::uint8_t, 4>& r) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t c = 0; c < 4; ++c) {
        if (s[i * 4 + c] == r[c]) return false;
      }
    }
    return true;
  };
  Square s{};
  // Rows in lexicographic order of permutations, columns kept distinct.
  auto place = [&](auto& self, std::size_t r) -> void {
    if (r == 4) {
      out.push_back(s);
      return;
    }
    for (const auto& p : perms) {
      if (!fits(s, r, p)) continue;
      std::copy(p.begin(), p.end(), s.begin() + static_cast<std::ptrdiff_t>(r * 4));
      self(self, r + 1);
    }
  };
  place(place, 0);
  return out;
}

bool satisfies(const Graph& g, SquarePredicate predicate) {
  const auto n = static_cast<NodeId>(g.node_count());
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (NodeId p = 0; p < n; ++p) {
    if (g.degree(p) != g.degree(0)) return false;
    for (NodeId q = p + 1; q < n; ++q) {
      std::size_t common = 0;
      for (NodeId u : g.neighbors(p)) common += g.has_edge(u, q) ? 1 : 0;
      if (predicate == SquarePredicate::kTwoCommonNeighbors) {
        if (common != 2) return false;
        continue;
      }
      auto& slot = g.has_edge(p, q) ? lambda : mu;
      if (!slot) slot = common;
      if (*slot != common) return false;
    }
  }
  return true;
}

std::optional<MagicWitness> magic_square_search(const MagicSearchOptions& options) {
  const std::vector<Square> pool =
      options.explicit_pool ? *options.explicit_pool : square_pool(options.pool);

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Graph g = square_graph(pool[i]);
    if (!satisfies(g, options.predicate)) continue;
    const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                  [&](const Candidate& c) { return c.graph == g; });
    if (!seen) candidates.push_back({i, std::move(g)});
  }
  if (candidates.empty()) return std::nullopt;

  // Square graphs are vertex-transitive, so targets (0, q) cover every pair
  // up to automorphism.
  std::vector<Probe> probes;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (NodeId q = 1; q < 16; ++q) probes.push_back({c, {0, q}});
  }
  const auto folklore = final_colors(TestKind::FWL2, candidates, probes);
  const auto labeled = final_colors(TestKind::WL1_Label01, candidates, probes);

  std::unordered_map<std::uint64_t, std::size_t> first_in_class;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    auto [it, inserted] = first_in_class.emplace(folklore[i], i);
    if (inserted || labeled[it->second] == labeled[i]) continue;
    const Probe& a = probes[it->second];
    const Probe& b = probes[i];
    const Candidate& ca = candidates[a.candidate];
    const Candidate& cb = candidates[b.candidate];
    const Verdict fwl = indistinguishable(TestKind::FWL2, a.target, ca.graph, b.target, cb.graph);
    const Verdict lab =
        indistinguishable(TestKind::WL1_Label01, a.target, ca.graph, b.target, cb.graph);
    if (fwl.distinguished() || !lab.distinguished()) continue;
    return MagicWitness{pool[ca.square], pool[cb.square], ca.graph,  cb.graph,
                        a.target,        b.target,        *lab.distinguished_at};
  }
  return std::nullopt;
}

std::string to_string(const Square& square) {
  std::string out;
  for (std::size_t i = 0; i < 16; ++i) {
    if (i > 0 && i % 4 == 0) out += '/';
    out += static_cast<char>('0' + square[i]);
  }
  return out;
}

}  // namespace linkwl
