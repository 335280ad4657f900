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
#include <map>

#include "linkwl/lockstep.hpp"
#include "linkwl/power.hpp"

namespace linkwl {

std::uint64_t KindBatch::ordered_at(std::size_t instance, std::size_t round) const {
  const auto& trace = ordered[instance];
  return trace[std::min(round, trace.size() - 1)];
}

std::optional<std::size_t> KindBatch::first_difference(std::size_t a, std::size_t b) const {
  for (std::size_t r = 0; r < unordered[a].size(); ++r) {
    if (unordered[a][r] != unordered[b][r]) return r;
  }
  return std::nullopt;
}

KindBatch run_batch(TestKind kind, const Corpus& corpus, const BatchOptions& options) {
  struct Ref {
    std::size_t session = 0;
    Link link;
  };
  std::vector<std::vector<std::size_t>> by_graph(corpus.graphs.size());
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    by_graph[corpus.instances[i].graph].push_back(i);
  }

  // Targets that are edges get a masked session each (shared by both
  // orientations); non-edge targets of a graph share one unmasked session,
  // since masking a non-edge changes nothing. WL1_Label01 relabels per target.
  std::vector<RefinementSession> sessions;
  std::vector<Ref> refs(corpus.instances.size());
  std::size_t max_n = 0;
  for (std::size_t gi = 0; gi < corpus.graphs.size(); ++gi) {
    const Graph& g = corpus.graphs[gi];
    max_n = std::max(max_n, g.node_count());
    std::map<Link, std::size_t> per_target;
    std::vector<std::size_t> open;
    std::vector<Link> extras;
    for (std::size_t i : by_graph[gi]) {
      const Link t = corpus.instances[i].target;
      const Link key = t.canonical();
      if (kind == TestKind::WL1_Label01 || g.has_edge(t.p, t.q)) {
        auto [it, inserted] = per_target.emplace(key, sessions.size());
        if (inserted) sessions.emplace_back(kind, g, key, std::span<const Link>{}, options.limits);
        refs[i] = {it->second, t};
      } else {
        open.push_back(i);
        extras.push_back(key);
      }
    }
    if (!open.empty()) {
      std::sort(extras.begin(), extras.end());
      extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
      if (kind != TestKind::WL2_Local) extras.clear();
      for (std::size_t i : open) refs[i] = {sessions.size(), corpus.instances[i].target};
      sessions.emplace_back(kind, g, std::nullopt, extras, options.limits);
    }
  }

  Lockstep lockstep(std::move(sessions));
  KindBatch batch;
  batch.kind = kind;
  batch.unordered.resize(refs.size());
  batch.ordered.resize(refs.size());
  auto record = [&] {
    for (std::size_t i = 0; i < refs.size(); ++i) {
      const auto& session = lockstep.session(refs[i].session);
      const auto& colors = lockstep.colors(refs[i].session);
      batch.unordered[i].push_back(session.link_color(colors, refs[i].link));
      batch.ordered[i].push_back(session.ordered_link_color(colors, refs[i].link));
    }
  };
  record();
  const std::size_t cap = options.max_iters.value_or(default_max_iters(kind, max_n));
  while (lockstep.round() < cap) {
    const bool split = lockstep.step();
    record();
    if (!split) {
      batch.stable = true;
      break;
    }
  }
  batch.rounds = lockstep.round();
  return batch;
}

}  // namespace linkwl
