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

#include "linkwl/generators.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace linkwl::gen {

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph path(std::size_t n) {
  std::vector<Link> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<Link> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Link> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Link> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::vector<Link> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph gnm(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 2 || m > n * (n - 1) / 2) throw std::invalid_argument("gnm: too many edges");
  std::set<Link> chosen;
  while (chosen.size() < m) {
    auto u = static_cast<NodeId>(rng.below(n));
    auto v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    chosen.insert(Link{u, v}.canonical());
  }
  std::vector<Link> edges(chosen.begin(), chosen.end());
  return Graph::from_edges(n, edges);
}

namespace {

std::vector<Link> lattice_edges(std::size_t n, std::size_t k) {
  if (k % 2 != 0 || k == 0 || k >= n) {
    throw std::invalid_argument("ring lattice needs even k with 0 < k < n");
  }
  std::vector<Link> edges;
  for (std::size_t j = 1; j <= k / 2; ++j)
    for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + j) % n)});
  return edges;
}

}  // namespace

Graph ring_lattice(std::size_t n, std::size_t k) {
  return Graph::from_edges(n, lattice_edges(n, k));
}

Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Link> edges = lattice_edges(n, k);
  std::set<Link> present;
  for (const Link& e : edges) present.insert(e.canonical());
  for (Link& e : edges) {
    if (!rng.bernoulli(beta)) continue;
    // Skip saturated sources rather than loop forever.
    std::size_t degree = 0;
    for (const Link& f : present) degree += (f.p == e.p || f.q == e.p) ? 1 : 0;
    if (degree >= n - 1) continue;
    NodeId target = 0;
    do {
      target = static_cast<NodeId>(rng.below(n));
    } while (target == e.p || present.count(Link{e.p, target}.canonical()) != 0);
    present.erase(e.canonical());
    e.q = target;
    present.insert(e.canonical());
  }
  std::vector<Link> final_edges(present.begin(), present.end());
  return Graph::from_edges(n, final_edges);
}

}  // namespace linkwl::gen
