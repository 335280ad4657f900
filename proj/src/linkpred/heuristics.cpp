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

#include <stdexcept>

#include "linkwl/linkpred.hpp"

namespace linkwl {
namespace {

void check_pair(const Graph& g, NodeId p, NodeId q) {
  if (!g.contains(p) || !g.contains(q)) {
    throw std::out_of_range("pair " + to_string(Link{p, q}) + " is outside the graph");
  }
  if (p == q) throw std::invalid_argument("heuristics need two distinct nodes");
}

// Visits N(p) ∩ N(q); neighbor lists are sorted.
template <typename F>
void for_common(const Graph& g, NodeId p, NodeId q, F&& f) {
  auto a = g.neighbors(p);
  auto b = g.neighbors(q);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      f(a[i]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

double heuristic_cn(const Graph& g, NodeId p, NodeId q) {
  check_pair(g, p, q);
  double count = 0;
  for_common(g, p, q, [&](NodeId) { count += 1; });
  return count;
}

double heuristic_pa(const Graph& g, NodeId p, NodeId q) {
  check_pair(g, p, q);
  return static_cast<double>(g.degree(p)) * static_cast<double>(g.degree(q));
}

double heuristic_ra(const Graph& g, NodeId p, NodeId q) {
  check_pair(g, p, q);
  double sum = 0;
  for_common(g, p, q, [&](NodeId u) { sum += 1.0 / static_cast<double>(g.degree(u)); });
  return sum;
}

}  // namespace linkwl
