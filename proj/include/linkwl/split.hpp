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

#include <cstdint>
#include <string>
#include <vector>

#include "linkwl/graph.hpp"

namespace linkwl {

// Train/validation/test partition of a graph's links. Positives are existing
// edges removed from `train_graph`; negatives are non-edges of the original
// graph, as many as there are positives in the same set.
struct LinkSplit {
  Graph train_graph;
  std::vector<Link> val_pos;
  std::vector<Link> val_neg;
  std::vector<Link> test_pos;
  std::vector<Link> test_neg;
  std::uint64_t seed = 0;
};

// Counts are floor(frac * m). Negatives are drawn without replacement by
// rejection sampling, falling back to enumerating all non-edges after
// 50x the required number of attempts. Throws std::invalid_argument for
// fractions outside (0, 1) with sum < 1, for graphs too small to give
// non-empty sets, and when there are not enough non-edges.
LinkSplit split_links(const Graph& g, double test_frac, double val_frac, std::uint64_t seed);

std::string split_to_json(const LinkSplit& split);

}  // namespace linkwl
