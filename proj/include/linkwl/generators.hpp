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

#include "linkwl/graph.hpp"
#include "linkwl/random.hpp"

namespace linkwl::gen {

Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
// Center 0, leaves 1..leaves.
Graph star(std::size_t leaves);

// G(n, p): each of the n(n-1)/2 pairs independently, in lexicographic order.
Graph erdos_renyi(std::size_t n, double p, Rng& rng);
// G(n, m): m distinct edges chosen uniformly. Throws if m > n(n-1)/2.
Graph gnm(std::size_t n, std::size_t m, Rng& rng);

// Each node joined to its k/2 nearest neighbors on either side (k even).
Graph ring_lattice(std::size_t n, std::size_t k);
// Ring lattice whose edges (i, i+j) are rewired with probability beta to a
// uniformly chosen endpoint that creates neither a loop nor a duplicate.
Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);

}  // namespace linkwl::gen
