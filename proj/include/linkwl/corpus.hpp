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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkwl/graph.hpp"
#include "linkwl/test_kind.hpp"

namespace linkwl {

// One (graph, target) entry. `graph` indexes Corpus::graphs.
struct Instance {
  std::size_t graph = 0;
  Link target;
  std::string tag;
};

// A named pair of instances with the verdict each listed kind must produce:
// the first distinguishing iteration, or nullopt for "indistinguishable".
struct FixturePair {
  std::string name;
  std::size_t a = 0;
  std::size_t b = 0;
  std::map<TestKind, std::optional<std::size_t>> expected;
};

struct Corpus {
  std::string spec;
  std::vector<Graph> graphs;
  std::vector<Instance> instances;
  std::vector<FixturePair> fixtures;

  const Graph& graph_of(const Instance& inst) const { return graphs[inst.graph]; }
  // Appends `other`, shifting its graph and instance indices.
  void append(const Corpus& other);
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 20230;

struct RandomCorpusSpec {
  std::size_t count = 200;
  std::size_t min_n = 4;
  std::size_t max_n = 12;
  std::vector<double> densities = {0.2, 0.35, 0.5};
  std::uint64_t seed = kDefaultCorpusSeed;
};

// Erdos-Renyi graphs with n uniform in [min_n, max_n] and a density drawn
// from `densities`; every ordered pair p != q is an instance.
Corpus random_corpus(const RandomCorpusSpec& spec);

// All ordered pairs p != q of one graph.
Corpus all_pairs_corpus(const Graph& g, std::string tag);

struct FixtureOptions {
  bool magic_square = true;
};

// F1, F3, F4a, F4b and, when the search finds one, F5. Expected verdicts are
// frozen here and asserted by the tests.
Corpus builtin_fixtures(const FixtureOptions& options = {});

// "fixtures", "random", "er(n=4-12,p=0.2/0.35/0.5,count=200,seed=S)" or
// "all_pairs(PATH)", joined with '+'. `random_seed` seeds the random parts
// that do not name a seed. Throws std::invalid_argument.
Corpus parse_corpus_spec(std::string_view spec, std::uint64_t random_seed = kDefaultCorpusSeed);

}  // namespace linkwl
