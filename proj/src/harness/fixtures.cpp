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

#include "linkwl/corpus.hpp"
#include "linkwl/generators.hpp"
#include "linkwl/magic_square.hpp"

namespace linkwl {
namespace {

using Expected = std::map<TestKind, std::optional<std::size_t>>;

constexpr std::optional<std::size_t> kSame = std::nullopt;

// Both C3 components of C3 + C3 on {0,1,2} and {3,4,5}, plus optional extra edges.
Graph two_triangles(std::vector<Link> extra = {}) {
  std::vector<Link> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(6, edges);
}

Graph hexagon(std::vector<Link> extra = {}) {
  std::vector<Link> edges = gen::cycle(6).edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(6, edges);
}

void add_pair(Corpus& corpus, std::string name, Graph g1, Link e1, Graph g2, Link e2,
              Expected expected) {
  const std::size_t a = corpus.instances.size();
  corpus.graphs.push_back(std::move(g1));
  corpus.instances.push_back({corpus.graphs.size() - 1, e1, name + ".a"});
  corpus.graphs.push_back(std::move(g2));
  corpus.instances.push_back({corpus.graphs.size() - 1, e2, name + ".b"});
  corpus.fixtures.push_back({std::move(name), a, a + 1, std::move(expected)});
}

}  // namespace

Corpus builtin_fixtures(const FixtureOptions& options) {
  using enum TestKind;
  Corpus corpus;
  corpus.spec = "fixtures";

  // Same endpoints up to symmetry, different distance.
  add_pair(corpus, "F1", gen::cycle(6), {0, 2}, gen::cycle(6), {0, 3},
           {{WL1, kSame}, {WL1_Label01, 2}, {WL2, kSame}, {WL2_Local, kSame}, {FWL2, 1},
            {FWL2_Local, 1}});

  // Graph size is visible to 2-WL only.
  add_pair(corpus, "F3", gen::complete(2), {0, 1},
           disjoint_union(gen::complete(2), gen::complete(2)).graph, {0, 1},
           {{WL1, kSame}, {WL1_Label01, kSame}, {WL2, 1}, {WL2_Local, kSame}, {FWL2, 1},
            {FWL2_Local, kSame}});

  // Masked target edges: a hexagon chord against the bridge of two triangles.
  add_pair(corpus, "F4a", hexagon({{0, 2}}), {0, 2}, two_triangles({{0, 3}}), {0, 3},
           {{WL1, kSame}, {WL1_Label01, 2}, {WL2, kSame}, {WL2_Local, kSame}, {FWL2, 1},
            {FWL2_Local, 1}});

  // Antipodal pair against a cross-component pair.
  add_pair(corpus, "F4b", gen::cycle(6), {0, 3}, two_triangles(), {0, 3},
           {{WL1, kSame}, {WL1_Label01, kSame}, {WL2, kSame}, {WL2_Local, kSame}, {FWL2, 2},
            {FWL2_Local, 2}});

  if (options.magic_square) {
    if (auto w = magic_square_search()) {
      add_pair(corpus, "F5", w->first, w->first_target, w->second, w->second_target,
               {{FWL2, kSame}, {WL1_Label01, 3}});
    }
  }
  return corpus;
}

}  // namespace linkwl
