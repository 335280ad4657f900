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

#include <gtest/gtest.h>

#include "linkwl/corpus.hpp"
#include "linkwl/magic_square.hpp"
#include "linkwl/power.hpp"
#include "linkwl/refinement.hpp"

namespace linkwl {
namespace {

const Corpus& fixtures() {
  static const Corpus corpus = builtin_fixtures();
  return corpus;
}

const FixturePair& fixture(const std::string& name) {
  for (const auto& f : fixtures().fixtures) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("no fixture " + name);
}

std::optional<std::size_t> verdict(const FixturePair& f, TestKind kind) {
  const Corpus& c = fixtures();
  const Instance& a = c.instances[f.a];
  const Instance& b = c.instances[f.b];
  return indistinguishable(kind, a.target, c.graph_of(a), b.target, c.graph_of(b)).distinguished_at;
}

TEST(FixturesTest, FiveFamilies) {
  std::vector<std::string> names;
  for (const auto& f : fixtures().fixtures) names.push_back(f.name);
  EXPECT_EQ(names, (std::vector<std::string>{"F1", "F3", "F4a", "F4b", "F5"}));
}

TEST(FixturesTest, ManifestMatchesEngine) {
  for (const auto& f : fixtures().fixtures) {
    for (const auto& [kind, expected] : f.expected) {
      EXPECT_EQ(verdict(f, kind), expected) << f.name << " " << to_string(kind);
    }
  }
}

TEST(FixturesTest, Captions) {
  EXPECT_EQ(verdict(fixture("F3"), TestKind::WL2), 1u);
  EXPECT_EQ(verdict(fixture("F3"), TestKind::WL1), std::nullopt);
  EXPECT_EQ(verdict(fixture("F4a"), TestKind::WL2), std::nullopt);
  EXPECT_TRUE(verdict(fixture("F4a"), TestKind::FWL2_Local).has_value());
  EXPECT_TRUE(verdict(fixture("F4a"), TestKind::WL1_Label01).has_value());
  EXPECT_EQ(verdict(fixture("F4b"), TestKind::WL1_Label01), std::nullopt);
  EXPECT_TRUE(verdict(fixture("F4b"), TestKind::FWL2).has_value());
  EXPECT_TRUE(verdict(fixture("F4b"), TestKind::FWL2_Local).has_value());
  EXPECT_EQ(verdict(fixture("F5"), TestKind::FWL2), std::nullopt);
  EXPECT_TRUE(verdict(fixture("F5"), TestKind::WL1_Label01).has_value());
}

TEST(MagicSquareTest, StronglyRegularWitness) {
  const auto w = magic_square_search();
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(satisfies(w->first, SquarePredicate::kStronglyRegular));
  EXPECT_TRUE(satisfies(w->second, SquarePredicate::kStronglyRegular));
  EXPECT_EQ(w->first.node_count(), 16u);
  EXPECT_FALSE(indistinguishable(TestKind::FWL2, w->first_target, w->first, w->second_target,
                                 w->second)
                   .distinguished());
  EXPECT_EQ(indistinguishable(TestKind::WL1_Label01, w->first_target, w->first, w->second_target,
                              w->second)
                .distinguished_at,
            w->label01_iteration);
}

TEST(MagicSquareTest, LiteralPredicateHasNoWitness) {
  EXPECT_FALSE(magic_square_search({.predicate = SquarePredicate::kTwoCommonNeighbors}).has_value());
}

TEST(CorpusTest, RandomCorpusIsDeterministic) {
  const Corpus a = random_corpus({.count = 5});
  const Corpus b = random_corpus({.count = 5});
  ASSERT_EQ(a.graphs.size(), 5u);
  EXPECT_EQ(a.graphs, b.graphs);
  const Corpus c = random_corpus({.count = 5, .seed = 1});
  EXPECT_NE(a.graphs, c.graphs);
}

TEST(CorpusTest, ParseSpec) {
  const Corpus c = parse_corpus_spec("fixtures+er(n=5-6,p=0.5,count=3,seed=2)");
  EXPECT_EQ(c.graphs.size(), fixtures().graphs.size() + 3);
  EXPECT_EQ(c.fixtures.size(), fixtures().fixtures.size());
  EXPECT_THROW(parse_corpus_spec("bogus"), std::invalid_argument);
  EXPECT_THROW(parse_corpus_spec("er(q=1)"), std::invalid_argument);
}

TEST(CorpusTest, SeedReachesUnseededParts) {
  const Corpus a = parse_corpus_spec("er(count=3)", 5);
  const Corpus b = parse_corpus_spec("er(count=3,seed=5)");
  EXPECT_EQ(a.graphs, b.graphs);
}

TEST(SameKeyPairsTest, CountsPairsWithinGroups) {
  EXPECT_EQ(same_key_pairs({}), 0u);
  EXPECT_EQ(same_key_pairs({1, 2, 1, 1, 2, 3}), 4u);
}

TEST(PowerCheckTest, FixturesOnly) {
  const PowerReport report = power_check(fixtures(), kAllTestKinds);
  EXPECT_TRUE(report.fixtures_ok());
  EXPECT_EQ(report.instances, fixtures().instances.size());
  ASSERT_NE(report.implication(TestKind::WL1, TestKind::WL2_Local), nullptr);
  EXPECT_TRUE(report.implication(TestKind::WL1, TestKind::WL2_Local)->holds());
  EXPECT_TRUE(report.implication(TestKind::WL2_Local, TestKind::WL1)->holds());
  EXPECT_TRUE(report.implication(TestKind::WL1, TestKind::FWL2)->holds());
  ASSERT_TRUE(report.oracle.has_value());
  EXPECT_EQ(report.oracle->violations, 0u);
  for (const auto& t : report.trees) EXPECT_EQ(t.disagreements, 0u) << to_string(t.tree);
}

TEST(PowerCheckTest, JsonIsReproducible) {
  Corpus corpus = random_corpus({.count = 20, .max_n = 8});
  corpus.append(fixtures());
  const std::array kinds = {TestKind::WL1, TestKind::WL2_Local, TestKind::FWL2_Local};
  const std::string a = to_json(power_check(corpus, kinds), corpus);
  const std::string b = to_json(power_check(corpus, kinds, {.threads = 3}), corpus);
  EXPECT_EQ(a, b);
}

TEST(PowerCheckTest, MemoryGateStopsDenseKinds) {
  const std::array kinds = {TestKind::FWL2};
  EXPECT_THROW(power_check(fixtures(), kinds, {.limits = {.max_dense_pairs = 16}}), MemoryGateError);
}

}  // namespace
}  // namespace linkwl
