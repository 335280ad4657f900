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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkwl/corpus.hpp"
#include "linkwl/refinement.hpp"
#include "linkwl/test_kind.hpp"
#include "linkwl/unroll.hpp"

namespace linkwl {

// Per-round target colors of every corpus instance under one kind. All
// sessions of the corpus run in one lockstep, so colors of any two instances
// are comparable round by round.
struct KindBatch {
  TestKind kind = TestKind::WL1;
  std::size_t rounds = 0;  // refinement rounds after initialization
  bool stable = false;     // joint partition stopped splitting within the cap
  std::vector<std::vector<std::uint64_t>> unordered;  // [instance][round]
  std::vector<std::vector<std::uint64_t>> ordered;    // [instance][round]

  std::uint64_t final_color(std::size_t instance) const { return unordered[instance].back(); }
  // Color at `round`, or at the last round when the batch stopped earlier.
  std::uint64_t ordered_at(std::size_t instance, std::size_t round) const;
  std::optional<std::size_t> first_difference(std::size_t a, std::size_t b) const;
};

struct BatchOptions {
  std::optional<std::size_t> max_iters{};
  Limits limits{};
};

KindBatch run_batch(TestKind kind, const Corpus& corpus, const BatchOptions& options = {});

struct KindSummary {
  TestKind kind = TestKind::WL1;
  std::size_t rounds = 0;
  bool stable = false;
  std::size_t classes = 0;
  std::uint64_t distinguished_pairs = 0;
};

struct Implication {
  TestKind from = TestKind::WL1;
  TestKind to = TestKind::WL1;
  // Instance pairs that `from` distinguishes and `to` does not.
  std::uint64_t violations = 0;
  bool holds() const { return violations == 0; }
};

struct Witness {
  std::string relation;
  std::size_t instance_a = 0;
  std::size_t instance_b = 0;
  std::size_t iteration = 0;  // first round the distinguishing kind separates them
};

// One cell of the expected power table and whether the corpus agreed.
struct TableCheck {
  std::string cell;
  std::string expected;
  bool ok = false;
  std::string detail;
};

struct FixtureOutcome {
  std::string fixture;
  TestKind kind = TestKind::WL1;
  std::optional<std::size_t> expected;
  std::optional<std::size_t> observed;
  bool ok() const { return expected == observed; }
};

struct OracleSoundness {
  std::size_t instances = 0;  // instances with n <= bound
  std::size_t iso_classes = 0;
  std::uint64_t isomorphic_pairs = 0;
  std::uint64_t checked = 0;  // isomorphic pairs x kinds
  std::uint64_t violations = 0;
};

struct TreeAgreement {
  TreeKind tree = TreeKind::kB;
  std::size_t depth = 0;
  std::uint64_t pairs = 0;
  std::uint64_t disagreements = 0;
};

struct PowerOptions {
  std::optional<std::size_t> max_iters{};
  std::size_t threads = 1;
  bool oracle_checks = true;
  std::size_t oracle_max_nodes = 7;
  std::size_t tree_max_depth = 3;
  Limits limits{};
};

struct PowerReport {
  std::string corpus;
  std::size_t instances = 0;
  std::uint64_t instance_pairs = 0;
  std::vector<KindSummary> kinds;
  std::vector<Implication> implications;
  std::vector<Witness> witnesses;
  std::vector<TableCheck> table;
  std::vector<FixtureOutcome> fixtures;
  std::optional<OracleSoundness> oracle;
  std::vector<TreeAgreement> trees;

  bool table_ok() const;
  bool fixtures_ok() const;
  const Implication* implication(TestKind from, TestKind to) const;
};

PowerReport power_check(const Corpus& corpus, std::span<const TestKind> kinds,
                        const PowerOptions& options = {});

// Stable key order; no timing fields, so equal inputs give equal text.
std::string to_json(const PowerReport& report, const Corpus& corpus);
std::string to_table(const PowerReport& report);

// Pairs of instances that share a key, i.e. sum over groups of C(size, 2).
std::uint64_t same_key_pairs(std::vector<std::uint64_t> keys);

OracleSoundness check_oracle_soundness(const Corpus& corpus, std::span<const KindBatch> batches,
                                       std::size_t max_nodes);
std::vector<TreeAgreement> check_tree_correspondence(const Corpus& corpus,
                                                     std::span<const KindBatch> batches,
                                                     std::size_t max_nodes,
                                                     std::size_t max_depth);

}  // namespace linkwl
