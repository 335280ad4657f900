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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "linkwl/corpus.hpp"
#include "linkwl/generators.hpp"
#include "linkwl/linkpred.hpp"
#include "linkwl/power.hpp"
#include "linkwl/random.hpp"
#include "linkwl/refinement.hpp"

namespace linkwl {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<Outcome()> check;
};

// The fixture and random corpus report, shared by criteria 1 to 4 and 6.
struct PowerRun {
  Corpus corpus;
  PowerReport report;
  double seconds = 0;
};

const PowerRun& power_run() {
  static const PowerRun run = [] {
    PowerRun r;
    const auto start = Clock::now();
    r.corpus = parse_corpus_spec("fixtures+random");
    r.report = power_check(r.corpus, kAllTestKinds);
    r.seconds = seconds_since(start);
    return r;
  }();
  return run;
}

Outcome table_fidelity() {
  const PowerRun& run = power_run();
  std::ostringstream detail;
  std::size_t ok = 0;
  for (const TableCheck& cell : run.report.table) {
    if (cell.ok) {
      ++ok;
    } else {
      detail << " [" << cell.cell << ": " << cell.detail << "]";
    }
  }
  const bool pass = run.report.table_ok() && !run.report.table.empty() && run.seconds <= 600;
  std::ostringstream out;
  out << ok << "/" << run.report.table.size() << " cells as expected over "
      << run.report.instances << " instances in " << run.seconds << " s" << detail.str();
  return {pass, out.str()};
}

Outcome local_equivalence() {
  const PowerReport& report = power_run().report;
  const Implication* forward = report.implication(TestKind::WL1, TestKind::WL2_Local);
  const Implication* backward = report.implication(TestKind::WL2_Local, TestKind::WL1);
  if (!forward || !backward) return {false, "implications missing from the report"};
  const std::uint64_t disagreements = forward->violations + backward->violations;
  std::ostringstream out;
  out << disagreements << " disagreements over " << report.instance_pairs << " instance pairs";
  return {disagreements == 0 && report.instance_pairs >= 100000, out.str()};
}

Outcome oracle_soundness() {
  const auto& oracle = power_run().report.oracle;
  if (!oracle) return {false, "oracle checks did not run"};
  std::ostringstream out;
  out << oracle->violations << " violations over " << oracle->checked << " checks ("
      << oracle->instances << " instances, " << oracle->iso_classes << " isomorphism classes)";
  return {oracle->violations == 0 && oracle->checked > 0, out.str()};
}

Outcome tree_correspondence() {
  const auto& trees = power_run().report.trees;
  std::uint64_t disagreements = 0;
  std::uint64_t pairs = 0;
  for (const TreeAgreement& t : trees) {
    disagreements += t.disagreements;
    pairs += t.pairs;
  }
  std::ostringstream out;
  out << disagreements << " disagreements over " << trees.size() << " (tree, depth) cells, "
      << pairs << " pair comparisons";
  return {disagreements == 0 && trees.size() == 16, out.str()};
}

Outcome common_neighbors() {
  Rng rng(5);
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.between(2, 20);
    const Graph g = gen::erdos_renyi(n, 0.1 + 0.5 * rng.unit(), rng);
    for (NodeId p = 0; p < n; ++p) {
      for (NodeId q = 0; q < n; ++q) {
        if (p == q) continue;
        std::size_t count = 0;
        for (NodeId u : g.neighbors(p)) count += g.has_edge(u, q) ? 1 : 0;
        ++pairs;
        if (cn_from_fwl2_signature(g, {p, q}) != count) ++mismatches;
      }
    }
  }
  std::ostringstream out;
  out << mismatches << " mismatches over " << pairs << " ordered pairs of 50 graphs";
  return {mismatches == 0, out.str()};
}

Outcome fixture_captions() {
  const PowerRun& run = power_run();
  auto verdict = [&](const std::string& name, TestKind kind) -> std::optional<std::size_t> {
    for (const FixtureOutcome& f : run.report.fixtures) {
      if (f.fixture == name && f.kind == kind) return f.observed;
    }
    throw std::out_of_range("fixture " + name + " has no verdict for " + std::string(to_string(kind)));
  };
  const bool f3 = verdict("F3", TestKind::WL2) == 1u && !verdict("F3", TestKind::WL1);
  const bool f4a = !verdict("F4a", TestKind::WL2) && verdict("F4a", TestKind::FWL2_Local) &&
                   verdict("F4a", TestKind::WL1_Label01);
  const bool f4b = !verdict("F4b", TestKind::WL1_Label01) && verdict("F4b", TestKind::FWL2) &&
                   verdict("F4b", TestKind::FWL2_Local);
  std::size_t matched = 0;
  for (const FixtureOutcome& f : run.report.fixtures) matched += f.ok() ? 1 : 0;
  std::ostringstream out;
  out << "F3 " << (f3 ? "ok" : "wrong") << ", F4a " << (f4a ? "ok" : "wrong") << ", F4b "
      << (f4b ? "ok" : "wrong") << "; " << matched << "/" << run.report.fixtures.size()
      << " manifest verdicts match";
  return {f3 && f4a && f4b && run.report.fixtures_ok(), out.str()};
}

Outcome permutation_equivariance() {
  Rng rng(77);
  std::size_t trials = 0;
  std::size_t distinctions = 0;
  for (TestKind kind : kAllTestKinds) {
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = rng.between(3, 10);
      const Graph g = gen::erdos_renyi(n, 0.2 + 0.5 * rng.unit(), rng);
      std::vector<NodeId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(std::span<NodeId>(perm));
      const auto p = static_cast<NodeId>(rng.below(n));
      auto q = static_cast<NodeId>(rng.below(n - 1));
      if (q >= p) ++q;
      const Graph h = permute(g, perm);
      ++trials;
      if (indistinguishable(kind, {p, q}, g, {perm[p], perm[q]}, h).distinguished()) ++distinctions;
    }
  }
  std::ostringstream out;
  out << distinctions << " distinctions over " << trials << " trials (1000 per kind)";
  return {distinctions == 0, out.str()};
}

Outcome link_prediction_signal() {
  double wl1 = 0;
  double fwl2_local = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen::watts_strogatz(200, 4, 0.1, seed);
    wl1 += benchmark(g, TestKind::WL1, seed).test_auc / 10;
    fwl2_local += benchmark(g, TestKind::FWL2_Local, seed).test_auc / 10;
  }
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << "mean test AUC FWL2_Local " << fwl2_local << ", WL1 " << wl1 << ", margin "
      << fwl2_local - wl1;
  return {fwl2_local - wl1 >= 0.03 && fwl2_local >= 0.80, out.str()};
}

Outcome complexity() {
  // Fixed density: degree 4 ring lattices with n = m / 2.
  const std::vector<std::size_t> sizes = {400, 800, 1600};
  std::vector<double> times;
  for (std::size_t m : sizes) {
    const Graph g = gen::watts_strogatz(m / 2, 4, 0.1, 1);
    const auto edges = g.edges();
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      featurize_all(TestKind::WL2_Local, g, edges, {}, 1);
      best = std::min(best, seconds_since(start));
    }
    times.push_back(best);
  }
  // Least squares line through the origin, t = b * m.
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    num += times[i] * static_cast<double>(sizes[i]);
    den += static_cast<double>(sizes[i]) * static_cast<double>(sizes[i]);
  }
  const double slope = num / den;
  bool linear = slope > 0;
  std::ostringstream out;
  out.precision(3);
  out << "WL2_Local";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double ratio = times[i] / (slope * static_cast<double>(sizes[i]));
    linear = linear && ratio >= 1.0 / 3 && ratio <= 3;
    out << " m=" << sizes[i] << ": " << times[i] << " s (x" << ratio << " of fit)";
  }

  const Graph big = gen::cycle(2100);
  bool refused = false;
  try {
    refine_to_stable(TestKind::FWL2, big, Link{0, 1});
  } catch (const MemoryGateError& e) {
    refused = true;
    out << "; FWL2 n=2100 refused: " << e.what();
  }
  if (!refused) out << "; FWL2 n=2100 was not refused";
  return {linear && refused, out.str()};
}

// Runs last so that it sees every refinement step made above.
Outcome invariants() {
  const InvariantTally tally = invariant_tally();
  std::ostringstream out;
  out << tally.violations << " violations over " << tally.checks
      << " checks in this run; every unit test binary asserts the same at exit";
  return {tally.violations == 0 && tally.checks > 0, out.str()};
}

}  // namespace
}  // namespace linkwl

int main() {
  using namespace linkwl;
  const std::vector<Criterion> criteria = {
      {1, "Table 1 fidelity", table_fidelity},
      {2, "WL1 and WL2_Local agree", local_equivalence},
      {3, "oracle soundness", oracle_soundness},
      {4, "tree correspondence", tree_correspondence},
      {5, "common neighbors from the FWL2 signature", common_neighbors},
      {6, "fixture captions", fixture_captions},
      {7, "permutation equivariance", permutation_equivariance},
      {8, "link prediction signal", link_prediction_signal},
      {10, "complexity sanity", complexity},
      {9, "refinement invariants", invariants},
  };
  std::vector<std::string> lines(11);
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    all = all && o.ok;
    lines[c.id] = std::string(o.ok ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.name +
                  ": " + o.detail;
  }
  for (int id = 1; id <= 10; ++id) std::printf("%s\n", lines[id].c_str());
  return all ? 0 : 1;
}
