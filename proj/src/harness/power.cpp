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
#include <atomic>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "linkwl/power.hpp"

namespace linkwl {
namespace {

using Json = nlohmann::ordered_json;

template <typename Key>
std::uint64_t count_same(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    const std::uint64_t run = j - i;
    total += run * (run - 1) / 2;
    i = j;
  }
  return total;
}

std::vector<std::uint64_t> finals(const KindBatch& b) {
  std::vector<std::uint64_t> out;
  out.reserve(b.unordered.size());
  for (std::size_t i = 0; i < b.unordered.size(); ++i) out.push_back(b.final_color(i));
  return out;
}

// Pairs that `strong` separates and `weak` does not: fixture pairs first,
// then the first such pair in instance order.
std::optional<Witness> find_witness(const Corpus& corpus, const KindBatch& weak,
                                    const KindBatch& strong, std::string relation) {
  auto make = [&](std::size_t a, std::size_t b) {
    return Witness{relation, a, b, strong.first_difference(a, b).value_or(0)};
  };
  for (const FixturePair& f : corpus.fixtures) {
    if (weak.final_color(f.a) == weak.final_color(f.b) &&
        strong.final_color(f.a) != strong.final_color(f.b)) {
      return make(f.a, f.b);
    }
  }
  std::vector<std::size_t> order(weak.unordered.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return weak.final_color(x) < weak.final_color(y);
  });
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && weak.final_color(order[j]) == weak.final_color(order[i])) ++j;
    for (std::size_t k = i + 1; k < j; ++k) {
      if (strong.final_color(order[k]) != strong.final_color(order[i])) {
        std::pair<std::size_t, std::size_t> cand{order[i], order[k]};
        if (!best || cand < *best) best = cand;
        break;
      }
    }
    i = j;
  }
  if (!best) return std::nullopt;
  return make(best->first, best->second);
}

std::vector<KindBatch> run_batches(const Corpus& corpus, std::span<const TestKind> kinds,
                                   const PowerOptions& options) {
  std::vector<KindBatch> batches(kinds.size());
  std::vector<std::exception_ptr> errors(kinds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < kinds.size(); i = next++) {
      try {
        batches[i] = run_batch(kinds[i], corpus, {options.max_iters, options.limits});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, kinds.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return batches;
}

Json instance_json(const Corpus& corpus, std::size_t i) {
  const Instance& inst = corpus.instances[i];
  return Json{{"index", i},
              {"tag", inst.tag},
              {"graph", inst.graph},
              {"n", corpus.graphs[inst.graph].node_count()},
              {"target", {inst.target.p, inst.target.q}}};
}

Json optional_json(const std::optional<std::size_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::uint64_t same_key_pairs(std::vector<std::uint64_t> keys) { return count_same(std::move(keys)); }

bool PowerReport::table_ok() const {
  return std::all_of(table.begin(), table.end(), [](const TableCheck& c) { return c.ok; });
}

bool PowerReport::fixtures_ok() const {
  return std::all_of(fixtures.begin(), fixtures.end(),
                     [](const FixtureOutcome& f) { return f.ok(); });
}

const Implication* PowerReport::implication(TestKind from, TestKind to) const {
  for (const auto& imp : implications) {
    if (imp.from == from && imp.to == to) return &imp;
  }
  return nullptr;
}

PowerReport power_check(const Corpus& corpus, std::span<const TestKind> kinds,
                        const PowerOptions& options) {
  if (corpus.instances.empty()) throw std::invalid_argument("power_check needs a non-empty corpus");
  if (kinds.empty()) throw std::invalid_argument("power_check needs at least one test kind");
  PowerReport report;
  report.corpus = corpus.spec;
  report.instances = corpus.instances.size();
  const std::uint64_t n = report.instances;
  report.instance_pairs = n * (n - 1) / 2;

  const std::vector<KindBatch> batches = run_batches(corpus, kinds, options);
  auto batch_of = [&](TestKind k) -> const KindBatch* {
    for (const auto& b : batches) {
      if (b.kind == k) return &b;
    }
    return nullptr;
  };

  std::vector<std::uint64_t> same(batches.size());
  for (std::size_t i = 0; i < batches.size(); ++i) {
    const auto keys = finals(batches[i]);
    same[i] = count_same(keys);
    std::vector<std::uint64_t> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    report.kinds.push_back({batches[i].kind, batches[i].rounds, batches[i].stable,
                            distinct.size(), report.instance_pairs - same[i]});
  }
  for (std::size_t a = 0; a < batches.size(); ++a) {
    for (std::size_t b = 0; b < batches.size(); ++b) {
      if (a == b) continue;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> joint;
      joint.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        joint.emplace_back(batches[a].final_color(i), batches[b].final_color(i));
      }
      const std::uint64_t both = count_same(std::move(joint));
      report.implications.push_back({batches[a].kind, batches[b].kind, same[b] - both});
    }
  }

  using enum TestKind;
  auto name = [](TestKind k) { return std::string(to_string(k)); };
  // Equal power.
  for (auto [a, b] : {std::pair{WL1, WL2_Local}}) {
    const auto* ab = report.implication(a, b);
    const auto* ba = report.implication(b, a);
    if (!ab || !ba) continue;
    TableCheck check{name(a) + " ~ " + name(b), "equivalent", ab->holds() && ba->holds(), ""};
    check.detail = "violations " + std::to_string(ab->violations) + " / " +
                   std::to_string(ba->violations);
    report.table.push_back(std::move(check));
  }
  // Strictly weaker.
  const std::pair<TestKind, TestKind> strict[] = {
      {WL1, WL2},        {WL1, FWL2_Local},       {WL1, FWL2},
      {WL2_Local, WL2},  {WL2_Local, FWL2_Local}, {WL2_Local, FWL2},
      {WL2, FWL2},       {FWL2_Local, FWL2}};
  for (auto [weak, strong] : strict) {
    const auto* imp = report.implication(weak, strong);
    if (!imp) continue;
    const std::string relation = name(weak) + "<" + name(strong);
    auto w = find_witness(corpus, *batch_of(weak), *batch_of(strong), relation);
    TableCheck check{relation, "strictly weaker", imp->holds() && w.has_value(), ""};
    check.detail = "violations " + std::to_string(imp->violations) +
                   (w ? ", witness found" : ", no witness");
    report.table.push_back(std::move(check));
    if (w) report.witnesses.push_back(*w);
  }
  // Incomparable.
  for (auto [a, b] : {std::pair{WL2, FWL2_Local}}) {
    if (!report.implication(a, b)) continue;
    auto only_a = find_witness(corpus, *batch_of(b), *batch_of(a), name(a) + " only vs " + name(b));
    auto only_b = find_witness(corpus, *batch_of(a), *batch_of(b), name(b) + " only vs " + name(a));
    TableCheck check{name(a) + " - " + name(b), "incomparable", only_a && only_b, ""};
    check.detail = "violations " + std::to_string(report.implication(a, b)->violations) + " / " +
                   std::to_string(report.implication(b, a)->violations);
    report.table.push_back(std::move(check));
    if (only_a) report.witnesses.push_back(*only_a);
    if (only_b) report.witnesses.push_back(*only_b);
  }

  for (const FixturePair& f : corpus.fixtures) {
    for (const auto& [kind, expected] : f.expected) {
      const KindBatch* b = batch_of(kind);
      if (!b) continue;
      report.fixtures.push_back({f.name, kind, expected, b->first_difference(f.a, f.b)});
    }
  }

  if (options.oracle_checks) {
    report.oracle = check_oracle_soundness(corpus, batches, options.oracle_max_nodes);
    report.trees = check_tree_correspondence(corpus, batches, options.oracle_max_nodes,
                                             options.tree_max_depth);
  }
  return report;
}

std::string to_json(const PowerReport& report, const Corpus& corpus) {
  Json out;
  out["corpus"] = report.corpus;
  out["instances"] = report.instances;
  out["instance_pairs"] = report.instance_pairs;
  Json kinds = Json::array();
  for (const auto& k : report.kinds) {
    kinds.push_back({{"test", to_string(k.kind)},
                     {"rounds", k.rounds},
                     {"stable", k.stable},
                     {"classes", k.classes},
                     {"distinguished_pairs", k.distinguished_pairs}});
  }
  out["kinds"] = std::move(kinds);
  Json implications = Json::object();
  for (const auto& imp : report.implications) {
    implications[std::string(to_string(imp.from)) + "->" + std::string(to_string(imp.to))] = {
        {"holds", imp.holds()}, {"violations", imp.violations}};
  }
  out["implications"] = std::move(implications);
  Json table = Json::array();
  for (const auto& c : report.table) {
    table.push_back({{"cell", c.cell}, {"expected", c.expected}, {"ok", c.ok}, {"detail", c.detail}});
  }
  out["table"] = std::move(table);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"relation", w.relation},
                         {"instance_a", instance_json(corpus, w.instance_a)},
                         {"instance_b", instance_json(corpus, w.instance_b)},
                         {"iteration", w.iteration}});
  }
  out["witnesses"] = std::move(witnesses);
  Json fixtures = Json::array();
  for (const auto& f : report.fixtures) {
    fixtures.push_back({{"fixture", f.fixture},
                        {"test", to_string(f.kind)},
                        {"expected", optional_json(f.expected)},
                        {"observed", optional_json(f.observed)},
                        {"ok", f.ok()}});
  }
  out["fixtures"] = std::move(fixtures);
  if (report.oracle) {
    out["oracle_soundness"] = {{"instances", report.oracle->instances},
                               {"iso_classes", report.oracle->iso_classes},
                               {"isomorphic_pairs", report.oracle->isomorphic_pairs},
                               {"checked", report.oracle->checked},
                               {"violations", report.oracle->violations}};
  } else {
    out["oracle_soundness"] = nullptr;
  }
  Json trees = Json::array();
  for (const auto& t : report.trees) {
    trees.push_back({{"tree", to_string(t.tree)},
                     {"test", to_string(tree_test_kind(t.tree))},
                     {"depth", t.depth},
                     {"pairs", t.pairs},
                     {"disagreements", t.disagreements}});
  }
  out["tree_correspondence"] = std::move(trees);
  out["ok"] = report.table_ok() && report.fixtures_ok() &&
              (!report.oracle || report.oracle->violations == 0) &&
              std::all_of(report.trees.begin(), report.trees.end(),
                          [](const TreeAgreement& t) { return t.disagreements == 0; });
  return out.dump(2);
}

std::string to_table(const PowerReport& report) {
  std::ostringstream out;
  out << "corpus " << report.corpus << ": " << report.instances << " instances, "
      << report.instance_pairs << " pairs\n\n";
  out << "violations of row => column\n";
  out << "            ";
  for (const auto& k : report.kinds) out << std::string(12 - std::min<std::size_t>(12, to_string(k.kind).size()), ' ') << to_string(k.kind);
  out << "\n";
  for (const auto& row : report.kinds) {
    const std::string label(to_string(row.kind));
    out << label << std::string(12 - std::min<std::size_t>(12, label.size()), ' ');
    for (const auto& col : report.kinds) {
      std::string cell = "-";
      if (const auto* imp = report.implication(row.kind, col.kind)) cell = std::to_string(imp->violations);
      out << std::string(12 - std::min<std::size_t>(12, cell.size()), ' ') << cell;
    }
    out << "\n";
  }
  out << "\n";
  for (const auto& c : report.table) {
    out << (c.ok ? "ok    " : "FAIL  ") << c.cell << " (" << c.expected << "; " << c.detail << ")\n";
  }
  for (const auto& f : report.fixtures) {
    auto show = [](const std::optional<std::size_t>& v) {
      return v ? "distinguished@" + std::to_string(*v) : std::string("indistinguishable");
    };
    out << (f.ok() ? "ok    " : "FAIL  ") << f.fixture << " " << to_string(f.kind) << ": "
        << show(f.observed) << (f.ok() ? "" : " expected " + show(f.expected)) << "\n";
  }
  if (report.oracle) {
    out << "oracle soundness: " << report.oracle->checked << " checked, "
        << report.oracle->violations << " violations\n";
  }
  for (const auto& t : report.trees) {
    out << "tree " << to_string(t.tree) << " depth " << t.depth << ": " << t.disagreements
        << " disagreements over " << t.pairs << " pairs\n";
  }
  return out.str();
}

}  // namespace linkwl
