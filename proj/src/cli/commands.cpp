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
#include <charconv>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkwl/cli.hpp"
#include "linkwl/corpus.hpp"
#include "linkwl/generators.hpp"
#include "linkwl/graph_io.hpp"
#include "linkwl/linkpred.hpp"
#include "linkwl/power.hpp"
#include "linkwl/refinement.hpp"

namespace linkwl {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iters;
  std::string output;  // "", "json" or "table"
  bool quiet = false;
  std::size_t threads = 1;
};

bool wants_json(const GlobalOptions& g, bool json_by_default) {
  return g.output.empty() ? json_by_default : g.output == "json";
}

TestKind kind_arg(const std::string& name) {
  if (auto kind = parse_test_kind(name)) return *kind;
  throw UsageError("unknown test '" + name + "' (valid: " + test_kind_names() + ")");
}

std::vector<TestKind> kinds_arg(const std::string& list) {
  std::vector<TestKind> kinds;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) kinds.push_back(kind_arg(name));
  }
  if (kinds.empty()) throw UsageError("--tests needs at least one test name");
  return kinds;
}

NodeId node_arg(std::string_view text, const std::string& what) {
  NodeId v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(what + " must look like \"p,q\" with non-negative node ids");
  }
  return v;
}

Link link_arg(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(what + " must look like \"p,q\", got '" + text + "'");
  return {node_arg(std::string_view(text).substr(0, comma), what),
          node_arg(std::string_view(text).substr(comma + 1), what)};
}

Graph load_graph(const std::string& path, const std::string& labels_path = "") {
  std::optional<std::vector<Label>> labels;
  if (!labels_path.empty()) labels = load_labels(read_file(labels_path));
  return load_edgelist(read_file(path), labels);
}

std::string optional_text(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

// Ordered pairs (u, v), u != v, that share the target's ordered color.
std::size_t target_class_size(const ColorMap& colors, Link target) {
  std::size_t size = 0;
  if (colors.layout == UnitLayout::kNodes) {
    const auto cp = colors.node_color(target.p);
    const auto cq = colors.node_color(target.q);
    for (NodeId u = 0; u < colors.node_count; ++u) {
      if (colors.node_color(u) != cp) continue;
      for (NodeId v = 0; v < colors.node_count; ++v) {
        if (u != v && colors.node_color(v) == cq) ++size;
      }
    }
    return size;
  }
  const ColorId c = colors.pair_color(target);
  for (std::size_t i = 0; i < colors.unit_count(); ++i) {
    const Link pair = colors.pair_at(i);
    if (pair.p != pair.q && colors.colors[i] == c) ++size;
  }
  return size;
}

// ---- refine ----

struct RefineArgs {
  std::string graph;
  std::string test;
  std::string mask;
  std::string labels;
};

int cmd_refine(const GlobalOptions& g, const RefineArgs& a, std::ostream& out) {
  const TestKind kind = kind_arg(a.test);
  std::optional<Link> mask;
  if (!a.mask.empty()) mask = link_arg(a.mask, "--mask");
  const Graph graph = load_graph(a.graph, a.labels);
  const RefinementResult result = refine_to_stable(kind, graph, mask, g.max_iters);
  if (wants_json(g, false)) {
    out << to_json(result) << "\n";
    return 0;
  }
  out << "test " << to_string(kind) << "\n";
  out << "nodes " << graph.node_count() << " edges " << graph.edge_count() << "\n";
  if (mask) out << "mask " << mask->p << "," << mask->q << "\n";
  if (result.stable_at) {
    out << "stable_at " << *result.stable_at << "\n";
  } else {
    out << "capped_at " << result.history.size() - 1 << "\n";
  }
  for (const ColorMap& colors : result.history) {
    out << "iteration " << colors.iteration << " classes " << colors.class_count() << "\n";
  }
  if (mask) out << "target_class_size " << target_class_size(result.final_colors(), *mask) << "\n";
  return 0;
}

// ---- distinguish ----

struct DistinguishArgs {
  std::string graph_a;
  std::string link_a;
  std::string graph_b;
  std::string link_b;
  std::string test;
};

int cmd_distinguish(const GlobalOptions& g, const DistinguishArgs& a, std::ostream& out) {
  const TestKind kind = kind_arg(a.test);
  const Link e1 = link_arg(a.link_a, "--link-a");
  const Link e2 = link_arg(a.link_b, "--link-b");
  const Graph g1 = load_graph(a.graph_a);
  const Graph g2 = load_graph(a.graph_b);
  const Verdict v = indistinguishable(kind, e1, g1, e2, g2, g.max_iters);
  if (wants_json(g, false)) {
    Json j;
    j["test"] = std::string(to_string(kind));
    j["distinguished_at"] = v.distinguished_at ? Json(*v.distinguished_at) : Json(nullptr);
    j["rounds"] = v.rounds;
    j["stable"] = v.stable;
    out << j.dump() << "\n";
  } else if (v.distinguished_at) {
    out << "distinguished at iteration " << *v.distinguished_at << "\n";
  } else if (v.stable) {
    out << "indistinguishable (stable at " << v.rounds << ")\n";
  } else {
    out << "indistinguishable (capped at " << v.rounds << ")\n";
  }
  return 0;
}

// ---- power-check ----

struct PowerArgs {
  std::string corpus = "fixtures+random";
  std::string tests;
  std::string out_path;
  bool no_oracle = false;
  bool strict = false;
};

int cmd_power_check(const GlobalOptions& g, const PowerArgs& a, std::ostream& out,
                    std::ostream& err) {
  const std::vector<TestKind> kinds =
      a.tests.empty() ? std::vector<TestKind>(kAllTestKinds.begin(), kAllTestKinds.end())
                      : kinds_arg(a.tests);
  Corpus corpus;
  try {
    corpus = parse_corpus_spec(a.corpus, g.seed.value_or(kDefaultCorpusSeed));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--corpus: ") + e.what());
  }
  if (!g.quiet) {
    err << "power-check: " << corpus.instances.size() << " instances over " << corpus.graphs.size()
        << " graphs\n";
  }
  PowerOptions options;
  options.max_iters = g.max_iters;
  options.threads = g.threads;
  options.oracle_checks = !a.no_oracle;
  const PowerReport report = power_check(corpus, kinds, options);
  const std::string text = wants_json(g, false) ? to_json(report, corpus) + "\n" : to_table(report);
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
  if (a.strict && !(report.table_ok() && report.fixtures_ok())) {
    throw std::runtime_error("power table or fixture verdicts differ from the expected pattern");
  }
  return 0;
}

// ---- fixtures ----

struct FixturesArgs {
  std::string dir = "fixtures";
  bool no_magic = false;
};

int cmd_fixtures(const GlobalOptions& g, const FixturesArgs& a, std::ostream& out) {
  const Corpus corpus = builtin_fixtures({.magic_square = !a.no_magic});
  std::filesystem::create_directories(a.dir);
  auto write_instance = [&](const std::string& stem, const Instance& inst) {
    const std::string file = stem + ".edgelist";
    write_file((std::filesystem::path(a.dir) / file).string(), write_edgelist(corpus.graph_of(inst)));
    return Json{{"graph", file}, {"link", {inst.target.p, inst.target.q}}};
  };

  bool all_ok = true;
  Json fixtures = Json::array();
  std::ostringstream table;
  for (const FixturePair& f : corpus.fixtures) {
    const Instance& ia = corpus.instances[f.a];
    const Instance& ib = corpus.instances[f.b];
    Json entry;
    entry["name"] = f.name;
    entry["a"] = write_instance(f.name + "_a", ia);
    entry["b"] = write_instance(f.name + "_b", ib);
    Json expected;
    Json observed;
    for (const auto& [kind, want] : f.expected) {
      const Verdict v = indistinguishable(kind, ia.target, corpus.graph_of(ia), ib.target,
                                          corpus.graph_of(ib), g.max_iters);
      const std::string name(to_string(kind));
      expected[name] = want ? Json(*want) : Json(nullptr);
      observed[name] = v.distinguished_at ? Json(*v.distinguished_at) : Json(nullptr);
      const bool ok = v.distinguished_at == want;
      all_ok = all_ok && ok;
      table << std::left << std::setw(5) << f.name << " " << std::setw(12) << name << " expected "
            << std::setw(2) << optional_text(want) << " observed " << std::setw(2)
            << optional_text(v.distinguished_at) << (ok ? " ok" : " MISMATCH") << "\n";
    }
    entry["expected"] = expected;
    entry["observed"] = observed;
    fixtures.push_back(entry);
  }
  Json manifest;
  manifest["fixtures"] = fixtures;
  manifest["ok"] = all_ok;
  write_file((std::filesystem::path(a.dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  if (wants_json(g, false)) {
    out << manifest.dump(2) << "\n";
  } else {
    out << table.str() << corpus.fixtures.size() << " fixtures written to " << a.dir << "\n";
  }
  if (!all_ok) throw std::runtime_error("fixture verdicts differ from the manifest");
  return 0;
}

// ---- predict ----

struct PredictArgs {
  std::string graph;
  std::string labels;
  std::string generate;
  std::string test = "FWL2_Local";
  std::size_t width = 8;
  std::size_t depth = 2;
  bool heuristics = false;
  bool omit_timing = false;
};

// "ring:n=200,k=4,beta=0.1" or "er:n=200,p=0.03".
Graph generate_graph(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream in(spec.substr(colon + 1));
    std::string kv;
    while (std::getline(in, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--generate expects key=value, got '" + kv + "'");
      try {
        params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("--generate value for '" + kv.substr(0, eq) + "' is not a number");
      }
    }
  }
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    const double v = it == params.end() ? fallback : it->second;
    if (it != params.end()) params.erase(it);
    return v;
  };
  Graph g;
  if (family == "ring") {
    const double n = get("n", 200);
    const double k = get("k", 4);
    const double beta = get("beta", 0.1);
    if (n < 3 || k < 2 || static_cast<std::size_t>(k) % 2 != 0 || k >= n) {
      throw UsageError("ring needs n >= 3 and an even k with 2 <= k < n");
    }
    g = gen::watts_strogatz(static_cast<std::size_t>(n), static_cast<std::size_t>(k), beta, seed);
  } else if (family == "er") {
    const double n = get("n", 200);
    const double p = get("p", 0.03);
    Rng rng(seed);
    g = gen::erdos_renyi(static_cast<std::size_t>(n), p, rng);
  } else {
    throw UsageError("unknown generator '" + family + "' (valid: ring, er)");
  }
  if (!params.empty()) throw UsageError("unknown " + family + " parameter '" + params.begin()->first + "'");
  return g;
}

int cmd_predict(const GlobalOptions& g, const PredictArgs& a, std::ostream& out) {
  const TestKind kind = kind_arg(a.test);
  if (a.graph.empty() == a.generate.empty()) throw UsageError("predict needs exactly one of --graph and --generate");
  if (a.width < 1) throw UsageError("--width must be at least 1");
  const std::uint64_t seed = g.seed.value_or(0);
  const Graph graph = a.graph.empty() ? generate_graph(a.generate, seed) : load_graph(a.graph, a.labels);
  BenchmarkConfig config;
  config.features.width = a.width;
  config.features.depth = a.depth;
  config.features.heuristics = a.heuristics;
  config.threads = g.threads;
  const BenchmarkResult result =
      benchmark(graph, kind, seed, config, a.graph.empty() ? a.generate : a.graph);
  if (wants_json(g, true)) {
    out << to_json(result, !a.omit_timing) << "\n";
    return 0;
  }
  out << "dataset " << result.dataset << "\n"
      << "test " << to_string(result.kind) << "\n"
      << "split_seed " << result.split_seed << "\n"
      << "nodes " << result.n << " edges " << result.m << "\n"
      << "val_auc " << result.val_auc << "\n"
      << "test_auc " << result.test_auc << "\n";
  if (!a.omit_timing) out << "featurize_seconds " << result.featurize_seconds << "\n";
  out << "isolated_nodes " << result.isolated_nodes << "\n";
  return 0;
}

std::size_t env_threads() {
  const char* value = std::getenv("WL2_THREADS");
  if (!value || !*value) return 1;
  std::size_t n = 0;
  const std::string_view text(value);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw UsageError("WL2_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return n;
}

// Keeps multi-line library messages to one greppable line.
std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link-level Weisfeiler-Lehman tests and link prediction", "linkwl"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  std::size_t threads = 0;
  app.add_option("--seed", global.seed, "Seed for random corpora, generators and splits");
  app.add_option("--max-iters", global.max_iters, "Cap on refinement rounds")->check(CLI::PositiveNumber);
  app.add_option("--output", global.output, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--quiet", global.quiet, "Suppress progress notes on stderr");
  app.add_option("--threads", threads, "Worker threads (default: WL2_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  RefineArgs refine;
  auto* refine_cmd = app.add_subcommand("refine", "Refine one graph to a stable partition");
  refine_cmd->add_option("--graph", refine.graph, "Edge list file")->required();
  refine_cmd->add_option("--test", refine.test, "Test kind")->required();
  refine_cmd->add_option("--mask", refine.mask, "Target link \"p,q\" to mask");
  refine_cmd->add_option("--labels", refine.labels, "Node label file");

  DistinguishArgs dist;
  auto* dist_cmd = app.add_subcommand("distinguish", "Compare two (graph, link) instances");
  dist_cmd->add_option("--graph-a", dist.graph_a, "First edge list")->required();
  dist_cmd->add_option("--link-a", dist.link_a, "First link \"p,q\"")->required();
  dist_cmd->add_option("--graph-b", dist.graph_b, "Second edge list")->required();
  dist_cmd->add_option("--link-b", dist.link_b, "Second link \"p,q\"")->required();
  dist_cmd->add_option("--test", dist.test, "Test kind")->required();

  PowerArgs power;
  auto* power_cmd = app.add_subcommand("power-check", "Compare discriminating power over a corpus");
  power_cmd->add_option("--corpus", power.corpus, "Corpus spec")->capture_default_str();
  power_cmd->add_option("--tests", power.tests, "Comma-separated test kinds (default: all)");
  power_cmd->add_option("--out", power.out_path, "Write the report to a file");
  power_cmd->add_flag("--no-oracle", power.no_oracle, "Skip oracle and tree checks");
  power_cmd->add_flag("--strict", power.strict, "Exit 2 unless the table and fixtures match");

  FixturesArgs fix;
  auto* fix_cmd = app.add_subcommand("fixtures", "Write fixture edge lists and a manifest");
  fix_cmd->add_option("--dir", fix.dir, "Output directory")->capture_default_str();
  fix_cmd->add_flag("--no-magic", fix.no_magic, "Skip the magic-square search");

  PredictArgs pred;
  auto* pred_cmd = app.add_subcommand("predict", "Run the link prediction benchmark");
  pred_cmd->add_option("--graph", pred.graph, "Edge list file");
  pred_cmd->add_option("--labels", pred.labels, "Node label file");
  pred_cmd->add_option("--generate", pred.generate, "Generator spec, e.g. ring:n=200,k=4,beta=0.1");
  pred_cmd->add_option("--test", pred.test, "Test kind")->capture_default_str();
  pred_cmd->add_option("--width", pred.width, "Histogram buckets")->capture_default_str();
  pred_cmd->add_option("--depth", pred.depth, "Refinement rounds behind the features")->capture_default_str();
  pred_cmd->add_flag("--heuristics", pred.heuristics, "Add CN, PA and RA features");
  pred_cmd->add_flag("--omit-timing", pred.omit_timing, "Leave featurize_seconds out of the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 1;
  }

  try {
    global.threads = threads > 0 ? threads : env_threads();
    if (refine_cmd->parsed()) return cmd_refine(global, refine, out);
    if (dist_cmd->parsed()) return cmd_distinguish(global, dist, out);
    if (power_cmd->parsed()) return cmd_power_check(global, power, out, err);
    if (fix_cmd->parsed()) return cmd_fixtures(global, fix, out);
    return cmd_predict(global, pred, out);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  }
}

}  // namespace linkwl
