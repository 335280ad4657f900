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

#include <charconv>
#include <stdexcept>

#include "linkwl/generators.hpp"
#include "linkwl/graph_io.hpp"
#include "linkwl/random.hpp"

namespace linkwl {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

RandomCorpusSpec parse_er(std::string_view args, std::uint64_t seed) {
  RandomCorpusSpec spec;
  spec.seed = seed;
  if (trim(args).empty()) return spec;
  for (std::string_view kv : split(args, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value in er(...), got '" + std::string(kv) + "'");
    }
    const auto key = trim(kv.substr(0, eq));
    const auto value = trim(kv.substr(eq + 1));
    if (key == "n") {
      const auto dash = value.find('-');
      spec.min_n = parse_number<std::size_t>(value.substr(0, dash), "n");
      spec.max_n = dash == std::string_view::npos
                       ? spec.min_n
                       : parse_number<std::size_t>(value.substr(dash + 1), "n");
    } else if (key == "p") {
      spec.densities.clear();
      for (auto p : split(value, '/')) spec.densities.push_back(parse_number<double>(p, "p"));
    } else if (key == "count") {
      spec.count = parse_number<std::size_t>(value, "count");
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(value, "seed");
    } else {
      throw std::invalid_argument("unknown er(...) key '" + std::string(key) + "'");
    }
  }
  return spec;
}

}  // namespace

void Corpus::append(const Corpus& other) {
  const std::size_t graph_shift = graphs.size();
  const std::size_t instance_shift = instances.size();
  graphs.insert(graphs.end(), other.graphs.begin(), other.graphs.end());
  for (Instance inst : other.instances) {
    inst.graph += graph_shift;
    instances.push_back(std::move(inst));
  }
  for (FixturePair f : other.fixtures) {
    f.a += instance_shift;
    f.b += instance_shift;
    fixtures.push_back(std::move(f));
  }
  spec = spec.empty() ? other.spec : spec + "+" + other.spec;
}

Corpus random_corpus(const RandomCorpusSpec& spec) {
  if (spec.min_n < 2 || spec.min_n > spec.max_n) {
    throw std::invalid_argument("random corpus needs 2 <= min_n <= max_n");
  }
  if (spec.densities.empty()) throw std::invalid_argument("random corpus needs a density");
  for (double p : spec.densities) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("density outside [0, 1]");
  }
  Corpus corpus;
  corpus.spec = "er(n=" + std::to_string(spec.min_n) + "-" + std::to_string(spec.max_n) +
                ",count=" + std::to_string(spec.count) + ",seed=" + std::to_string(spec.seed) + ")";
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::size_t n = rng.between(spec.min_n, spec.max_n);
    const double p = spec.densities[rng.below(spec.densities.size())];
    corpus.graphs.push_back(gen::erdos_renyi(n, p, rng));
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = 0; b < n; ++b) {
        if (a != b) corpus.instances.push_back({i, {a, b}, "er" + std::to_string(i)});
      }
    }
  }
  return corpus;
}

Corpus all_pairs_corpus(const Graph& g, std::string tag) {
  Corpus corpus;
  corpus.spec = "all_pairs(" + tag + ")";
  corpus.graphs.push_back(g);
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a != b) corpus.instances.push_back({0, {a, b}, tag});
    }
  }
  return corpus;
}

Corpus parse_corpus_spec(std::string_view spec, std::uint64_t random_seed) {
  Corpus corpus;
  for (std::string_view part : split(spec, '+')) {
    if (part == "fixtures") {
      corpus.append(builtin_fixtures());
    } else if (part == "random") {
      RandomCorpusSpec defaults;
      defaults.seed = random_seed;
      Corpus random = random_corpus(defaults);
      random.spec = "random";
      corpus.append(random);
    } else if (part.starts_with("er(") && part.ends_with(")")) {
      corpus.append(random_corpus(parse_er(part.substr(3, part.size() - 4), random_seed)));
    } else if (part.starts_with("all_pairs(") && part.ends_with(")")) {
      const std::string path(part.substr(10, part.size() - 11));
      corpus.append(all_pairs_corpus(load_edgelist(read_file(path)), path));
    } else {
      throw std::invalid_argument("unknown corpus component '" + std::string(part) + "'");
    }
  }
  if (corpus.instances.empty()) throw std::invalid_argument("corpus has no instances");
  return corpus;
}

}  // namespace linkwl
