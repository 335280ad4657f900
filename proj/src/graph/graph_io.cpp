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

#include "linkwl/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace linkwl {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<std::uint32_t> parse_uint(std::string_view field) {
  std::uint32_t value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
  }
}

bool is_skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph load_edgelist(std::string_view text, const std::optional<std::vector<Label>>& labels) {
  std::vector<Link> edges;
  std::vector<std::size_t> edge_lines;
  NodeId max_id = 0;
  bool any = false;
  std::size_t declared_n = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_skippable(line)) {
      // write_edgelist records the node count so trailing isolated nodes survive.
      auto pos = line.find("# n=");
      if (pos != std::string_view::npos) {
        auto rest = line.substr(pos + 4);
        auto fields = split_fields(rest);
        if (!fields.empty()) {
          if (auto n = parse_uint(fields[0])) declared_n = *n;
        }
      }
      return;
    }
    auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected \"u v\", got " + std::to_string(fields.size()) +
                                    " fields");
    }
    auto u = parse_uint(fields[0]);
    auto v = parse_uint(fields[1]);
    if (!u || !v) throw ParseError(line_no, "node ids must be non-negative integers");
    if (*u == *v) throw ParseError(line_no, "self-loop on node " + std::to_string(*u));
    edges.push_back({*u, *v});
    edge_lines.push_back(line_no);
    max_id = std::max({max_id, *u, *v});
    any = true;
  });
  std::size_t n = std::max<std::size_t>(any ? static_cast<std::size_t>(max_id) + 1 : 0,
                                        declared_n);
  if (labels) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (std::max(edges[i].p, edges[i].q) >= labels->size()) {
        throw ParseError(edge_lines[i], "node id exceeds label list length " +
                                            std::to_string(labels->size()));
      }
    }
    n = labels->size();
    return Graph::from_edges(n, edges, *labels);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Label> load_labels(std::string_view text) {
  std::vector<Label> labels;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_skippable(line)) return;
    auto fields = split_fields(line);
    if (fields.size() != 1) throw ParseError(line_no, "expected one label per line");
    auto value = parse_uint(fields[0]);
    if (!value) throw ParseError(line_no, "label must be a non-negative integer");
    labels.push_back(*value);
  });
  return labels;
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.node_count() << " m=" << g.edge_count() << "\n";
  for (const Link& e : g.edges()) out << e.p << " " << e.q << "\n";
  return out.str();
}

std::string write_labels(const Graph& g) {
  std::ostringstream out;
  for (Label l : g.labels()) out << l << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace linkwl
