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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkwl/graph.hpp"

namespace linkwl {

// Raised for malformed edge-list or label text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses "u v" lines (0-based ids, whitespace separated). Blank lines and
// lines starting with '#' are skipped. When `labels` is given its length fixes
// the node count; otherwise n = 1 + max id seen.
Graph load_edgelist(std::string_view text,
                    const std::optional<std::vector<Label>>& labels = std::nullopt);

// One non-negative integer per non-blank line.
std::vector<Label> load_labels(std::string_view text);

std::string write_edgelist(const Graph& g);
std::string write_labels(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace linkwl
