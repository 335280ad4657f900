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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linkwl/graph.hpp"

namespace linkwl {

// 4x4 grid of numbers 1..4, row-major.
using Square = std::array<std::uint8_t, 16>;

// Cells are adjacent when they share a row, a column, or a number.
Graph square_graph(const Square& square);

enum class SquarePool {
  kLatin,  // all 576 Latin squares of order 4
  kRows,   // number = row index, the single degenerate arrangement
};

enum class SquarePredicate {
  kTwoCommonNeighbors,  // every pair, adjacent or not, has exactly two common neighbors
  kStronglyRegular,     // common-neighbor count depends only on adjacency
};

struct MagicSearchOptions {
  SquarePool pool = SquarePool::kLatin;
  SquarePredicate predicate = SquarePredicate::kStronglyRegular;
  // Testing hook: search an explicit pool instead.
  std::optional<std::vector<Square>> explicit_pool{};
};

struct MagicWitness {
  Square first_square;
  Square second_square;
  Graph first;
  Graph second;
  Link first_target;
  Link second_target;
  std::size_t label01_iteration = 0;
};

std::vector<Square> square_pool(SquarePool pool);
bool satisfies(const Graph& g, SquarePredicate predicate);

// First (graph, graph, target, target) in pool order that FWL2 cannot tell
// apart while WL1_Label01 can, re-checked before returning.
std::optional<MagicWitness> magic_square_search(const MagicSearchOptions& options = {});

std::string to_string(const Square& square);

}  // namespace linkwl
