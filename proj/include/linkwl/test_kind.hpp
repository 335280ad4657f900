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
#include <optional>
#include <string>
#include <string_view>

namespace linkwl {

enum class TestKind { WL1, WL1_Label01, WL2, FWL2, WL2_Local, FWL2_Local };

inline constexpr std::array<TestKind, 6> kAllTestKinds = {
    TestKind::WL1,  TestKind::WL1_Label01, TestKind::WL2,
    TestKind::FWL2, TestKind::WL2_Local,   TestKind::FWL2_Local};

std::string_view to_string(TestKind kind);
std::optional<TestKind> parse_test_kind(std::string_view name);
// "WL1, WL1_Label01, ..." for usage messages.
std::string test_kind_names();

// Node-indexed (WL1 family) or pair-indexed.
constexpr bool is_pair_kind(TestKind kind) {
  return kind != TestKind::WL1 && kind != TestKind::WL1_Label01;
}
// Kinds whose state is all n^2 ordered pairs.
constexpr bool is_dense_pair_kind(TestKind kind) {
  return kind == TestKind::WL2 || kind == TestKind::FWL2 || kind == TestKind::FWL2_Local;
}

}  // namespace linkwl
