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

#include "linkwl/test_kind.hpp"

namespace linkwl {

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::WL1: return "WL1";
    case TestKind::WL1_Label01: return "WL1_Label01";
    case TestKind::WL2: return "WL2";
    case TestKind::FWL2: return "FWL2";
    case TestKind::WL2_Local: return "WL2_Local";
    case TestKind::FWL2_Local: return "FWL2_Local";
  }
  return "?";
}

std::optional<TestKind> parse_test_kind(std::string_view name) {
  for (TestKind kind : kAllTestKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string test_kind_names() {
  std::string out;
  for (TestKind kind : kAllTestKinds) {
    if (!out.empty()) out += ", ";
    out += to_string(kind);
  }
  return out;
}

}  // namespace linkwl
