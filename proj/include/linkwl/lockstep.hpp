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
#include <vector>

#include "linkwl/interner.hpp"
#include "linkwl/refinement.hpp"

namespace linkwl {

// Refines many sessions round by round under one Interner so that colors of
// every session are comparable within a round.
class Lockstep {
 public:
  explicit Lockstep(std::vector<RefinementSession> sessions);

  std::size_t round() const { return round_; }
  std::size_t session_count() const { return sessions_.size(); }
  const RefinementSession& session(std::size_t i) const { return sessions_[i]; }
  const ColorMap& colors(std::size_t i) const { return current_[i]; }

  // Distinct colors over all sessions in the current round.
  std::size_t class_count() const { return interner_.round_size(round_); }

  // Refines every session once. Returns false when the joint partition did
  // not split, after which no later round can split it.
  bool step();
  bool stable() const { return stable_; }

 private:
  std::vector<RefinementSession> sessions_;
  Interner interner_;
  std::vector<ColorMap> current_;
  std::size_t round_ = 0;
  bool stable_ = false;
};

}  // namespace linkwl
