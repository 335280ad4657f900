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

#include "linkwl/lockstep.hpp"

#include <utility>

namespace linkwl {

Lockstep::Lockstep(std::vector<RefinementSession> sessions) : sessions_(std::move(sessions)) {
  current_.reserve(sessions_.size());
  for (const auto& session : sessions_) current_.push_back(session.initial_colors(interner_));
}

bool Lockstep::step() {
  const std::size_t before = class_count();
  for (std::size_t i = 0; i < sessions_.size(); ++i) {
    current_[i] = sessions_[i].refine(current_[i], interner_);
  }
  ++round_;
  interner_.release_before(round_);
  const std::size_t after = class_count();
  record_invariant_check(after >= before);
  stable_ = after == before;
  return !stable_;
}

}  // namespace linkwl
