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

#include "linkwl/interner.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace linkwl {
namespace {

std::atomic<std::uint64_t> next_session{1};

}  // namespace

std::size_t Interner::SignatureHash::operator()(
    const std::vector<std::uint32_t>& sig) const noexcept {
  // splitmix-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ sig.size();
  for (std::uint32_t w : sig) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

Interner::Interner() : session_id_(next_session.fetch_add(1)) {}

Interner::Round& Interner::round_at(std::size_t round) {
  while (rounds_.size() <= round) {
    rounds_.push_back(std::make_unique<Round>());
    sizes_.push_back(0);
  }
  if (!rounds_[round]) throw std::logic_error("interning into released round " + std::to_string(round));
  return *rounds_[round];
}

ColorId Interner::intern(std::size_t round, std::span<const std::uint32_t> signature) {
  Round& r = round_at(round);
  scratch_.assign(signature.begin(), signature.end());
  auto it = r.table.find(scratch_);
  if (it != r.table.end()) return it->second;
  const auto id = static_cast<ColorId>(r.by_id.size());
  auto [pos, inserted] = r.table.emplace(scratch_, id);
  r.by_id.push_back(&pos->first);
  sizes_[round] = r.by_id.size();
  return id;
}

std::size_t Interner::round_size(std::size_t round) const {
  return round < sizes_.size() ? sizes_[round] : 0;
}

std::span<const std::uint32_t> Interner::signature(std::size_t round, ColorId id) const {
  if (round >= rounds_.size() || !rounds_[round] || id >= rounds_[round]->by_id.size()) {
    throw std::out_of_range("no signature for color " + std::to_string(id) + " in round " +
                            std::to_string(round));
  }
  return *rounds_[round]->by_id[id];
}

void Interner::release_before(std::size_t round) {
  for (std::size_t r = 0; r < round && r < rounds_.size(); ++r) rounds_[r].reset();
}

}  // namespace linkwl
