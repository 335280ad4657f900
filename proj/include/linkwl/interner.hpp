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
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace linkwl {

using ColorId = std::uint32_t;

// Injective signature -> color table, one table per refinement round.
//
// Ids are dense within a round (0..round_size-1) and shared by every session
// that interns into the same round, which is what makes colors of different
// graphs comparable. Lookups compare whole signatures; there is no lossy
// hashing anywhere on the path.
class Interner {
 public:
  Interner();
  Interner(const Interner&) = delete;
  Interner& operator=(const Interner&) = delete;
  Interner(Interner&&) noexcept = default;
  Interner& operator=(Interner&&) noexcept = default;

  std::uint64_t session_id() const { return session_id_; }

  ColorId intern(std::size_t round, std::span<const std::uint32_t> signature);

  // Number of distinct signatures seen in `round` (0 for rounds not started).
  std::size_t round_size(std::size_t round) const;

  // The signature that produced `id` in `round`. Throws std::out_of_range for
  // unknown ids or released rounds.
  std::span<const std::uint32_t> signature(std::size_t round, ColorId id) const;

  // Frees the tables of rounds < `round`; their sizes remain queryable.
  void release_before(std::size_t round);

 private:
  struct SignatureHash {
    std::size_t operator()(const std::vector<std::uint32_t>& sig) const noexcept;
  };
  struct Round {
    std::unordered_map<std::vector<std::uint32_t>, ColorId, SignatureHash> table;
    std::vector<const std::vector<std::uint32_t>*> by_id;
  };

  Round& round_at(std::size_t round);

  std::uint64_t session_id_;
  std::vector<std::unique_ptr<Round>> rounds_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace linkwl
