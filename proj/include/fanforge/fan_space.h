// Copyright 2026 The Authors.
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

// The character space of a validated fan.
//
// Characters carry both their value vectors over the table and their chain
// coordinates. Ids are assigned in (depth, functional) order, so a smaller
// id is always the lexicographically smaller choice. Specialization is
// decided pointwise; the triple product of any three characters is
// tabulated once at construction.

#ifndef FANFORGE_FAN_SPACE_H_
#define FANFORGE_FAN_SPACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fanforge/fan_chain.h"
#include "fanforge/root_system.h"
#include "fanforge/ternary.h"

namespace fanforge {

using CharId = int;

inline constexpr int kMaxCharacters = 128;

class FanSpace {
 public:
  // Both throw NotAFanError when the fan criterion fails and ResourceError
  // when the space exceeds kMaxCharacters.
  static FanSpace from_chain(const FanChain& c);
  static FanSpace from_table(const TernaryTable& t, std::optional<int> cap = std::nullopt);

  const TernaryTable& table() const { return table_; }
  const FanChain& chain() const { return chain_; }
  const std::vector<SliceElement>& element_coords() const { return element_coords_; }

  int size() const { return static_cast<int>(chars_.size()); }
  int length() const { return chain_.length(); }

  const Character& character(CharId h) const { return chars_[h]; }
  const std::vector<Character>& characters() const { return chars_; }
  const ChainCharacter& coords(CharId h) const { return coords_[h]; }
  int depth(CharId h) const { return coords_[h].depth; }
  const std::vector<CharId>& level(int d) const { return order_.level(d); }

  bool specializes(CharId g, CharId h) const { return spec_[static_cast<size_t>(g) * size() + h]; }

  CharId triple(CharId a, CharId b, CharId c) const {
    return triple_[(static_cast<size_t>(a) * size() + b) * size() + c];
  }

  std::optional<CharId> find(const Character& h) const;
  std::optional<CharId> find(const ChainCharacter& h) const;

  // The root system of the pointwise order.
  const RootSystem& order() const { return order_; }

  // "d<depth>:<functional bitstring>".
  std::string label(CharId h) const;

  // Throws UsageError when h is not an id of this space.
  void require_id(CharId h) const;

 private:
  FanSpace(TernaryTable table, FanChain chain, std::vector<SliceElement> element_coords,
           std::vector<Character> chars, std::vector<ChainCharacter> coords);

  TernaryTable table_;
  FanChain chain_;
  std::vector<SliceElement> element_coords_;
  std::vector<Character> chars_;
  std::vector<ChainCharacter> coords_;
  std::vector<std::uint8_t> spec_;
  std::vector<std::int16_t> triple_;
  std::unordered_map<std::string, CharId> by_values_;
  RootSystem order_;
};

}  // namespace fanforge

#endif  // FANFORGE_FAN_SPACE_H_
