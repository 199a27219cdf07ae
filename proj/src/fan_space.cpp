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

#include "fanforge/fan_space.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fanforge/error.h"

namespace fanforge {
namespace {

std::string key(const Character& h) {
  return std::string(reinterpret_cast<const char*>(h.data()), h.size());
}

std::vector<std::uint8_t> pointwise_order(const std::vector<Character>& chars) {
  const size_t n = chars.size();
  std::vector<std::uint8_t> spec(n * n);
  for (size_t g = 0; g < n; ++g) {
    for (size_t h = 0; h < n; ++h) spec[g * n + h] = specializes(chars[g], chars[h]);
  }
  return spec;
}

// Parent of h is its unique specialization one level up.
Forest forest_of(const std::vector<ChainCharacter>& coords, const std::vector<std::uint8_t>& spec) {
  const int n = static_cast<int>(coords.size());
  Forest f;
  for (int h = 0; h < n; ++h) {
    int parent = -1;
    if (coords[h].depth > 1) {
      for (int g = 0; g < n; ++g) {
        if (coords[g].depth != coords[h].depth - 1 || !spec[h * n + g]) continue;
        if (parent != -1) {
          throw std::logic_error("two successors one level up");
        }
        parent = g;
      }
      if (parent == -1) throw std::logic_error("missing successor");
    }
    f.add(coords[h].depth, parent);
  }
  return f;
}

}  // namespace

FanSpace::FanSpace(TernaryTable table, FanChain chain, std::vector<SliceElement> element_coords,
                   std::vector<Character> chars, std::vector<ChainCharacter> coords)
    : table_(std::move(table)),
      chain_(std::move(chain)),
      element_coords_(std::move(element_coords)),
      chars_(std::move(chars)),
      coords_(std::move(coords)),
      spec_(pointwise_order(chars_)),
      order_(forest_of(coords_, spec_)) {
  const int n = size();
  for (int h = 0; h < n; ++h) by_values_.emplace(key(chars_[h]), h);

  // Depth by zero-set inclusion and by the length of the up-set must both
  // agree with the chain coordinate.
  for (int h = 0; h < n; ++h) {
    ZeroSet zh = zero_set(chars_[h]);
    std::vector<ZeroSet> containing;
    int up = 0;
    for (int g = 0; g < n; ++g) {
      up += specializes(h, g) ? 1 : 0;
      ZeroSet zg = zero_set(chars_[g]);
      bool contains = true;
      for (size_t a = 0; a < zg.size() && contains; ++a) {
        if (zh[a] && !zg[a]) contains = false;
      }
      if (contains && std::find(containing.begin(), containing.end(), zg) == containing.end()) {
        containing.push_back(std::move(zg));
      }
    }
    if (static_cast<int>(containing.size()) != depth(h) || up != depth(h)) {
      throw std::logic_error("depth disagreement at " + label(h));
    }
  }
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (order_.specializes(g, h) != specializes(g, h)) {
        throw std::logic_error("forest closure differs from pointwise order");
      }
    }
  }

  triple_.assign(static_cast<size_t>(n) * n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int c = b; c < n; ++c) {
        auto it = by_values_.find(key(triple_product(chars_[a], chars_[b], chars_[c])));
        if (it == by_values_.end()) {
          throw NotAFanError("not a fan: triple product of " + label(a) + ", " + label(b) + ", " +
                             label(c) + " is not a character");
        }
        std::int16_t p = static_cast<std::int16_t>(it->second);
        int idx[3] = {a, b, c};
        std::sort(idx, idx + 3);
        do {
          triple_[(static_cast<size_t>(idx[0]) * n + idx[1]) * n + idx[2]] = p;
        } while (std::next_permutation(idx, idx + 3));
      }
    }
  }
}

FanSpace FanSpace::from_chain(const FanChain& c) {
  ValidationReport report = validate_chain(c);
  if (!report.ok()) {
    throw NotAFanError("invalid chain: " + report.violations.front().rule + " at " +
                       report.violations.front().detail);
  }
  std::vector<ChainCharacter> coords = chain_characters(c);
  if (static_cast<int>(coords.size()) > kMaxCharacters) {
    throw ResourceError("chain has " + std::to_string(coords.size()) + " characters, limit is " +
                        std::to_string(kMaxCharacters));
  }
  TernaryTable table = chain_to_table(c);
  std::vector<Character> chars;
  for (const ChainCharacter& h : coords) chars.push_back(evaluate(c, h));
  for (const Character& h : chars) {
    if (!is_character(table, h)) {
      throw std::logic_error("chain functional is not a character");
    }
  }
  require_fan(table, chars);
  return FanSpace(std::move(table), c, chain_elements(c), std::move(chars), std::move(coords));
}

FanSpace FanSpace::from_table(const TernaryTable& t, std::optional<int> cap) {
  ChainDecomposition dec = decompose_table(t, cap);
  if (static_cast<int>(dec.characters.size()) > kMaxCharacters) {
    throw ResourceError("table has too many characters");
  }
  std::vector<ChainCharacter> coords;
  for (const Character& h : dec.characters) {
    ChainCharacter cc;
    for (const SliceElement& x : dec.coords) {
      if (x.depth != 0 && h[&x - dec.coords.data()] != Sign3::kZero) {
        cc.depth = std::max(cc.depth, x.depth);
      }
    }
    const std::vector<int>& basis = dec.slice_basis[cc.depth - 1];
    for (size_t i = 0; i < basis.size(); ++i) {
      if (h[basis[i]] == Sign3::kMinus) cc.functional |= Bits{1} << i;
    }
    for (int a = 0; a < t.size(); ++a) {
      if (evaluate_at(dec.chain, cc, dec.coords[a]) != h[a]) {
        throw std::logic_error("character disagrees with its coordinates");
      }
    }
    coords.push_back(cc);
  }
  std::vector<int> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return coords[a] < coords[b]; });
  std::vector<Character> chars;
  std::vector<ChainCharacter> sorted;
  for (int i : order) {
    chars.push_back(dec.characters[i]);
    sorted.push_back(coords[i]);
  }
  return FanSpace(t, std::move(dec.chain), std::move(dec.coords), std::move(chars),
                  std::move(sorted));
}

std::optional<CharId> FanSpace::find(const Character& h) const {
  auto it = by_values_.find(key(h));
  if (it == by_values_.end()) return std::nullopt;
  return it->second;
}

std::optional<CharId> FanSpace::find(const ChainCharacter& h) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), h);
  if (it == coords_.end() || !(*it == h)) return std::nullopt;
  return static_cast<CharId>(it - coords_.begin());
}

std::string FanSpace::label(CharId h) const {
  const ChainCharacter& c = coords_[h];
  return "d" + std::to_string(c.depth) + ":" + to_bitstring(c.functional, chain_.dim(c.depth));
}

void FanSpace::require_id(CharId h) const {
  if (h < 0 || h >= size()) {
    throw UsageError("character id " + std::to_string(h) + " out of range");
  }
}

}  // namespace fanforge
