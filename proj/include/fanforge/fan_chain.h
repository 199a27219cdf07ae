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

// Finite fans as chains of GF(2) spaces.
//
// Depth d in 1..n carries a space of dimension k_d with a marked nonzero
// vector minus_d (the class of -1). The transition tau_d maps depth d into
// depth d+1 and sends minus_d to minus_{d+1}. The semigroup is {0} together
// with one slice per depth; (d, v) * (e, w) for d <= e is
// (e, T(d, e) v + w), where T(d, e) = tau_{e-1} ... tau_d.

#ifndef FANFORGE_FAN_CHAIN_H_
#define FANFORGE_FAN_CHAIN_H_

#include <optional>
#include <vector>

#include "fanforge/gf2.h"
#include "fanforge/report.h"
#include "fanforge/ternary.h"

namespace fanforge {

struct FanChain {
  std::vector<int> dims;       // k_d at index d-1
  std::vector<Bits> minus;     // minus_d at index d-1
  std::vector<Gf2Matrix> tau;  // tau_d at index d-1, k_{d+1} x k_d

  int length() const { return static_cast<int>(dims.size()); }
  int dim(int depth) const { return dims[depth - 1]; }
  Bits minus_at(int depth) const { return minus[depth - 1]; }
  const Gf2Matrix& tau_at(int depth) const { return tau[depth - 1]; }

  friend bool operator==(const FanChain&, const FanChain&) = default;
};

// A character of depth d, given by a functional on the depth-d space with
// value 1 on minus_d.
struct ChainCharacter {
  int depth = 0;
  Bits functional = 0;

  friend bool operator==(const ChainCharacter&, const ChainCharacter&) = default;
  // Depth first, then lexicographic on the functional's bitstring.
  friend bool operator<(const ChainCharacter& a, const ChainCharacter& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return lex_less(a.functional, b.functional);
  }
};

// Position of a semigroup element: depth 0 is the zero element, otherwise
// the element vec of the given slice.
struct SliceElement {
  int depth = 0;
  Bits vec = 0;

  friend bool operator==(const SliceElement&, const SliceElement&) = default;
};

inline constexpr int kMaxTableSize = 2049;

// Throws StructuralError when shapes are inconsistent: no levels, a
// dimension outside 1..kMaxDim, a vector wider than its space, or a
// transition of the wrong shape.
void check_chain_structure(const FanChain& c);

ValidationReport validate_chain(const FanChain& c);

// T(d, e); the identity when d == e. Throws UsageError unless
// 1 <= d <= e <= n.
Gf2Matrix transition(const FanChain& c, int d, int e);

// Table elements in canonical order: 0, 1, -1, the rest of slice 1, then
// slices 2..n. Within a slice vectors ascend as integers.
std::vector<SliceElement> chain_elements(const FanChain& c);

SliceElement chain_product(const FanChain& c, SliceElement x, SliceElement y);

// Throws ResourceError when the table would exceed kMaxTableSize elements.
TernaryTable chain_to_table(const FanChain& c);

// All characters, ordered by depth then functional.
std::vector<ChainCharacter> chain_characters(const FanChain& c);

Sign3 evaluate_at(const FanChain& c, const ChainCharacter& h, SliceElement x);

// Values over chain_elements(c).
Character evaluate(const FanChain& c, const ChainCharacter& h);

// g ~> h in chain coordinates.
bool chain_specializes(const FanChain& c, const ChainCharacter& g, const ChainCharacter& h);

struct Cardinalities {
  long long card_f = 0;
  long long card_x = 0;
};

Cardinalities cardinalities(const FanChain& c);

// The chain read off a fan table, with the coordinates it assigns to each
// element and the characters it was computed from.
struct ChainDecomposition {
  FanChain chain;
  std::vector<SliceElement> coords;           // per table element
  std::vector<std::vector<int>> slice_basis;  // element indices per depth
  std::vector<Character> characters;
};

// Throws NotAFanError naming a witness when t is not a fan, and
// ResourceError when enumeration exceeds the cap.
ChainDecomposition decompose_table(const TernaryTable& t, std::optional<int> cap = std::nullopt);

FanChain table_to_chain(const TernaryTable& t, std::optional<int> cap = std::nullopt);

// Sends each element of t to the index of its coordinates in
// chain_to_table(d.chain). Returns nullopt unless the result is a bijection
// preserving products and constants.
std::optional<std::vector<int>> chain_table_isomorphism(const TernaryTable& t,
                                                        const ChainDecomposition& d);

}  // namespace fanforge

#endif  // FANFORGE_FAN_CHAIN_H_
