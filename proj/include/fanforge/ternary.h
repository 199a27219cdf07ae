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

// Finite ternary semigroups given by multiplication tables, their characters
// into the three-element semigroup {+1, 0, -1}, and the specialization
// calculus on characters.

#ifndef FANFORGE_TERNARY_H_
#define FANFORGE_TERNARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanforge/report.h"

namespace fanforge {

enum class Sign3 : std::int8_t { kMinus = -1, kZero = 0, kPlus = 1 };

inline Sign3 operator*(Sign3 a, Sign3 b) {
  return static_cast<Sign3>(static_cast<std::int8_t>(a) * static_cast<std::int8_t>(b));
}

// '+', '0' or '-'.
char sign_char(Sign3 s);
// Throws StructuralError on anything but '+', '0', '-'.
Sign3 sign_from_char(char c);

// A commutative multiplication table on elements 0..size-1 with marked
// constants. The constructor only checks that indices are in range; the
// algebraic axioms are checked by validate_table.
class TernaryTable {
 public:
  TernaryTable(int size, int one, int zero, int minus_one, std::vector<int> mul);

  // The three-element semigroup itself, ordered 0, +1, -1.
  static TernaryTable sign3();

  int size() const { return size_; }
  int one() const { return one_; }
  int zero() const { return zero_; }
  int minus_one() const { return minus_one_; }
  int mul(int x, int y) const { return mul_[x * size_ + y]; }
  const std::vector<int>& mul_table() const { return mul_; }

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;

 private:
  int size_;
  int one_;
  int zero_;
  int minus_one_;
  std::vector<int> mul_;
};

// Values of a map from table elements into Sign3, indexed by element. Whether
// it is a homomorphism is a property checked by is_character.
using Character = std::vector<Sign3>;

// Membership vector of h^{-1}[0].
using ZeroSet = std::vector<bool>;

ValidationReport validate_table(const TernaryTable& t);

bool is_character(const TernaryTable& t, const Character& h);

// The enumeration cap on table size: FANFORGE_CAP if set to a positive
// integer, else 64.
int default_character_cap();

// All characters of t in lexicographic order of their value vectors, with
// -1 < 0 < +1. Throws ResourceError when t.size() exceeds the cap.
std::vector<Character> enumerate_characters(const TernaryTable& t,
                                            std::optional<int> cap = std::nullopt);

// Pointwise products. Throws UsageError on length mismatch.
Character pointwise_product(const Character& a, const Character& b);
Character triple_product(const Character& a, const Character& b, const Character& c);

// The four equivalent tests for "h is a specialization of g".
enum class Criterion {
  kOnesShrink,       // h^{-1}[1] is contained in g^{-1}[1]
  kNonNegativeGrow,  // g^{-1}[{0,1}] is contained in h^{-1}[{0,1}]
  kZeroAgreement,    // Z(g) in Z(h), and g = h off Z(h)
  kSquareIdentity,   // h = h^2 g
};

inline constexpr Criterion kAllCriteria[] = {Criterion::kOnesShrink, Criterion::kNonNegativeGrow,
                                             Criterion::kZeroAgreement, Criterion::kSquareIdentity};

std::string criterion_name(Criterion c);

// g specializes to h (written g ~> h), decided by the square identity.
bool specializes(const Character& g, const Character& h);
bool specializes_by(Criterion criterion, const Character& g, const Character& h);

ZeroSet zero_set(const Character& h);

enum class ZeroSetRelation { kSubset, kEqual, kSuperset, kIncomparable };

std::string relation_name(ZeroSetRelation r);

// Relation of Z(g) to Z(h). Computed from the sets and from the identities
// h = h g^2 and g^2 = h^2; a disagreement throws std::logic_error.
ZeroSetRelation zero_set_order(const Character& g, const Character& h);

struct FanCheck {
  bool is_fan = true;
  std::string reason;
};

// Separation of points, total order of zero-sets and closure of the
// character set under triple products.
FanCheck check_fan(const TernaryTable& t, const std::vector<Character>& characters);

// Throws NotAFanError carrying check_fan's reason.
void require_fan(const TernaryTable& t, const std::vector<Character>& characters);

std::string character_string(const Character& h);

}  // namespace fanforge

#endif  // FANFORGE_TERNARY_H_
