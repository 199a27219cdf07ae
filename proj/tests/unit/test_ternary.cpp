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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fanforge/error.h"
#include "fanforge/fan_chain.h"
#include "fanforge/ternary.h"
#include "fixtures.h"

using namespace fanforge;

namespace {

// Componentwise product on Sign3 x Sign3; its characters include both
// projections, whose zero-sets are incomparable.
TernaryTable square_of_sign3() {
  const TernaryTable s = TernaryTable::sign3();
  std::vector<int> mul(81);
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      mul[a * 9 + b] = 3 * s.mul(a / 3, b / 3) + s.mul(a % 3, b % 3);
    }
  }
  return TernaryTable(9, 4, 0, 8, mul);
}

// All homomorphisms by exhaustive assignment.
std::vector<Character> brute_characters(const TernaryTable& t) {
  std::vector<Character> out;
  const int m = t.size();
  long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    Character h(m);
    long rest = code;
    for (int i = 0; i < m; ++i) {
      h[i] = static_cast<Sign3>(static_cast<int>(rest % 3) - 1);
      rest /= 3;
    }
    if (h[t.one()] != Sign3::kPlus || h[t.zero()] != Sign3::kZero ||
        h[t.minus_one()] != Sign3::kMinus) {
      continue;
    }
    bool hom = true;
    for (int a = 0; a < m && hom; ++a) {
      for (int b = 0; b < m && hom; ++b) hom = h[t.mul(a, b)] == h[a] * h[b];
    }
    if (hom) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sign3 is a valid ternary semigroup with one character") {
  TernaryTable s = TernaryTable::sign3();
  CHECK(validate_table(s).ok());
  std::vector<Character> chars = enumerate_characters(s);
  REQUIRE(chars.size() == 1);
  CHECK(character_string(chars[0]) == "0+-");
  CHECK(check_fan(s, chars).is_fan);
}

TEST_CASE("table constructor rejects out-of-range indices") {
  CHECK_THROWS_AS(TernaryTable(3, 1, 0, 3, {0, 0, 0, 0, 1, 2, 0, 2, 1}), StructuralError);
  CHECK_THROWS_AS(TernaryTable(3, 1, 0, 2, {0, 0, 0, 0, 1, 2, 0, 2, 5}), StructuralError);
  CHECK_THROWS_AS(TernaryTable(3, 1, 0, 2, {0, 0, 0}), StructuralError);
}

TEST_CASE("validate_table names the broken axiom") {
  TernaryTable s = TernaryTable::sign3();
  std::vector<int> mul = s.mul_table();
  mul[1 * 3 + 2] = 1;  // +1 * -1 = +1, but -1 * +1 = -1
  CHECK(validate_table(TernaryTable(3, 1, 0, 2, mul)).mentions("commutative"));
  CHECK(validate_table(TernaryTable(3, 1, 0, 1, s.mul_table())).mentions("one-not-minus-one"));
  std::vector<int> no_square = s.mul_table();
  no_square[2 * 3 + 2] = 2;
  CHECK(validate_table(TernaryTable(3, 1, 0, 2, no_square)).mentions("minus-one-square"));
}

TEST_CASE("character enumeration agrees with exhaustive assignment") {
  for (const char* name : {"triv.fan", "e1.fan", "e1prime.fan", "e2.fan", "ea.fan", "eb.fan"}) {
    TernaryTable t = chain_to_table(fixtures::load(name));
    CAPTURE(name);
    CHECK(enumerate_characters(t) == brute_characters(t));
  }
  TernaryTable sq = square_of_sign3();
  CHECK(validate_table(sq).ok());
  CHECK(enumerate_characters(sq) == brute_characters(sq));
}

TEST_CASE("character enumeration respects the cap") {
  TernaryTable t = chain_to_table(fixtures::load("ea.fan"));
  CHECK_THROWS_AS(enumerate_characters(t, 5), ResourceError);
  CHECK_NOTHROW(enumerate_characters(t, 9));
}

TEST_CASE("product of two copies of sign3 is not a fan") {
  TernaryTable sq = square_of_sign3();
  std::vector<Character> chars = enumerate_characters(sq);
  FanCheck check = check_fan(sq, chars);
  CHECK_FALSE(check.is_fan);
  CHECK(check.reason.find("incomparable") != std::string::npos);
  CHECK_THROWS_AS(require_fan(sq, chars), NotAFanError);
}

TEST_CASE("specialization criteria agree on all character pairs of the named fans") {
  for (const fanforge::FanChain& c : fixtures::named_chains()) {
    TernaryTable t = chain_to_table(c);
    std::vector<Character> chars = enumerate_characters(t, kMaxTableSize);
    for (const Character& g : chars) {
      for (const Character& h : chars) {
        bool expected = specializes_by(Criterion::kOnesShrink, g, h);
        for (Criterion k : kAllCriteria) CHECK(specializes_by(k, g, h) == expected);
        CHECK(specializes(g, h) == expected);
      }
    }
  }
}

TEST_CASE("zero-set order matches set inclusion") {
  for (const char* name : {"e1.fan", "ea.fan", "eb.fan"}) {
    TernaryTable t = chain_to_table(fixtures::load(name));
    std::vector<Character> chars = enumerate_characters(t);
    for (const Character& g : chars) {
      for (const Character& h : chars) {
        ZeroSet zg = zero_set(g), zh = zero_set(h);
        bool g_in_h = true, h_in_g = true;
        for (size_t a = 0; a < zg.size(); ++a) {
          g_in_h = g_in_h && (!zg[a] || zh[a]);
          h_in_g = h_in_g && (!zh[a] || zg[a]);
        }
        ZeroSetRelation expected = g_in_h && h_in_g ? ZeroSetRelation::kEqual
                                   : g_in_h         ? ZeroSetRelation::kSubset
                                   : h_in_g         ? ZeroSetRelation::kSuperset
                                                    : ZeroSetRelation::kIncomparable;
        CHECK(zero_set_order(g, h) == expected);
      }
    }
  }
}

TEST_CASE("pointwise products check lengths") {
  Character a = {Sign3::kZero, Sign3::kPlus};
  Character b = {Sign3::kZero, Sign3::kPlus, Sign3::kMinus};
  CHECK_THROWS_AS(pointwise_product(a, b), UsageError);
  CHECK_THROWS_AS(triple_product(a, a, b), UsageError);
  CHECK(triple_product(b, b, b) == b);
}

TEST_CASE("sign characters round trip") {
  for (Sign3 s : {Sign3::kMinus, Sign3::kZero, Sign3::kPlus}) {
    CHECK(sign_from_char(sign_char(s)) == s);
  }
  CHECK_THROWS_AS(sign_from_char('x'), StructuralError);
}

TEST_CASE("FANFORGE_CAP defaults to 64") {
  if (std::getenv("FANFORGE_CAP") == nullptr) CHECK(default_character_cap() == 64);
}
