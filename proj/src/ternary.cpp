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

#include "fanforge/ternary.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "fanforge/error.h"

namespace fanforge {
namespace {

constexpr std::int8_t kUnset = 2;

std::string tuple(std::initializer_list<int> xs) {
  std::string out = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

void require_same_length(const Character& a, const Character& b) {
  if (a.size() != b.size()) {
    throw UsageError("characters of different tables");
  }
}

// Depth-first search over value assignments with forced propagation.
class CharacterSearch {
 public:
  explicit CharacterSearch(const TernaryTable& t) : t_(t), value_(t.size(), kUnset) {}

  std::vector<Character> run() {
    std::vector<std::pair<int, std::int8_t>> seed = {
        {t_.one(), 1}, {t_.zero(), 0}, {t_.minus_one(), -1}};
    if (assign(seed)) search(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // Assigns the queued values and everything they force. On conflict the
  // trail is left for the caller to undo.
  bool assign(std::vector<std::pair<int, std::int8_t>> queue) {
    while (!queue.empty()) {
      auto [x, v] = queue.back();
      queue.pop_back();
      if (value_[x] != kUnset) {
        if (value_[x] != v) return false;
        continue;
      }
      value_[x] = v;
      trail_.push_back(x);
      for (int y : trail_) {
        queue.emplace_back(t_.mul(x, y), static_cast<std::int8_t>(v * value_[y]));
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  void search(int from) {
    int x = from;
    while (x < t_.size() && value_[x] != kUnset) ++x;
    if (x == t_.size()) {
      Character h(t_.size());
      for (int i = 0; i < t_.size(); ++i) h[i] = static_cast<Sign3>(value_[i]);
      found_.push_back(std::move(h));
      return;
    }
    for (std::int8_t v : {-1, 0, 1}) {
      size_t mark = trail_.size();
      if (assign({{x, v}})) search(x + 1);
      undo(mark);
    }
  }

  const TernaryTable& t_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
  std::vector<Character> found_;
};

}  // namespace

char sign_char(Sign3 s) {
  switch (s) {
    case Sign3::kPlus:
      return '+';
    case Sign3::kZero:
      return '0';
    case Sign3::kMinus:
      return '-';
  }
  return '?';
}

Sign3 sign_from_char(char c) {
  switch (c) {
    case '+':
      return Sign3::kPlus;
    case '0':
      return Sign3::kZero;
    case '-':
      return Sign3::kMinus;
    default:
      throw StructuralError(std::string("bad sign character '") + c + "'");
  }
}

TernaryTable::TernaryTable(int size, int one, int zero, int minus_one, std::vector<int> mul)
    : size_(size), one_(one), zero_(zero), minus_one_(minus_one), mul_(std::move(mul)) {
  if (size_ <= 0) throw StructuralError("table size must be positive");
  auto in_range = [&](int x) { return x >= 0 && x < size_; };
  if (!in_range(one_) || !in_range(zero_) || !in_range(minus_one_)) {
    throw StructuralError("constant index out of range");
  }
  if (mul_.size() != static_cast<size_t>(size_) * size_) {
    throw StructuralError("multiplication table has wrong size");
  }
  for (size_t i = 0; i < mul_.size(); ++i) {
    if (!in_range(mul_[i])) {
      throw StructuralError("product index out of range at entry " + std::to_string(i));
    }
  }
}

TernaryTable TernaryTable::sign3() {
  // Elements: 0 -> 0, 1 -> +1, 2 -> -1.
  return TernaryTable(3, 1, 0, 2, {0, 0, 0, 0, 1, 2, 0, 2, 1});
}

ValidationReport validate_table(const TernaryTable& t) {
  ValidationReport report;
  const int m = t.size();
  auto first = [&](const std::string& rule, auto&& bad) {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (bad(x, y)) {
          report.add(rule, "witness " + tuple({x, y}));
          return;
        }
      }
    }
  };
  first("commutative", [&](int x, int y) { return t.mul(x, y) != t.mul(y, x); });
  [&] {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        for (int z = 0; z < m; ++z) {
          if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
            report.add("associative", "witness " + tuple({x, y, z}));
            return;
          }
        }
      }
    }
  }();
  first("identity", [&](int x, int y) { return y == 0 && t.mul(t.one(), x) != x; });
  first("cube", [&](int x, int y) { return y == 0 && t.mul(t.mul(x, x), x) != x; });
  first("zero-absorbing", [&](int x, int y) { return y == 0 && t.mul(t.zero(), x) != t.zero(); });
  if (t.mul(t.minus_one(), t.minus_one()) != t.one()) {
    report.add("minus-one-square", "witness " + tuple({t.minus_one()}));
  }
  if (t.one() == t.minus_one()) {
    report.add("one-not-minus-one", "witness " + tuple({t.one()}));
  }
  first("minus-one-fixed-point",
        [&](int x, int y) { return y == 0 && x != t.zero() && t.mul(t.minus_one(), x) == x; });
  return report;
}

bool is_character(const TernaryTable& t, const Character& h) {
  if (static_cast<int>(h.size()) != t.size()) return false;
  if (h[t.one()] != Sign3::kPlus || h[t.zero()] != Sign3::kZero ||
      h[t.minus_one()] != Sign3::kMinus) {
    return false;
  }
  for (int x = 0; x < t.size(); ++x) {
    for (int y = x; y < t.size(); ++y) {
      if (h[t.mul(x, y)] != h[x] * h[y]) return false;
    }
  }
  return true;
}

int default_character_cap() {
  if (const char* env = std::getenv("FANFORGE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < (1L << 20)) {
      return static_cast<int>(v);
    }
  }
  return 64;
}

std::vector<Character> enumerate_characters(const TernaryTable& t, std::optional<int> cap) {
  int limit = cap.value_or(default_character_cap());
  if (t.size() > limit) {
    throw ResourceError("table has " + std::to_string(t.size()) + " elements, enumeration cap is " +
                        std::to_string(limit));
  }
  return CharacterSearch(t).run();
}

Character pointwise_product(const Character& a, const Character& b) {
  require_same_length(a, b);
  Character out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Character triple_product(const Character& a, const Character& b, const Character& c) {
  require_same_length(a, b);
  require_same_length(a, c);
  Character out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i] * c[i];
  return out;
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kOnesShrink:
      return "ones-shrink";
    case Criterion::kNonNegativeGrow:
      return "nonnegative-grow";
    case Criterion::kZeroAgreement:
      return "zero-agreement";
    case Criterion::kSquareIdentity:
      return "square-identity";
  }
  return "?";
}

bool specializes(const Character& g, const Character& h) {
  return specializes_by(Criterion::kSquareIdentity, g, h);
}

bool specializes_by(Criterion criterion, const Character& g, const Character& h) {
  require_same_length(g, h);
  const size_t m = g.size();
  switch (criterion) {
    case Criterion::kOnesShrink:
      for (size_t a = 0; a < m; ++a) {
        if (h[a] == Sign3::kPlus && g[a] != Sign3::kPlus) return false;
      }
      return true;
    case Criterion::kNonNegativeGrow:
      for (size_t a = 0; a < m; ++a) {
        if (g[a] != Sign3::kMinus && h[a] == Sign3::kMinus) return false;
      }
      return true;
    case Criterion::kZeroAgreement:
      for (size_t a = 0; a < m; ++a) {
        if (g[a] == Sign3::kZero && h[a] != Sign3::kZero) return false;
        if (h[a] != Sign3::kZero && g[a] != h[a]) return false;
      }
      return true;
    case Criterion::kSquareIdentity:
      for (size_t a = 0; a < m; ++a) {
        if (h[a] * h[a] * g[a] != h[a]) return false;
      }
      return true;
  }
  return false;
}

ZeroSet zero_set(const Character& h) {
  ZeroSet z(h.size());
  for (size_t a = 0; a < h.size(); ++a) z[a] = h[a] == Sign3::kZero;
  return z;
}

std::string relation_name(ZeroSetRelation r) {
  switch (r) {
    case ZeroSetRelation::kSubset:
      return "subset";
    case ZeroSetRelation::kEqual:
      return "equal";
    case ZeroSetRelation::kSuperset:
      return "superset";
    case ZeroSetRelation::kIncomparable:
      return "incomparable";
  }
  return "?";
}

ZeroSetRelation zero_set_order(const Character& g, const Character& h) {
  require_same_length(g, h);
  ZeroSet zg = zero_set(g);
  ZeroSet zh = zero_set(h);
  bool g_in_h = true;
  bool h_in_g = true;
  for (size_t a = 0; a < zg.size(); ++a) {
    if (zg[a] && !zh[a]) g_in_h = false;
    if (zh[a] && !zg[a]) h_in_g = false;
  }
  ZeroSetRelation by_sets = g_in_h && h_in_g ? ZeroSetRelation::kEqual
                            : g_in_h         ? ZeroSetRelation::kSubset
                            : h_in_g         ? ZeroSetRelation::kSuperset
                                             : ZeroSetRelation::kIncomparable;

  Character g2 = pointwise_product(g, g);
  Character h2 = pointwise_product(h, h);
  ZeroSetRelation by_identity = g2 == h2                        ? ZeroSetRelation::kEqual
                                : pointwise_product(h, g2) == h ? ZeroSetRelation::kSubset
                                : pointwise_product(g, h2) == g ? ZeroSetRelation::kSuperset
                                                                : ZeroSetRelation::kIncomparable;
  if (by_sets != by_identity) {
    throw std::logic_error("zero-set relation disagrees: " + relation_name(by_sets) + " vs " +
                           relation_name(by_identity));
  }
  return by_sets;
}

FanCheck check_fan(const TernaryTable& t, const std::vector<Character>& characters) {
  const int m = t.size();
  const int n = static_cast<int>(characters.size());

  // Separation: distinct elements have distinct evaluation vectors.
  std::map<std::vector<Sign3>, int> seen;
  for (int a = 0; a < m; ++a) {
    std::vector<Sign3> eval(n);
    for (int i = 0; i < n; ++i) eval[i] = characters[i][a];
    auto [it, inserted] = seen.emplace(std::move(eval), a);
    if (!inserted) {
      return {false, "characters do not separate elements " + std::to_string(it->second) + " and " +
                         std::to_string(a)};
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (zero_set_order(characters[i], characters[j]) == ZeroSetRelation::kIncomparable) {
        return {false, "zero-sets of characters " + character_string(characters[i]) + " and " +
                           character_string(characters[j]) + " are incomparable"};
      }
    }
  }

  std::set<Character> members(characters.begin(), characters.end());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        if (!members.count(triple_product(characters[i], characters[j], characters[k]))) {
          return {false, "triple product of characters " + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(k) + " is not a character"};
        }
      }
    }
  }
  return {};
}

void require_fan(const TernaryTable& t, const std::vector<Character>& characters) {
  FanCheck check = check_fan(t, characters);
  if (!check.is_fan) throw NotAFanError("not a fan: " + check.reason);
}

std::string character_string(const Character& h) {
  std::string out;
  out.reserve(h.size());
  for (Sign3 s : h) out += sign_char(s);
  return out;
}

}  // namespace fanforge
