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

#include "fanforge/fan_chain.h"

#include <algorithm>
#include <map>
#include <string>

#include "fanforge/error.h"

namespace fanforge {
namespace {

long long table_size(const FanChain& c) {
  long long size = 1;
  for (int k : c.dims) size += 1LL << k;
  return size;
}

// Index of an element in the canonical order of chain_elements.
class ElementIndex {
 public:
  explicit ElementIndex(const FanChain& c) : c_(c), offset_(c.length() + 1) {
    long long at = 1;
    for (int d = 1; d <= c.length(); ++d) {
      offset_[d] = at;
      at += 1LL << c.dim(d);
    }
  }

  int operator()(SliceElement x) const {
    if (x.depth == 0) return 0;
    if (x.depth > 1) return static_cast<int>(offset_[x.depth] + x.vec);
    Bits minus = c_.minus_at(1);
    if (x.vec == 0) return 1;
    if (x.vec == minus) return 2;
    Bits rank = x.vec - 1 - (x.vec > minus ? 1 : 0);
    return static_cast<int>(3 + rank);
  }

 private:
  const FanChain& c_;
  std::vector<long long> offset_;
};

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void check_chain_structure(const FanChain& c) {
  const int n = c.length();
  if (n == 0) throw StructuralError("chain has no levels");
  if (static_cast<int>(c.minus.size()) != n) {
    throw StructuralError("chain needs one minus vector per level");
  }
  if (static_cast<int>(c.tau.size()) != n - 1) {
    throw StructuralError("chain needs one transition per consecutive pair");
  }
  for (int d = 1; d <= n; ++d) {
    if (c.dim(d) < 1 || c.dim(d) > kMaxDim) {
      throw StructuralError("dimension out of range at d=" + std::to_string(d));
    }
    if ((c.minus_at(d) & ~low_mask(c.dim(d))) != 0) {
      throw StructuralError("minus vector too wide at d=" + std::to_string(d));
    }
  }
  for (int d = 1; d < n; ++d) {
    const Gf2Matrix& t = c.tau_at(d);
    if (t.rows() != c.dim(d + 1) || t.cols() != c.dim(d)) {
      throw StructuralError("transition has wrong shape at d=" + std::to_string(d));
    }
  }
}

ValidationReport validate_chain(const FanChain& c) {
  check_chain_structure(c);
  ValidationReport report;
  for (int d = 1; d <= c.length(); ++d) {
    if (c.minus_at(d) == 0) {
      report.add("minus-nonzero", "d=" + std::to_string(d));
    }
  }
  for (int d = 1; d < c.length(); ++d) {
    if (c.tau_at(d).apply(c.minus_at(d)) != c.minus_at(d + 1)) {
      report.add("tau-preserves-minus", "d=" + std::to_string(d));
    }
  }
  return report;
}

Gf2Matrix transition(const FanChain& c, int d, int e) {
  if (d < 1 || d > e || e > c.length()) {
    throw UsageError("transition needs 1 <= d <= e <= n, got d=" + std::to_string(d) +
                     " e=" + std::to_string(e));
  }
  Gf2Matrix m = Gf2Matrix::identity(c.dim(d));
  for (int s = d; s < e; ++s) m = c.tau_at(s) * m;
  return m;
}

std::vector<SliceElement> chain_elements(const FanChain& c) {
  std::vector<SliceElement> out;
  out.push_back({0, 0});
  out.push_back({1, 0});
  out.push_back({1, c.minus_at(1)});
  for (Bits v = 1; v < (Bits{1} << c.dim(1)); ++v) {
    if (v != c.minus_at(1)) out.push_back({1, v});
  }
  for (int d = 2; d <= c.length(); ++d) {
    for (Bits v = 0; v < (Bits{1} << c.dim(d)); ++v) out.push_back({d, v});
  }
  return out;
}

SliceElement chain_product(const FanChain& c, SliceElement x, SliceElement y) {
  if (x.depth == 0 || y.depth == 0) return {0, 0};
  if (x.depth > y.depth) std::swap(x, y);
  Bits moved = x.vec;
  for (int s = x.depth; s < y.depth; ++s) moved = c.tau_at(s).apply(moved);
  return {y.depth, moved ^ y.vec};
}

TernaryTable chain_to_table(const FanChain& c) {
  check_chain_structure(c);
  if (table_size(c) > kMaxTableSize) {
    throw ResourceError("chain table would have " + std::to_string(table_size(c)) + " elements");
  }
  std::vector<SliceElement> elems = chain_elements(c);
  ElementIndex index(c);
  const int m = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      int p = index(chain_product(c, elems[a], elems[b]));
      mul[a * m + b] = p;
      mul[b * m + a] = p;
    }
  }
  return TernaryTable(m, 1, 0, 2, std::move(mul));
}

std::vector<ChainCharacter> chain_characters(const FanChain& c) {
  check_chain_structure(c);
  std::vector<ChainCharacter> out;
  for (int d = 1; d <= c.length(); ++d) {
    for (Bits f = 0; f < (Bits{1} << c.dim(d)); ++f) {
      if (parity(f & c.minus_at(d))) out.push_back({d, f});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Sign3 evaluate_at(const FanChain& c, const ChainCharacter& h, SliceElement x) {
  if (x.depth == 0 || x.depth > h.depth) return Sign3::kZero;
  Bits moved = x.vec;
  for (int s = x.depth; s < h.depth; ++s) moved = c.tau_at(s).apply(moved);
  return parity(h.functional & moved) ? Sign3::kMinus : Sign3::kPlus;
}

Character evaluate(const FanChain& c, const ChainCharacter& h) {
  std::vector<SliceElement> elems = chain_elements(c);
  Character out(elems.size());
  for (size_t a = 0; a < elems.size(); ++a) out[a] = evaluate_at(c, h, elems[a]);
  return out;
}

bool chain_specializes(const FanChain& c, const ChainCharacter& g, const ChainCharacter& h) {
  if (h.depth > g.depth) return false;
  return pull_back(g.functional, transition(c, h.depth, g.depth)) == h.functional;
}

Cardinalities cardinalities(const FanChain& c) {
  check_chain_structure(c);
  Cardinalities out;
  out.card_f = 1;
  for (int k : c.dims) {
    out.card_f += 1LL << k;
    out.card_x += 1LL << (k - 1);
  }
  if (out.card_f != 2 * out.card_x + 1) {
    throw std::logic_error("cardinality identity failed");
  }
  return out;
}

ChainDecomposition decompose_table(const TernaryTable& t, std::optional<int> cap) {
  if (!validate_table(t).ok()) {
    throw NotAFanError("not a fan: table fails the ternary semigroup axioms");
  }
  ChainDecomposition out;
  out.characters = enumerate_characters(t, cap);
  require_fan(t, out.characters);
  const int m = t.size();

  // Ideals I_1 > I_2 > ... > I_n, largest first.
  std::vector<ZeroSet> ideals;
  for (const Character& h : out.characters) {
    ZeroSet z = zero_set(h);
    if (std::find(ideals.begin(), ideals.end(), z) == ideals.end()) {
      ideals.push_back(std::move(z));
    }
  }
  auto card = [](const ZeroSet& z) { return std::count(z.begin(), z.end(), true); };
  std::sort(ideals.begin(), ideals.end(),
            [&](const ZeroSet& a, const ZeroSet& b) { return card(a) > card(b); });
  const int n = static_cast<int>(ideals.size());
  if (card(ideals.back()) != 1) {
    throw NotAFanError("not a fan: smallest zero-set is not {0}");
  }

  // slice(a) = 1 + number of ideals containing a; zero gets depth 0.
  out.coords.assign(m, SliceElement{});
  std::vector<std::vector<int>> slice(n + 1);
  for (int a = 0; a < m; ++a) {
    if (a == t.zero()) continue;
    int depth = 1;
    for (const ZeroSet& z : ideals) depth += z[a] ? 1 : 0;
    out.coords[a].depth = depth;
    slice[depth].push_back(a);
  }

  FanChain& chain = out.chain;
  out.slice_basis.assign(n, {});
  std::vector<int> unit(n + 1);
  for (int d = 1; d <= n; ++d) {
    const std::vector<int>& members = slice[d];
    std::string where = "slice " + std::to_string(d);
    if (!is_power_of_two(members.size()) || members.size() < 2) {
      throw NotAFanError("not a fan: " + where + " has " + std::to_string(members.size()) +
                         " elements");
    }
    int u = t.mul(members[0], members[0]);
    unit[d] = u;
    for (int a : members) {
      if (t.mul(a, a) != u || t.mul(u, a) != a) {
        throw NotAFanError("not a fan: " + where + " is not a group of exponent 2 at element " +
                           std::to_string(a));
      }
    }
    // Greedy basis in element order; span[i] lists elements reached so far.
    std::map<int, Bits> coord = {{u, 0}};
    std::vector<int> span = {u};
    std::vector<int>& basis = out.slice_basis[d - 1];
    for (int a : members) {
      if (coord.count(a)) continue;
      Bits bit = Bits{1} << basis.size();
      basis.push_back(a);
      const size_t before = span.size();
      for (size_t i = 0; i < before; ++i) {
        int p = t.mul(span[i], a);
        if (coord.count(p) || out.coords[p].depth != d) {
          throw NotAFanError("not a fan: " + where + " is not closed or not free at element " +
                             std::to_string(p));
        }
        coord[p] = coord[span[i]] | bit;
        span.push_back(p);
      }
    }
    for (int a : members) out.coords[a].vec = coord.at(a);
    chain.dims.push_back(static_cast<int>(basis.size()));
    int minus = t.mul(t.minus_one(), u);
    if (out.coords[minus].depth != d) {
      throw NotAFanError("not a fan: -1 times the unit leaves " + where);
    }
    chain.minus.push_back(out.coords[minus].vec);
  }

  // tau_d sends b to the unique element of slice d+1 congruent to it modulo
  // I_{d+1}, i.e. agreeing with it after multiplication by some z outside.
  for (int d = 1; d < n; ++d) {
    Gf2Matrix tau(chain.dims[d], chain.dims[d - 1]);
    const std::vector<int>& basis = out.slice_basis[d - 1];
    for (size_t i = 0; i < basis.size(); ++i) {
      int image = -1;
      for (int b : slice[d + 1]) {
        bool congruent = false;
        for (int z = 0; z < m && !congruent; ++z) {
          if (z == t.zero() || ideals[d][z]) continue;
          congruent = t.mul(basis[i], z) == t.mul(b, z);
        }
        if (!congruent) continue;
        if (image != -1) {
          throw NotAFanError("not a fan: element " + std::to_string(basis[i]) +
                             " has two images in slice " + std::to_string(d + 1));
        }
        image = b;
      }
      if (image == -1) {
        throw NotAFanError("not a fan: element " + std::to_string(basis[i]) +
                           " has no image in slice " + std::to_string(d + 1));
      }
      Bits col = out.coords[image].vec;
      for (int r = 0; r < tau.rows(); ++r) {
        if ((col >> r) & 1) tau.set(r, static_cast<int>(i), true);
      }
    }
    chain.tau.push_back(std::move(tau));
  }
  if (!validate_chain(chain).ok()) {
    throw NotAFanError("not a fan: induced chain violates its invariants");
  }
  return out;
}

FanChain table_to_chain(const TernaryTable& t, std::optional<int> cap) {
  return decompose_table(t, cap).chain;
}

std::optional<std::vector<int>> chain_table_isomorphism(const TernaryTable& t,
                                                        const ChainDecomposition& d) {
  TernaryTable model = chain_to_table(d.chain);
  if (model.size() != t.size()) return std::nullopt;
  ElementIndex index(d.chain);
  std::vector<int> map(t.size());
  std::vector<bool> hit(t.size(), false);
  for (int a = 0; a < t.size(); ++a) {
    int image = index(d.coords[a]);
    if (image < 0 || image >= model.size() || hit[image]) return std::nullopt;
    hit[image] = true;
    map[a] = image;
  }
  if (map[t.one()] != model.one() || map[t.zero()] != model.zero() ||
      map[t.minus_one()] != model.minus_one()) {
    return std::nullopt;
  }
  for (int a = 0; a < t.size(); ++a) {
    for (int b = a; b < t.size(); ++b) {
      if (map[t.mul(a, b)] != model.mul(map[a], map[b])) return std::nullopt;
    }
  }
  return map;
}

}  // namespace fanforge
