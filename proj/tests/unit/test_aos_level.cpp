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
#include <set>

#include "fanforge/aos_level.h"
#include "fanforge/corpus.h"
#include "fanforge/error.h"
#include "fanforge/spectral_order.h"
#include "fixtures.h"

using namespace fanforge;

namespace {

// Closure under triple products by fixpoint on the characters themselves.
std::vector<CharId> oracle_closure(const FanSpace& x, std::vector<CharId> a) {
  std::set<CharId> cur(a.begin(), a.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CharId> v(cur.begin(), cur.end());
    for (CharId p : v) {
      for (CharId q : v) {
        for (CharId r : v) {
          std::optional<CharId> t =
              x.find(triple_product(x.character(p), x.character(q), x.character(r)));
          REQUIRE(t.has_value());
          grew = cur.insert(*t).second || grew;
        }
      }
    }
  }
  return {cur.begin(), cur.end()};
}

bool oracle_dependent(const FanSpace& x, const std::vector<CharId>& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<CharId> rest;
    for (size_t j = 0; j < a.size(); ++j) {
      if (j != i) rest.push_back(a[j]);
    }
    std::vector<CharId> c = oracle_closure(x, rest);
    if (std::binary_search(c.begin(), c.end(), a[i])) return true;
  }
  return false;
}

int log2_size(size_t n) {
  int k = 0;
  while ((size_t{1} << k) < n) ++k;
  return k;
}

CharId oracle_phi(const FanSpace& x, const InvolutionHandle& hd, CharId h) {
  return *x.find(triple_product(x.character(h), x.character(hd.g1), x.character(hd.g2)));
}

std::vector<InvolutionHandle> same_level_handles(const FanSpace& x) {
  std::vector<InvolutionHandle> out;
  for (int e = 1; e <= x.length(); ++e) {
    for (CharId g1 : x.level(e)) {
      for (CharId g2 : x.level(e)) {
        for (int d = 1; d <= e; ++d) out.push_back({g1, g2, d});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("level spaces of E1") {
  FanSpace x = fixtures::fan("e1.fan");
  LevelSpace l2 = level_space(x, 2);
  CHECK(l2.depth == 2);
  CHECK(l2.ambient_dim == 2);
  CHECK(l2.minus == parse_bitstring("10"));
  CHECK(l2.members.size() == 2);
  CHECK(l2.functionals.size() == 2);
  CHECK_THROWS_AS(level_space(x, 3), UsageError);
}

TEST_CASE("dependence, dimension and closure agree with the fixpoint oracle") {
  std::mt19937_64 rng(11);
  for (const FanChain& c : generate_corpus({3, 3, 4, 40})) {
    FanSpace x = FanSpace::from_chain(c);
    for (int d = 1; d <= x.length(); ++d) {
      const std::vector<CharId>& level = x.level(d);
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<CharId> a;
        for (CharId h : level) {
          if (uniform_below(rng, 3) == 0 && a.size() < 8) a.push_back(h);
        }
        if (a.empty()) a.push_back(level.front());
        std::vector<CharId> cl = oracle_closure(x, a);
        CHECK(closure(x, a) == cl);
        CHECK(is_dependent(x, a) == oracle_dependent(x, a));
        CHECK(affine_dimension(x, a) == 1 + log2_size(cl.size()));
        CHECK((size_t{1} << (affine_dimension(x, a) - 1)) == cl.size());
      }
      // The whole level is closed and has the chain's dimension.
      CHECK(closure(x, level) == level);
      CHECK(affine_dimension(x, level) == c.dim(d));
    }
  }
}

TEST_CASE("dependence rejects mixed depths") {
  FanSpace x = fixtures::fan("e1.fan");
  CHECK_THROWS_AS(is_dependent(x, {0, 1}), UsageError);
  CHECK_FALSE(is_dependent(x, {}));
  CHECK(affine_dimension(x, {}) == 0);
  CHECK(closure(x, {}).empty());
}

TEST_CASE("extend_basis yields a basis of the union containing the start") {
  for (const FanChain& c : generate_corpus({4, 3, 4, 30})) {
    FanSpace x = FanSpace::from_chain(c);
    for (int d = 1; d <= x.length(); ++d) {
      std::vector<CharId> level = x.level(d);
      std::vector<CharId> start = {level.back()};
      for (uint64_t seed : {0u, 1u, 2u}) {
        ChoicePolicy policy =
            seed == 0 ? ChoicePolicy::deterministic() : ChoicePolicy::seeded(seed);
        std::vector<CharId> b = extend_basis(x, start, level, &policy);
        CHECK(b.front() == level.back());
        CHECK_FALSE(is_dependent(x, b));
        CHECK(closure(x, b) == level);
        CHECK(static_cast<int>(b.size()) == c.dim(d));
        for (CharId v : level) {
          Bits coeff = 0;
          REQUIRE(affine_coordinates(x, b, v, &coeff));
          CHECK(popcount(coeff) % 2 == 1);
          bool first = true;
          Character acc;
          for (size_t i = 0; i < b.size(); ++i) {
            if (!((coeff >> i) & 1)) continue;
            if (first) {
              acc = x.character(b[i]);
              first = false;
            } else {
              acc = pointwise_product(acc, x.character(b[i]));
            }
          }
          CHECK(x.find(acc) == v);
        }
      }
    }
  }
  FanSpace x = FanSpace::from_chain(fixtures::ec());
  std::vector<CharId> level = x.level(1);
  REQUIRE(level.size() == 4);
  CHECK(is_dependent(x, level));
  CHECK_THROWS_AS(extend_basis(x, level, level), UsageError);
}

TEST_CASE("kappa is the successor map") {
  FanSpace x = FanSpace::from_chain(fixtures::wide());
  for (int e = 1; e <= x.length(); ++e) {
    for (int d = 1; d <= e; ++d) {
      for (const auto& [g, s] : kappa(x, d, e)) {
        CHECK(x.depth(g) == e);
        CHECK(s == successor(x, g, d));
      }
    }
  }
  CHECK_THROWS_AS(kappa(x, 2, 1), UsageError);
}

TEST_CASE("involutions match the pointwise triple product and verify") {
  for (const FanChain& c : fixtures::named_chains()) {
    FanSpace x = FanSpace::from_chain(c);
    for (const InvolutionHandle& hd : same_level_handles(x)) {
      for (CharId h : x.level(hd.depth)) {
        CHECK(involution(x, hd, h) == oracle_phi(x, hd, h));
      }
      PropertyReport r = verify_involution(x, hd);
      CHECK_MESSAGE(r.ok(), r.summary());
    }
  }
  for (const FanChain& c : generate_corpus({9, 4, 3, 40})) {
    FanSpace x = FanSpace::from_chain(c);
    for (const InvolutionHandle& hd : same_level_handles(x)) {
      PropertyReport r = verify_involution(x, hd);
      CHECK_MESSAGE(r.ok(), r.summary());
    }
  }
}

TEST_CASE("the E1 involution exchanges the two leaves") {
  FanSpace x = fixtures::fan("e1.fan");
  const std::vector<CharId>& leaves = x.level(2);
  InvolutionHandle hd{leaves[0], leaves[1], 2};
  CHECK(involution(x, hd, leaves[0]) == leaves[1]);
  CHECK(involution(x, hd, leaves[1]) == leaves[0]);
  CharId root = x.level(1).front();
  CHECK(involution(x, {leaves[0], leaves[1], 1}, root) == root);
  CHECK_THROWS_AS(involution(x, hd, root), UsageError);
}

TEST_CASE("at the handle depth C-strata are exchanged, not preserved") {
  FanSpace x = fixtures::fan("eb.fan");
  CharId rich = stratum(x, StratumKind::kS, 1, 2).members.front();
  CharId lone = stratum(x, StratumKind::kC, 1, 1).members.front();
  InvolutionHandle hd{rich, lone, 1};
  CHECK(involution(x, hd, rich) == lone);
  CHECK(involution(x, hd, lone) == rich);
  // C^1_1 = {lone} is mapped to {rich}, which lies in C^1_2.
  CHECK(x.order().deepest_below(involution(x, hd, lone)) == 2);
  PropertyReport r = verify_involution(x, hd);
  CHECK_MESSAGE(r.ok(), r.summary());
  CHECK(r.find("permutes S") != nullptr);
}

TEST_CASE("verify_involution reports a handle below its depth") {
  FanSpace x = fixtures::fan("e1.fan");
  CharId root = x.level(1).front();
  PropertyReport r = verify_involution(x, {root, root, 2});
  CHECK_FALSE(r.ok());
  REQUIRE(r.find("handle") != nullptr);
}

TEST_CASE("predecessor embeddings are injective and respect depth and order") {
  for (const FanChain& c : generate_corpus({10, 4, 3, 40})) {
    FanSpace x = FanSpace::from_chain(c);
    for (int k = 1; k <= x.length(); ++k) {
      for (CharId h1 : x.level(k)) {
        const int j = x.order().deepest_below(h1);
        for (CharId h2 : stratum(x, StratumKind::kS, k, j).members) {
          PredecessorEmbedding e = embed_predecessors(x, h1, h2, j);
          std::set<CharId> image;
          for (const auto& [g, img] : e.map) {
            CHECK(x.depth(img) == x.depth(g));
            CHECK(x.specializes(img, h2));
            image.insert(img);
          }
          CHECK(image.size() == e.map.size());
          CHECK(e.map.size() == predecessor_fan(x, h1).size());
          CHECK(e.map.at(h1) == h2);
          for (const auto& [g, img] : e.map) {
            for (const auto& [g2, img2] : e.map) {
              if (x.specializes(g, g2)) CHECK(x.specializes(img, img2));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("embed_predecessors checks its strata") {
  FanSpace x = fixtures::fan("eb.fan");
  CharId rich = stratum(x, StratumKind::kS, 1, 2).members.front();
  CharId lone = stratum(x, StratumKind::kC, 1, 1).members.front();
  CHECK_THROWS_AS(embed_predecessors(x, rich, lone, 2), UsageError);
  CHECK_THROWS_AS(embed_predecessors(x, lone, rich, 2), UsageError);
  PredecessorEmbedding e = embed_predecessors(x, lone, rich, 1);
  CHECK(e.map.size() == 1);
  CHECK(e.map.at(lone) == rich);
}
