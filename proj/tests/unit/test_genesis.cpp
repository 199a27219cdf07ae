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
#include <stdexcept>

#include "fanforge/aos_level.h"
#include "fanforge/corpus.h"
#include "fanforge/error.h"
#include "fanforge/genesis.h"
#include "fanforge/spectral_order.h"
#include "fixtures.h"

using namespace fanforge;

namespace {

bool in(const std::vector<CharId>& v, CharId h) {
  return std::find(v.begin(), v.end(), h) != v.end();
}

// Stage bookkeeping: tower elements lie in S^k_stage, lifts in C^k_stage
// over their anchor, fibre elements over the hub.
void check_stages(const FanSpace& x, const GeneratingSystem& b) {
  for (size_t i = 0; i < b.levels.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    for (const SgsElement& e : b.levels[i]) {
      CHECK(x.depth(e.id) == k);
      StratumKind kind = e.source == SgsSource::kLift ? StratumKind::kC : StratumKind::kS;
      CHECK(in(stratum(x, kind, k, e.stage).members, e.id));
      if (e.source == SgsSource::kLevelOneTower) {
        CHECK(k == 1);
        CHECK(e.anchor == -1);
      } else {
        CHECK(k > 1);
        CHECK(x.specializes(e.id, e.anchor));
        CHECK(x.depth(e.anchor) == k - 1);
      }
    }
  }
}

}  // namespace

TEST_CASE("source names") {
  CHECK(source_name(SgsSource::kLevelOneTower) == "level-one-tower");
  CHECK(source_name(SgsSource::kFibreTower) == "fibre-tower");
  CHECK(source_name(SgsSource::kLift) == "lift");
}

TEST_CASE("generating systems of the named chains verify") {
  for (const FanChain& c : fixtures::named_chains()) {
    FanSpace x = FanSpace::from_chain(c);
    GeneratingSystem b = standard_generating_system(x);
    PropertyReport r = verify_sgs(x, b);
    CHECK_MESSAGE(r.ok(), r.summary());
    check_stages(x, b);
    int total = 0;
    for (int k = 1; k <= x.length(); ++k) total += c.dim(k);
    CHECK(b.size() == total);
  }
}

TEST_CASE("generating systems verify on the corpus under several policies") {
  for (const FanChain& c : generate_corpus({12, 4, 4, 60})) {
    FanSpace x = FanSpace::from_chain(c);
    for (uint64_t seed = 0; seed < 4; ++seed) {
      ChoicePolicy policy = seed == 0 ? ChoicePolicy::deterministic() : ChoicePolicy::seeded(seed);
      GeneratingSystem b = standard_generating_system(x, policy);
      PropertyReport r = verify_sgs(x, b);
      CHECK_MESSAGE(r.ok(), r.summary());
      check_stages(x, b);
    }
  }
}

TEST_CASE("deterministic generating systems are reproducible") {
  FanSpace x = FanSpace::from_chain(fixtures::wide());
  GeneratingSystem a = standard_generating_system(x);
  GeneratingSystem b = standard_generating_system(x);
  for (int k = 1; k <= x.length(); ++k) CHECK(a.basis(k) == b.basis(k));
  ChoicePolicy p1 = ChoicePolicy::seeded(5), p2 = ChoicePolicy::seeded(5);
  GeneratingSystem s1 = standard_generating_system(x, p1);
  GeneratingSystem s2 = standard_generating_system(x, p2);
  for (int k = 1; k <= x.length(); ++k) CHECK(s1.basis(k) == s2.basis(k));
  CHECK(a.basis(0).empty());
  CHECK(a.basis(4).empty());
}

TEST_CASE("a level basis that ignores the strata is rejected") {
  FanSpace x = FanSpace::from_chain(fixtures::ec());
  std::vector<CharId> s12 = stratum(x, StratumKind::kS, 1, 2).members;
  REQUIRE(s12.size() == 1);
  GeneratingSystem b;
  b.levels.resize(2);
  for (CharId h : x.level(1)) {
    if (h != s12.front()) b.levels[0].push_back({h, SgsSource::kLevelOneTower, 1, -1});
  }
  b.levels[1].push_back({x.level(2).front(), SgsSource::kFibreTower, 2, s12.front()});
  REQUIRE_FALSE(is_dependent(x, b.basis(1)));
  PropertyReport r = verify_sgs(x, b);
  CHECK_FALSE(r.ok());
  REQUIRE(r.find("stratum basis") != nullptr);
  CHECK(r.find("stratum basis")->failures > 0);
  CHECK(r.find("successor closure")->failures > 0);
  CHECK(r.find("basis of level")->failures == 0);
}

TEST_CASE("verify_sgs reports a wrong level count and misplaced members") {
  FanSpace x = fixtures::fan("e1.fan");
  GeneratingSystem b = standard_generating_system(x);
  GeneratingSystem short_b = b;
  short_b.levels.pop_back();
  CHECK(verify_sgs(x, short_b).find("level count")->failures == 1);
  GeneratingSystem moved = b;
  moved.levels[0][0].id = x.level(2).front();
  CHECK(verify_sgs(x, moved).find("members on their level")->failures == 1);
}

TEST_CASE("towers are nested bases of the strata") {
  for (const FanChain& c : generate_corpus({13, 4, 3, 40})) {
    FanSpace x = FanSpace::from_chain(c);
    ChoicePolicy policy = ChoicePolicy::deterministic();
    std::vector<SgsElement> t = level_one_tower(x, policy);
    for (int q = 1; q <= x.length(); ++q) {
      std::vector<CharId> upto;
      for (const SgsElement& e : t) {
        if (e.stage >= q) upto.push_back(e.id);
      }
      CHECK_FALSE(is_dependent(x, upto));
      CHECK(closure(x, upto) == x.order().stratum(StratumKind::kS, 1, q));
    }
    for (int k = 2; k <= x.length(); ++k) {
      for (CharId h0 : x.order().stratum(StratumKind::kS, k - 1, x.length())) {
        std::vector<SgsElement> f = fibre_tower(x, k, h0, policy);
        for (int q = k; q <= x.length(); ++q) {
          std::vector<CharId> upto, fibre;
          for (const SgsElement& e : f) {
            if (e.stage >= q) upto.push_back(e.id);
          }
          for (CharId g : x.order().stratum(StratumKind::kS, k, q)) {
            if (x.specializes(g, h0)) fibre.push_back(g);
          }
          CHECK(closure(x, upto) == fibre);
        }
      }
    }
  }
}

TEST_CASE("choose_lift picks from the right C-stratum") {
  FanSpace x = FanSpace::from_chain(fixtures::wide());
  ChoicePolicy policy = ChoicePolicy::deterministic();
  for (CharId h : x.level(1)) {
    const int j = x.order().deepest_below(h);
    CharId g = choose_lift(x, 2, h, j, policy);
    CHECK(x.specializes(g, h));
    CHECK(x.order().deepest_below(g) == j);
  }
  CharId root = x.level(1).front();
  CHECK_THROWS_AS(choose_lift(x, 2, root, 2, policy), UsageError);
}

TEST_CASE("choose_basis returns a basis and checks its hypotheses") {
  FanSpace x = FanSpace::from_chain(fixtures::wide());
  // Level 2 of this chain has two characters over the single root.
  std::vector<CharId> g = x.level(2);
  CharId root = x.level(1).front();
  std::vector<CharId> c = {g[0], g[1]};
  std::vector<CharId> out = choose_basis(x, g, {root}, c, {});
  CHECK(out == c);
  CHECK_THROWS_AS(choose_basis(x, {}, {root}, c, {}), UsageError);
  CHECK_THROWS_AS(choose_basis(x, {g[0]}, {root}, {g[0]}, {}), UsageError);
  CHECK_THROWS_AS(choose_basis(x, g, {root}, {g[0]}, {}), UsageError);
  CHECK_THROWS_AS(choose_basis(x, g, {root}, c, {g[0]}), UsageError);

  FanSpace b = fixtures::fan("eb.fan");
  CharId rich = stratum(b, StratumKind::kS, 1, 2).members.front();
  CharId lone = stratum(b, StratumKind::kC, 1, 1).members.front();
  // S^1_2 is not the whole level, so B = {rich, lone} is not a basis of it.
  CHECK_THROWS_AS(choose_basis(b, b.level(2), {rich, lone}, b.level(2), {}), UsageError);
}

TEST_CASE("the hub fibre at the deepest stage alone does not span the next level") {
  // One root, two children, one grandchild under one child.
  FanChain c = fixtures::chain({{1, "1"}, {2, "10"}, {1, "1"}}, {{"1", "0"}, {"10"}});
  FanSpace x = FanSpace::from_chain(c);
  REQUIRE(x.level(2).size() == 2);
  REQUIRE(x.level(3).size() == 1);
  CharId h0 = x.level(1).front();
  ChoicePolicy policy = ChoicePolicy::deterministic();
  std::vector<SgsElement> f = fibre_tower(x, 2, h0, policy);
  std::vector<CharId> deepest;
  for (const SgsElement& e : f) {
    if (e.stage == 3) deepest.push_back(e.id);
  }
  CHECK(affine_dimension(x, deepest) == 1);
  CHECK(c.dim(2) == 2);
  GeneratingSystem b = standard_generating_system(x);
  CHECK(b.basis(2).size() == 2);
  CHECK(verify_sgs(x, b).ok());
}
