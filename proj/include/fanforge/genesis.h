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

// Standard generating systems: per-level bases B_k such that B_k meets
// every stratum S^k_j in a basis of it and successors of members are
// members.
//
// Level 1 is a tower of bases through S^1_n, S^1_{n-1}, ..., S^1_1. Level
// k+1 is built over a hub h0 in B_k ∩ S^k_n: a tower of bases of the fibres
// { g in S^{k+1}_q : g ~> h0 } for q = n down to k+1, plus one lift
// g_h in C^{k+1}_{j(h)} with g_h ~> h for every other h in B_k that has
// predecessors at depth k+1. Here j(h) is the deepest level below h.

#ifndef FANFORGE_GENESIS_H_
#define FANFORGE_GENESIS_H_

#include <string>
#include <vector>

#include "fanforge/fan_space.h"
#include "fanforge/policy.h"
#include "fanforge/report.h"

namespace fanforge {

enum class SgsSource { kLevelOneTower, kFibreTower, kLift };

std::string source_name(SgsSource s);

struct SgsElement {
  CharId id = -1;
  SgsSource source = SgsSource::kLevelOneTower;
  int stage = 0;       // tower stage q, or j(anchor) for a lift
  CharId anchor = -1;  // the hub h0 or the lifted h; -1 on level 1
};

struct GeneratingSystem {
  std::vector<std::vector<SgsElement>> levels;  // index depth-1

  std::vector<CharId> basis(int depth) const;
  int size() const;
};

// Tower stages for level 1 in construction order.
std::vector<SgsElement> level_one_tower(const FanSpace& x, ChoicePolicy& policy);

// Tower of bases of { g in S^depth_q : g ~> h0 } for q = n down to depth.
std::vector<SgsElement> fibre_tower(const FanSpace& x, int depth, CharId h0, ChoicePolicy& policy);

// A member of C^depth_j specializing to h. Throws UsageError when there is
// none.
CharId choose_lift(const FanSpace& x, int depth, CharId h, int j, ChoicePolicy& policy);

// Given G = S^{k+1}_p, a basis b of S^k_p with b[0] = h1, a basis c of
// { g in G : g ~> h1 } and lifts[i] in G with lifts[i] ~> b[i+1], returns
// c followed by lifts, a basis of G. Throws UsageError when a hypothesis
// fails, including unequal fibre counts over S^k_p.
std::vector<CharId> choose_basis(const FanSpace& x, const std::vector<CharId>& g,
                                 const std::vector<CharId>& b, const std::vector<CharId>& c,
                                 const std::vector<CharId>& lifts);

GeneratingSystem standard_generating_system(const FanSpace& x, ChoicePolicy& policy);
GeneratingSystem standard_generating_system(const FanSpace& x);

PropertyReport verify_sgs(const FanSpace& x, const GeneratingSystem& b);

}  // namespace fanforge

#endif  // FANFORGE_GENESIS_H_
