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

// Levels, successors, strata and components of a character space.
//
// Depth 1 is the level of the largest zero-set, so roots of the
// specialization forest sit at depth 1.

#ifndef FANFORGE_SPECTRAL_ORDER_H_
#define FANFORGE_SPECTRAL_ORDER_H_

#include <vector>

#include "fanforge/fan_space.h"
#include "fanforge/forest.h"
#include "fanforge/root_system.h"

namespace fanforge {

// L_1, ..., L_n, each in increasing id order.
std::vector<std::vector<CharId>> levels(const FanSpace& x);

int depth(const FanSpace& x, CharId h);
int length(const FanSpace& x);

// The unique h of depth d with g ~> h. Throws UsageError unless
// 1 <= d <= depth(g).
CharId successor(const FanSpace& x, CharId g, int d);

// The f of depth d with g ~> f ~> h. Throws UsageError unless g ~> h and
// depth(h) <= d <= depth(g).
CharId interpolate(const FanSpace& x, CharId g, CharId h, int d);

// Node i is character i; the parent of h is its successor one level up.
Forest root_system(const FanSpace& x);

std::vector<std::vector<CharId>> components(const FanSpace& x);
int component_lowest_level(const FanSpace& x, const std::vector<CharId>& component);

struct Stratum {
  StratumKind kind;
  int k;
  int j;
  std::vector<CharId> members;
};

Stratum stratum(const FanSpace& x, StratumKind kind, int k, int j);

std::vector<CharId> pred_set(const FanSpace& x, CharId h, int j1, int j2, PredKind kind);

}  // namespace fanforge

#endif  // FANFORGE_SPECTRAL_ORDER_H_
