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

#include "fanforge/spectral_order.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fanforge/error.h"

namespace fanforge {

std::vector<std::vector<CharId>> levels(const FanSpace& x) {
  std::vector<std::vector<CharId>> out;
  for (int d = 1; d <= x.length(); ++d) out.push_back(x.level(d));
  return out;
}

int depth(const FanSpace& x, CharId h) {
  x.require_id(h);
  return x.depth(h);
}

int length(const FanSpace& x) { return x.length(); }

CharId successor(const FanSpace& x, CharId g, int d) {
  x.require_id(g);
  if (d < 1 || d > x.depth(g)) {
    throw UsageError("no successor of " + x.label(g) + " at depth " + std::to_string(d));
  }
  CharId found = -1;
  for (CharId h : x.level(d)) {
    if (!x.specializes(g, h)) continue;
    if (found != -1) throw std::logic_error("successor is not unique");
    found = h;
  }
  Bits lambda = pull_back(x.coords(g).functional, transition(x.chain(), d, x.depth(g)));
  if (found == -1 || x.coords(found).functional != lambda) {
    throw std::logic_error("successor disagrees with chain coordinates");
  }
  return found;
}

CharId interpolate(const FanSpace& x, CharId g, CharId h, int d) {
  x.require_id(g);
  x.require_id(h);
  if (!x.specializes(g, h) || d < x.depth(h) || d > x.depth(g)) {
    throw UsageError("interpolate needs g ~> h and depth(h) <= d <= depth(g)");
  }
  CharId f = successor(x, g, d);
  if (!x.specializes(f, h)) throw std::logic_error("interpolant misses h");
  // The interval between g and h has exactly one member per depth.
  std::vector<int> per_depth(x.length() + 1, 0);
  for (CharId u = 0; u < x.size(); ++u) {
    if (x.specializes(g, u) && x.specializes(u, h)) ++per_depth[x.depth(u)];
  }
  for (int e = 1; e <= x.length(); ++e) {
    bool inside = e >= x.depth(h) && e <= x.depth(g);
    if (per_depth[e] != (inside ? 1 : 0)) {
      throw std::logic_error("interval is not a chain of depths");
    }
  }
  return f;
}

Forest root_system(const FanSpace& x) { return x.order().forest(); }

std::vector<std::vector<CharId>> components(const FanSpace& x) {
  std::vector<std::vector<CharId>> out = x.order().components();
  for (const auto& k : out) {
    for (CharId a : k) {
      for (CharId b : k) {
        for (CharId c : k) {
          if (x.order().root(x.triple(a, b, c)) != x.order().root(a)) {
            throw std::logic_error("component not closed under products");
          }
        }
      }
    }
  }
  return out;
}

int component_lowest_level(const FanSpace& x, const std::vector<CharId>& component) {
  int lowest = 0;
  for (CharId h : component) lowest = std::max(lowest, depth(x, h));
  return lowest;
}

Stratum stratum(const FanSpace& x, StratumKind kind, int k, int j) {
  return {kind, k, j, x.order().stratum(kind, k, j)};
}

std::vector<CharId> pred_set(const FanSpace& x, CharId h, int j1, int j2, PredKind kind) {
  x.require_id(h);
  return x.order().pred_set(h, j1, j2, kind);
}

}  // namespace fanforge
