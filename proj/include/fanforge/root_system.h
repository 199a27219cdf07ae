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

// Specialization order of a root system, viewed through its forest.
//
// Node g specializes to h (g ~> h) when h is g or one of its ancestors.
// Strata and predecessor sets are defined purely from this order, so the
// same code serves character spaces and candidate forests read from files.

#ifndef FANFORGE_ROOT_SYSTEM_H_
#define FANFORGE_ROOT_SYSTEM_H_

#include <vector>

#include "fanforge/forest.h"

namespace fanforge {

enum class StratumKind { kS, kC };
enum class PredKind { kB, kA };

class RootSystem {
 public:
  // Throws StructuralError on an invalid forest.
  explicit RootSystem(Forest forest);

  const Forest& forest() const { return forest_; }
  int size() const { return forest_.size(); }
  int length() const { return length_; }
  int depth(int v) const { return forest_.depth[v]; }
  int parent(int v) const { return forest_.parent[v]; }
  int root(int v) const { return ancestors_[v][0]; }

  bool specializes(int g, int h) const {
    int d = depth(h);
    return d <= depth(g) && ancestors_[g][d - 1] == h;
  }

  // Nodes of depth d in increasing order; empty outside 1..length().
  const std::vector<int>& level(int d) const;

  // The ancestor-or-self of g at depth d. Throws UsageError unless
  // 1 <= d <= depth(g).
  int successor(int g, int d) const;

  // Largest depth of a node specializing to h.
  int deepest_below(int h) const { return deepest_[h]; }

  // S^k_j or C^k_j. Throws UsageError unless 1 <= k <= j <= length().
  std::vector<int> stratum(StratumKind kind, int k, int j) const;

  // { g in S^{j2}_{j1} : g ~> h } for kB, the C-stratum version for kA.
  // Throws UsageError unless depth(h) <= j2 <= j1 <= length().
  std::vector<int> pred_set(int h, int j1, int j2, PredKind kind) const;

  // { g : g ~> h }, increasing.
  std::vector<int> predecessors(int h) const;

  // Components ordered by root; members increasing.
  std::vector<std::vector<int>> components() const;

 private:
  Forest forest_;
  int length_ = 0;
  std::vector<std::vector<int>> ancestors_;  // [v][d-1] for d <= depth(v)
  std::vector<std::vector<int>> levels_;
  std::vector<int> deepest_;
};

// The forest on the nodes of `component` with depth at most `depth`.
Forest truncate_component(const RootSystem& rs, const std::vector<int>& component, int depth);

}  // namespace fanforge

#endif  // FANFORGE_ROOT_SYSTEM_H_
