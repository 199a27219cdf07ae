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

#include "fanforge/root_system.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fanforge/error.h"

namespace fanforge {

RootSystem::RootSystem(Forest forest) : forest_(std::move(forest)) {
  require_valid_forest(forest_);
  const int n = forest_.size();
  length_ = forest_.length();
  levels_.assign(length_ + 1, {});
  ancestors_.assign(n, {});

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth(a) < depth(b); });
  for (int v : order) {
    if (parent(v) != -1) ancestors_[v] = ancestors_[parent(v)];
    ancestors_[v].push_back(v);
  }
  for (int v = 0; v < n; ++v) levels_[depth(v)].push_back(v);

  deepest_.resize(n);
  for (int v = 0; v < n; ++v) deepest_[v] = depth(v);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int p = parent(*it);
    if (p != -1) deepest_[p] = std::max(deepest_[p], deepest_[*it]);
  }
}

const std::vector<int>& RootSystem::level(int d) const {
  static const std::vector<int> kEmpty;
  if (d < 1 || d > length_) return kEmpty;
  return levels_[d];
}

int RootSystem::successor(int g, int d) const {
  if (d < 1 || d > depth(g)) {
    throw UsageError("no successor of node " + std::to_string(g) + " at depth " +
                     std::to_string(d));
  }
  return ancestors_[g][d - 1];
}

std::vector<int> RootSystem::stratum(StratumKind kind, int k, int j) const {
  if (k < 1 || k > j || j > length_) {
    throw UsageError("stratum needs 1 <= k <= j <= n, got k=" + std::to_string(k) +
                     " j=" + std::to_string(j));
  }
  std::vector<int> out;
  for (int h : level(k)) {
    bool in = kind == StratumKind::kS ? deepest_[h] >= j : deepest_[h] == j;
    if (in) out.push_back(h);
  }
  return out;
}

std::vector<int> RootSystem::pred_set(int h, int j1, int j2, PredKind kind) const {
  if (depth(h) > j2 || j2 > j1 || j1 > length_) {
    throw UsageError("pred_set needs depth(h) <= j2 <= j1 <= n");
  }
  std::vector<int> out;
  for (int g : level(j2)) {
    if (!specializes(g, h)) continue;
    bool in = kind == PredKind::kB ? deepest_[g] >= j1 : deepest_[g] == j1;
    if (in) out.push_back(g);
  }
  return out;
}

std::vector<int> RootSystem::predecessors(int h) const {
  std::vector<int> out;
  for (int g = 0; g < size(); ++g) {
    if (specializes(g, h)) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> RootSystem::components() const {
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < size(); ++v) by_root[root(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, members] : by_root) out.push_back(std::move(members));
  return out;
}

Forest truncate_component(const RootSystem& rs, const std::vector<int>& component, int depth) {
  std::vector<int> keep;
  for (int v : component) {
    if (rs.depth(v) <= depth) keep.push_back(v);
  }
  return induced_forest(rs.forest(), keep);
}

}  // namespace fanforge
