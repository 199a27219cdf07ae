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

#include "fanforge/forest.h"

#include <algorithm>
#include <numeric>

#include "fanforge/error.h"

namespace fanforge {

int Forest::length() const {
  int n = 0;
  for (int d : depth) n = std::max(n, d);
  return n;
}

int Forest::add(int node_depth, int node_parent) {
  depth.push_back(node_depth);
  parent.push_back(node_parent);
  return size() - 1;
}

ValidationReport validate_forest(const Forest& f) {
  ValidationReport report;
  if (f.depth.size() != f.parent.size()) {
    report.add("shape", "depth and parent lists differ in length");
    return report;
  }
  for (int v = 0; v < f.size(); ++v) {
    std::string at = "node " + std::to_string(v);
    int p = f.parent[v];
    if (f.depth[v] < 1) {
      report.add("depth-positive", at);
    } else if (p == -1) {
      if (f.depth[v] != 1) report.add("root-depth", at);
    } else if (p < 0 || p >= f.size()) {
      report.add("parent-range", at);
    } else if (f.depth[p] + 1 != f.depth[v]) {
      report.add("parent-depth", at);
    }
  }
  return report;
}

void require_valid_forest(const Forest& f) {
  ValidationReport report = validate_forest(f);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw StructuralError("invalid forest: " + v.rule + " at " + v.detail);
  }
}

Forest induced_forest(const Forest& f, const std::vector<int>& keep) {
  std::vector<int> where(f.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<int>(i);
  Forest out;
  for (int v : keep) {
    int p = f.parent[v];
    if (p != -1 && where[p] == -1) {
      throw UsageError("induced forest is missing the parent of node " + std::to_string(v));
    }
    out.add(f.depth[v], p == -1 ? -1 : where[p]);
  }
  return out;
}

std::vector<std::string> subtree_codes(const Forest& f) {
  require_valid_forest(f);
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return f.depth[a] > f.depth[b]; });
  std::vector<std::vector<std::string>> child_codes(f.size());
  std::vector<std::string> code(f.size());
  for (int v : order) {
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    code[v] = "(";
    for (const auto& k : kids) code[v] += k;
    code[v] += ")";
    if (f.parent[v] != -1) child_codes[f.parent[v]].push_back(code[v]);
  }
  return code;
}

ForestCode forest_canonical(const Forest& f) {
  std::vector<std::string> code = subtree_codes(f);
  std::vector<std::string> roots;
  for (int v = 0; v < f.size(); ++v) {
    if (f.parent[v] == -1) roots.push_back(code[v]);
  }
  std::sort(roots.begin(), roots.end());
  ForestCode out;
  out.text = "[";
  for (const auto& r : roots) out.text += r;
  out.text += "]";
  return out;
}

bool forests_isomorphic(const Forest& a, const Forest& b) {
  return forest_canonical(a) == forest_canonical(b);
}

}  // namespace fanforge
