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

#ifndef FANFORGE_FOREST_H_
#define FANFORGE_FOREST_H_

#include <string>
#include <vector>

#include "fanforge/report.h"

namespace fanforge {

// A depth-labelled forest. Roots have depth 1 and parent -1; every other
// node sits one level below its parent.
struct Forest {
  std::vector<int> depth;
  std::vector<int> parent;

  int size() const { return static_cast<int>(depth.size()); }
  int length() const;
  int add(int node_depth, int node_parent);

  friend bool operator==(const Forest&, const Forest&) = default;
};

ValidationReport validate_forest(const Forest& f);

// Throws StructuralError with the first violation.
void require_valid_forest(const Forest& f);

// The sub-forest on the listed nodes. Every listed non-root node's parent
// must be listed too. Node i of the result is keep[i].
Forest induced_forest(const Forest& f, const std::vector<int>& keep);

// Canonical code: each node is "(" followed by its children's codes in
// sorted order and ")"; the forest code is its sorted root codes.
struct ForestCode {
  std::string text;

  friend bool operator==(const ForestCode&, const ForestCode&) = default;
};

ForestCode forest_canonical(const Forest& f);

// Per-node canonical codes of the subtrees.
std::vector<std::string> subtree_codes(const Forest& f);

bool forests_isomorphic(const Forest& a, const Forest& b);

}  // namespace fanforge

#endif  // FANFORGE_FOREST_H_
