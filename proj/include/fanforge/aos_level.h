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

// Matroid structure of a level and the level involutions h -> h g1 g2.
//
// Characters of one level are the functionals with value 1 on minus_d, an
// affine hyperplane of the dual space. A set is dependent when one member is
// an odd product of others, which is affine dependence of the functionals.

#ifndef FANFORGE_AOS_LEVEL_H_
#define FANFORGE_AOS_LEVEL_H_

#include <map>
#include <vector>

#include "fanforge/fan_space.h"
#include "fanforge/policy.h"
#include "fanforge/report.h"

namespace fanforge {

struct LevelSpace {
  int depth = 0;
  int ambient_dim = 0;
  Bits minus = 0;
  std::vector<CharId> members;
  std::vector<Bits> functionals;
};

LevelSpace level_space(const FanSpace& x, int d);

// The set functions below treat their argument as a set and throw
// UsageError when members have different depths.
bool is_dependent(const FanSpace& x, const std::vector<CharId>& a);

// Size of a basis of the closure; 0 for the empty set.
int affine_dimension(const FanSpace& x, const std::vector<CharId>& a);

// All odd products of members, increasing.
std::vector<CharId> closure(const FanSpace& x, const std::vector<CharId>& a);

// A basis of closure(indep + target) that contains indep, adding members of
// target in the policy's order. Throws UsageError if indep is dependent.
std::vector<CharId> extend_basis(const FanSpace& x, const std::vector<CharId>& indep,
                                 const std::vector<CharId>& target, ChoicePolicy* policy = nullptr);

// Writes v = sum of coefficients over `basis` (bit i for basis[i]). Returns
// false when the functional is outside the span of the basis.
bool affine_coordinates(const FanSpace& x, const std::vector<CharId>& basis, CharId v,
                        Bits* coefficients);

// g -> successor(g, d) on L_e. Throws UsageError unless 1 <= d <= e <= n.
std::map<CharId, CharId> kappa(const FanSpace& x, int d, int e);

struct InvolutionHandle {
  CharId g1 = 0;
  CharId g2 = 0;
  int depth = 1;
};

// h g1 g2 for h in L_d. Throws UsageError unless depth(h) = d and both
// depth(g1), depth(g2) >= d.
CharId involution(const FanSpace& x, const InvolutionHandle& handle, CharId h);

// Clauses (a) to (e), successor invariance, and permutation of S^d_j for
// d <= j <= m and of C^d_j for d <= j < m, where m = min(depth(g1),
// depth(g2)).
PropertyReport verify_involution(const FanSpace& x, const InvolutionHandle& handle);

// P_h = { g : g ~> h }, increasing; checked to be closed under triple
// products.
std::vector<CharId> predecessor_fan(const FanSpace& x, CharId h);

struct PredecessorEmbedding {
  CharId u1 = -1;
  CharId u2 = -1;
  std::map<CharId, CharId> map;  // P_{h1} -> P_{h2}
};

// For h1 in C^k_j and h2 in S^k_j: g -> g u1 u2 on each level, where u1, u2
// are the least depth-j predecessors of h1 and h2. Throws UsageError when
// the hypotheses fail.
PredecessorEmbedding embed_predecessors(const FanSpace& x, CharId h1, CharId h2, int j);

}  // namespace fanforge

#endif  // FANFORGE_AOS_LEVEL_H_
