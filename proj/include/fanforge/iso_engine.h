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

// Representation of maps X -> Sign3 by elements, morphism certificates,
// isomorphism of finite fans from their specialization forests, and
// realizability of candidate forests.

#ifndef FANFORGE_ISO_ENGINE_H_
#define FANFORGE_ISO_ENGINE_H_

#include <optional>
#include <string>
#include <vector>

#include "fanforge/fan_chain.h"
#include "fanforge/fan_space.h"
#include "fanforge/forest.h"
#include "fanforge/policy.h"

namespace fanforge {

// ---- Representation -------------------------------------------------------

enum class RepresentationCondition {
  kZeroUpward,      // f(x) = 0 and Z(x) in Z(y) force f(y) = 0
  kSignDescends,    // y ~> x and f(x) != 0 force f(y) = f(x)
  kFourElementFan,  // on each level f vanishes or has product 1 on 4-fans
  kTripleProduct,   // f(x1 x2 x3) = f(x1) f(x2) f(x3)
};

std::string condition_name(RepresentationCondition c);

struct RepresentationWitness {
  RepresentationCondition condition;
  std::vector<CharId> chars;

  std::string describe(const FanSpace& x) const;
};

struct Representation {
  std::optional<int> element;  // least table element a with f = a^
  std::optional<RepresentationWitness> witness;

  bool representable() const { return element.has_value(); }
};

// h -> h(a) for every character h.
std::vector<Sign3> evaluation(const FanSpace& x, int element);

bool preserves_triple_products(const FanSpace& x, const std::vector<Sign3>& f);

// The first failing condition among the three pointwise conditions, or
// nullopt when all hold.
std::optional<RepresentationWitness> representation_conditions(const FanSpace& x,
                                                               const std::vector<Sign3>& f);

// Throws UsageError when f.size() != card(X).
Representation represent(const FanSpace& x, const std::vector<Sign3>& f);

// ---- Morphisms ------------------------------------------------------------

// Character ids of X2 indexed by character ids of X1; -1 marks a hole.
using CandidateMap = std::vector<CharId>;

struct MorphismCertificate {
  bool total = true;
  bool same_level_products = true;  // products within each level
  bool monotone = true;             // g ~> h implies m(g) ~> m(h)
  bool global_products = true;      // products of any three characters
  std::string witness;

  bool accepted() const { return total && same_level_products && monotone; }
  // The level-wise criterion and the global one must agree on fans.
  bool criteria_agree() const { return !total || accepted() == global_products; }
};

MorphismCertificate is_ars_morphism(const FanSpace& x1, const FanSpace& x2, const CandidateMap& m);

// Inverse of a bijective map, or nullopt.
std::optional<CandidateMap> invert(const CandidateMap& m, int target_size);

// ---- Isomorphism ----------------------------------------------------------

// Mirrors a standard generating system of X1 onto X2 and extends level by
// level. Throws OrderMismatchError when the forests differ.
CandidateMap build_isomorphism(const FanSpace& x1, const FanSpace& x2, ChoicePolicy& policy);
CandidateMap build_isomorphism(const FanSpace& x1, const FanSpace& x2);

inline constexpr int kDefaultBruteForceCap = 10;

// Exhaustive search over depth-preserving bijections. Throws ResourceError
// when either space has more than `cap` characters.
std::optional<CandidateMap> brute_force_isomorphism(const FanSpace& x1, const FanSpace& x2,
                                                    int cap = kDefaultBruteForceCap);

// ---- Candidate forests ----------------------------------------------------

struct ForestViolation {
  std::string rule;  // RC1 .. RC4
  std::string message;
};

// Necessary conditions for a forest to be the specialization order of a
// fan. An empty list does not prove realizability. Throws StructuralError
// on an invalid forest.
std::vector<ForestViolation> check_forest(const Forest& f);

// The forest of the characters of depth at most `depth`, in the order of
// chain_characters.
Forest chain_forest(const FanChain& c, int depth);

struct SynthesisLimits {
  int dim_bound = 4;
  long count_bound = 200000;  // search nodes
};

// A chain whose specialization forest is isomorphic to f, searching
// transitions up to chain isomorphism. Returns nullopt when none exists
// (including when a level size is not a power of 2); throws ResourceError
// when a level needs more than dim_bound dimensions or the search visits
// more than count_bound nodes.
std::optional<FanChain> synthesize_chain(const Forest& f, SynthesisLimits limits = {});

}  // namespace fanforge

#endif  // FANFORGE_ISO_ENGINE_H_
