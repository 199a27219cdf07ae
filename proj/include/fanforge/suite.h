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

// Property suites over a corpus of chains. Each suite returns per-clause
// tallies; a suite passes when it records no failures.

#ifndef FANFORGE_SUITE_H_
#define FANFORGE_SUITE_H_

#include <string>
#include <vector>

#include "fanforge/corpus.h"
#include "fanforge/fan_chain.h"
#include "fanforge/forest.h"
#include "fanforge/report.h"

namespace fanforge {

struct SuiteOutcome {
  std::string name;
  PropertyReport report;
  double seconds = 0;

  bool ok() const { return report.ok() && report.total_checks() > 0; }
};

// card(F) = 2 card(X) + 1, against a closed form and a direct enumeration.
SuiteOutcome suite_cardinality(const std::vector<FanChain>& corpus);

// The pointwise specialization criteria agree with each other and with the
// chain model.
SuiteOutcome suite_specialization(const std::vector<FanChain>& corpus);

// verify_involution for every same-level handle at every admissible depth.
SuiteOutcome suite_involutions(const std::vector<FanChain>& corpus);

// B/A-count regularity, component level and stratum regularity, and
// component truncation.
SuiteOutcome suite_regularity(const std::vector<FanChain>& corpus);

// The three impossible configurations carry their expected violations and
// every corpus root system passes check_forest.
SuiteOutcome suite_forest_checks(const std::vector<FanChain>& corpus,
                                 const std::vector<Forest>& configurations);

// verify_sgs under the deterministic policy and `seeds` seeded ones.
SuiteOutcome suite_generating_systems(const std::vector<FanChain>& corpus, std::uint64_t seed,
                                      int seeds = 10);

// Forest isomorphism, build_isomorphism and brute force agree on all pairs
// of fans with at most `max_card` characters.
SuiteOutcome suite_isomorphism(const std::vector<FanChain>& corpus, int max_card = 10);

// Every map X -> Sign3 on fans with at most `max_card` characters: scan,
// triple products and the pointwise conditions agree.
SuiteOutcome suite_representation(const std::vector<FanChain>& corpus, int max_card = 4);

// Chain-table and file round trips.
SuiteOutcome suite_round_trips(const std::vector<FanChain>& corpus);

// Configurations (1) to (3): level sizes 1,2,4 beside 1,4,8; four components
// with three branch points at depth 3 reaching depth 4; two components of
// length 5 with different depth-3 strata.
std::vector<Forest> impossible_configurations();

// The violation each configuration must carry, in check_forest's wording.
std::vector<std::vector<std::string>> expected_configuration_violations();

// Builds a forest from nested parentheses, one pair per node.
Forest forest_from_shape(const std::string& shape);

std::vector<SuiteOutcome> run_suites(const CorpusOptions& options);

}  // namespace fanforge

#endif  // FANFORGE_SUITE_H_
