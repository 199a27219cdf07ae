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

// Seeded random chains for property suites.

#ifndef FANFORGE_CORPUS_H_
#define FANFORGE_CORPUS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "fanforge/fan_chain.h"

namespace fanforge {

struct CorpusOptions {
  std::uint64_t seed = 1;
  int levels = 4;  // n is drawn from 1..levels
  int maxdim = 4;  // each k_d is drawn from 1..maxdim
  int count = 200;
};

// Minus elements are uniform among nonzero vectors; transitions are uniform
// among matrices sending minus_d to minus_{d+1}.
FanChain random_chain(std::mt19937_64& rng, int levels, int maxdim);

// Throws UsageError on non-positive options or maxdim above 8.
std::vector<FanChain> generate_corpus(const CorpusOptions& options);

}  // namespace fanforge

#endif  // FANFORGE_CORPUS_H_
