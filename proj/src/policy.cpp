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

#include "fanforge/policy.h"

#include <algorithm>

#include "fanforge/error.h"

namespace fanforge {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::vector<int> ChoicePolicy::order(std::vector<int> candidates) {
  std::sort(candidates.begin(), candidates.end());
  if (rng_) {
    for (size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[uniform_below(*rng_, i)]);
    }
  }
  return candidates;
}

int ChoicePolicy::pick(const std::vector<int>& candidates) {
  if (candidates.empty()) throw UsageError("no eligible candidate");
  if (!rng_) return *std::min_element(candidates.begin(), candidates.end());
  std::vector<int> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  return sorted[uniform_below(*rng_, sorted.size())];
}

}  // namespace fanforge
