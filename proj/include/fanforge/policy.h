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

#ifndef FANFORGE_POLICY_H_
#define FANFORGE_POLICY_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fanforge {

// Portable uniform draw in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Resolves free choices among candidate ids. The deterministic policy keeps
// ids in increasing order, so it always takes the least eligible one; a
// seeded policy shuffles them.
class ChoicePolicy {
 public:
  static ChoicePolicy deterministic() { return ChoicePolicy(); }
  static ChoicePolicy seeded(std::uint64_t seed) { return ChoicePolicy(seed); }

  bool is_seeded() const { return rng_.has_value(); }

  // Candidates in the order they should be tried.
  std::vector<int> order(std::vector<int> candidates);

  // Throws UsageError on an empty list.
  int pick(const std::vector<int>& candidates);

 private:
  ChoicePolicy() = default;
  explicit ChoicePolicy(std::uint64_t seed) : rng_(std::mt19937_64(seed)) {}

  std::optional<std::mt19937_64> rng_;
};

}  // namespace fanforge

#endif  // FANFORGE_POLICY_H_
