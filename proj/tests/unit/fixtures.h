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

#ifndef FANFORGE_TESTS_FIXTURES_H_
#define FANFORGE_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "fanforge/fan_chain.h"
#include "fanforge/fan_space.h"
#include "fanforge/io.h"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(FANFORGE_FIXTURE_DIR) + "/" + name;
}

inline fanforge::FanChain load(const std::string& name) {
  return fanforge::parse_chain(fanforge::read_file(path(name)));
}

inline fanforge::FanSpace fan(const std::string& name) {
  return fanforge::FanSpace::from_chain(load(name));
}

// Builds a chain from per-level (dim, minus) and row-bitstring transitions.
inline fanforge::FanChain chain(std::vector<std::pair<int, std::string>> levels,
                                std::vector<std::vector<std::string>> taus) {
  fanforge::FanChain c;
  for (const auto& [dim, minus] : levels) {
    c.dims.push_back(dim);
    c.minus.push_back(fanforge::parse_bitstring(minus));
  }
  for (size_t d = 0; d < taus.size(); ++d) {
    fanforge::Gf2Matrix m(static_cast<int>(taus[d].size()), c.dims[d]);
    for (size_t r = 0; r < taus[d].size(); ++r) {
      m.set_row(static_cast<int>(r), fanforge::parse_bitstring(taus[d][r]));
    }
    c.tau.push_back(m);
  }
  return c;
}

// Level 1 has dimension 3 and S^1_2 = {100}; used for non-adapted bases.
inline fanforge::FanChain ec() { return chain({{3, "100"}, {1, "1"}}, {{"100"}}); }

inline fanforge::FanChain three_levels() {
  return chain({{1, "1"}, {1, "1"}, {1, "1"}}, {{"1"}, {"1"}});
}

inline fanforge::FanChain wide() {
  return chain({{1, "1"}, {2, "10"}, {2, "10"}}, {{"1", "0"}, {"10", "01"}});
}

inline std::vector<fanforge::FanChain> named_chains() {
  return {load("e1.fan"), load("e1prime.fan"), load("triv.fan"),
          load("e2.fan"), load("ea.fan"),      load("eb.fan"),
          ec(),           three_levels(),      wide()};
}

}  // namespace fixtures

#endif  // FANFORGE_TESTS_FIXTURES_H_
