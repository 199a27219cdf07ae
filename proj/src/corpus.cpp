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

#include "fanforge/corpus.h"

#include "fanforge/error.h"
#include "fanforge/policy.h"

namespace fanforge {

FanChain random_chain(std::mt19937_64& rng, int levels, int maxdim) {
  FanChain c;
  const int n = 1 + static_cast<int>(uniform_below(rng, levels));
  for (int d = 0; d < n; ++d) {
    int k = 1 + static_cast<int>(uniform_below(rng, maxdim));
    c.dims.push_back(k);
    c.minus.push_back(1 + uniform_below(rng, (Bits{1} << k) - 1));
  }
  for (int d = 1; d < n; ++d) {
    const int cols = c.dim(d);
    const int rows = c.dim(d + 1);
    Gf2Matrix m(rows, cols);
    do {
      for (int r = 0; r < rows; ++r) {
        m.set_row(r, uniform_below(rng, Bits{1} << cols));
      }
    } while (m.apply(c.minus_at(d)) != c.minus_at(d + 1));
    c.tau.push_back(m);
  }
  return c;
}

std::vector<FanChain> generate_corpus(const CorpusOptions& options) {
  if (options.levels < 1 || options.maxdim < 1 || options.maxdim > 8 || options.count < 0) {
    throw UsageError("corpus options out of range");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<FanChain> out;
  out.reserve(options.count);
  for (int i = 0; i < options.count; ++i) {
    out.push_back(random_chain(rng, options.levels, options.maxdim));
  }
  return out;
}

}  // namespace fanforge
