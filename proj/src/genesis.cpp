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

#include "fanforge/genesis.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fanforge/aos_level.h"
#include "fanforge/error.h"
#include "fanforge/spectral_order.h"

namespace fanforge {
namespace {

std::vector<CharId> sorted(std::vector<CharId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_basis_of(const FanSpace& x, const std::vector<CharId>& b,
                 const std::vector<CharId>& target) {
  if (b.empty() || target.empty()) return b.empty() && target.empty();
  return !is_dependent(x, b) && closure(x, b) == sorted(target);
}

std::string ids(const FanSpace& x, const std::vector<CharId>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += x.label(v[i]);
  }
  return out + "}";
}

// Extends a basis through the nested sets produced by `stage_set(q)` for
// q = n down to `depth`.
template <typename StageSet>
std::vector<SgsElement> tower(const FanSpace& x, int depth, StageSet stage_set, SgsSource source,
                              CharId anchor, ChoicePolicy& policy) {
  std::vector<SgsElement> out;
  std::vector<CharId> basis;
  for (int q = x.length(); q >= depth; --q) {
    std::vector<CharId> target = stage_set(q);
    if (target.empty()) continue;
    std::vector<CharId> next = extend_basis(x, basis, target, &policy);
    for (size_t i = basis.size(); i < next.size(); ++i) {
      out.push_back({next[i], source, q, anchor});
    }
    basis = std::move(next);
  }
  return out;
}

}  // namespace

std::string source_name(SgsSource s) {
  switch (s) {
    case SgsSource::kLevelOneTower:
      return "level-one-tower";
    case SgsSource::kFibreTower:
      return "fibre-tower";
    case SgsSource::kLift:
      return "lift";
  }
  return "?";
}

std::vector<CharId> GeneratingSystem::basis(int depth) const {
  std::vector<CharId> out;
  if (depth < 1 || depth > static_cast<int>(levels.size())) return out;
  for (const SgsElement& e : levels[depth - 1]) out.push_back(e.id);
  return out;
}

int GeneratingSystem::size() const {
  int n = 0;
  for (const auto& level : levels) n += static_cast<int>(level.size());
  return n;
}

std::vector<SgsElement> level_one_tower(const FanSpace& x, ChoicePolicy& policy) {
  return tower(
      x, 1, [&](int q) { return x.order().stratum(StratumKind::kS, 1, q); },
      SgsSource::kLevelOneTower, -1, policy);
}

std::vector<SgsElement> fibre_tower(const FanSpace& x, int depth, CharId h0, ChoicePolicy& policy) {
  return tower(
      x, depth,
      [&](int q) {
        std::vector<CharId> out;
        for (CharId g : x.order().stratum(StratumKind::kS, depth, q)) {
          if (x.specializes(g, h0)) out.push_back(g);
        }
        return out;
      },
      SgsSource::kFibreTower, h0, policy);
}

CharId choose_lift(const FanSpace& x, int depth, CharId h, int j, ChoicePolicy& policy) {
  std::vector<CharId> eligible;
  for (CharId g : x.order().stratum(StratumKind::kC, depth, j)) {
    if (x.specializes(g, h)) eligible.push_back(g);
  }
  if (eligible.empty()) {
    throw UsageError("no lift of " + x.label(h) + " in C^" + std::to_string(depth) + "_" +
                     std::to_string(j));
  }
  return policy.pick(eligible);
}

std::vector<CharId> choose_basis(const FanSpace& x, const std::vector<CharId>& g,
                                 const std::vector<CharId>& b, const std::vector<CharId>& c,
                                 const std::vector<CharId>& lifts) {
  if (g.empty() || b.empty()) throw UsageError("choose_basis: empty input");
  const int k = x.depth(b.front());
  std::vector<CharId> g_sorted = sorted(g);
  int p = -1;
  for (int q = k + 1; q <= x.length() && p == -1; ++q) {
    if (x.order().stratum(StratumKind::kS, k + 1, q) == g_sorted) p = q;
  }
  if (p == -1) throw UsageError("choose_basis: G is not a stratum S^{k+1}_p");
  std::vector<CharId> f = x.order().stratum(StratumKind::kS, k, p);
  if (!is_basis_of(x, b, f)) {
    throw UsageError("choose_basis: B is not a basis of S^k_p");
  }

  // Hypothesis: every h in S^k_p has the same number of predecessors in G.
  auto fibre = [&](CharId h) {
    std::vector<CharId> out;
    for (CharId u : g_sorted) {
      if (x.specializes(u, h)) out.push_back(u);
    }
    return out;
  };
  const size_t fibre_size = fibre(f.front()).size();
  for (CharId h : f) {
    if (fibre(h).size() != fibre_size) {
      throw UsageError("choose_basis: fibre sizes differ over " + x.label(h));
    }
  }
  if (!is_basis_of(x, c, fibre(b.front()))) {
    throw UsageError("choose_basis: C is not a basis of the fibre over " + x.label(b.front()));
  }
  if (lifts.size() + 1 != b.size()) {
    throw UsageError("choose_basis: need one lift per remaining basis element");
  }
  for (size_t i = 0; i < lifts.size(); ++i) {
    if (!std::binary_search(g_sorted.begin(), g_sorted.end(), lifts[i]) ||
        !x.specializes(lifts[i], b[i + 1])) {
      throw UsageError("choose_basis: lift " + x.label(lifts[i]) + " does not lie over " +
                       x.label(b[i + 1]));
    }
  }

  std::vector<CharId> out = c;
  out.insert(out.end(), lifts.begin(), lifts.end());
  // |G| = 2^(dim - 1) with dim = |C| + r - 1.
  if (is_dependent(x, out) || static_cast<int>(out.size()) != affine_dimension(x, g_sorted) ||
      (size_t{1} << (out.size() - 1)) != g_sorted.size()) {
    throw std::logic_error("choose_basis: result is not a basis of " + ids(x, g_sorted));
  }
  return out;
}

GeneratingSystem standard_generating_system(const FanSpace& x, ChoicePolicy& policy) {
  const int n = x.length();
  GeneratingSystem out;
  out.levels.push_back(level_one_tower(x, policy));

  for (int k = 1; k < n; ++k) {
    std::vector<CharId> bk = out.basis(k);
    std::vector<CharId> hubs;
    for (CharId h : bk) {
      if (x.order().deepest_below(h) == n) hubs.push_back(h);
    }
    CharId h0 = policy.pick(hubs);
    std::vector<SgsElement> next = fibre_tower(x, k + 1, h0, policy);

    std::vector<CharId> b = {h0};
    std::vector<CharId> lifts;
    for (CharId h : bk) {
      int j = x.order().deepest_below(h);
      if (h == h0 || j < k + 1) continue;
      CharId g = choose_lift(x, k + 1, h, j, policy);
      next.push_back({g, SgsSource::kLift, j, h});
      b.push_back(h);
      lifts.push_back(g);
    }

    // The whole level is the stratum S^{k+1}_{k+1}.
    std::vector<CharId> c;
    for (const SgsElement& e : next) {
      if (e.source == SgsSource::kFibreTower) c.push_back(e.id);
    }
    choose_basis(x, x.level(k + 1), b, c, lifts);
    out.levels.push_back(std::move(next));
  }
  return out;
}

GeneratingSystem standard_generating_system(const FanSpace& x) {
  ChoicePolicy policy = ChoicePolicy::deterministic();
  return standard_generating_system(x, policy);
}

PropertyReport verify_sgs(const FanSpace& x, const GeneratingSystem& b) {
  PropertyReport report;
  const int n = x.length();
  report.check("level count", static_cast<int>(b.levels.size()) == n,
               std::to_string(b.levels.size()) + " levels");
  for (int k = 1; k <= n; ++k) {
    std::vector<CharId> bk = b.basis(k);
    bool on_level = true;
    for (CharId h : bk) {
      on_level = on_level && h >= 0 && h < x.size() && x.depth(h) == k;
    }
    report.check("members on their level", on_level, "k=" + std::to_string(k));
    if (!on_level) continue;

    report.check_with("basis of level", is_basis_of(x, bk, x.level(k)),
                      [&] { return "k=" + std::to_string(k) + " B=" + ids(x, bk); });
    report.check_with("size equals dimension", static_cast<int>(bk.size()) == x.chain().dim(k),
                      [&] { return "k=" + std::to_string(k); });

    for (int j = k; j <= n; ++j) {
      std::vector<CharId> s = x.order().stratum(StratumKind::kS, k, j);
      std::vector<CharId> meet;
      for (CharId h : bk) {
        if (std::binary_search(s.begin(), s.end(), h)) meet.push_back(h);
      }
      report.check_with("stratum basis", is_basis_of(x, meet, s), [&] {
        return "S^" + std::to_string(k) + "_" + std::to_string(j) + " meets B in " + ids(x, meet);
      });

      std::vector<CharId> cs = x.order().stratum(StratumKind::kC, k, j);
      if (!cs.empty()) {
        bool meets = std::any_of(bk.begin(), bk.end(), [&](CharId h) {
          return std::binary_search(cs.begin(), cs.end(), h);
        });
        report.check_with("C-strata meet basis", meets,
                          [&] { return "C^" + std::to_string(k) + "_" + std::to_string(j); });
      }
    }
  }
  for (int m = 1; m <= n; ++m) {
    for (CharId g : b.basis(m)) {
      if (g < 0 || g >= x.size() || x.depth(g) != m) continue;
      for (int k = 1; k <= m; ++k) {
        std::vector<CharId> bk = b.basis(k);
        CharId s = successor(x, g, k);
        report.check_with("successor closure", std::find(bk.begin(), bk.end(), s) != bk.end(),
                          [&] { return x.label(g) + " at depth " + std::to_string(k); });
      }
    }
  }
  return report;
}

}  // namespace fanforge
