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

#include "fanforge/aos_level.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "fanforge/error.h"
#include "fanforge/spectral_order.h"

namespace fanforge {
namespace {

// Deduplicated, increasing, single-depth.
std::vector<CharId> as_level_set(const FanSpace& x, std::vector<CharId> a) {
  for (CharId h : a) x.require_id(h);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (CharId h : a) {
    if (x.depth(h) != x.depth(a.front())) {
      throw UsageError("characters of different depths: " + x.label(a.front()) + " and " +
                       x.label(h));
    }
  }
  return a;
}

// The span of differences from the least member, which ids make the
// lexicographically least functional.
struct Homogenized {
  Bits anchor = 0;
  Gf2Span span;
  int dependent_members = 0;

  Homogenized(const FanSpace& x, const std::vector<CharId>& a)
      : span(a.empty() ? 1 : x.chain().dim(x.depth(a.front()))) {
    if (a.empty()) return;
    anchor = x.coords(a.front()).functional;
    for (size_t i = 1; i < a.size(); ++i) {
      if (!span.insert(x.coords(a[i]).functional ^ anchor)) ++dependent_members;
    }
  }
};

std::string handle_string(const FanSpace& x, const InvolutionHandle& h) {
  return "(" + x.label(h.g1) + ", " + x.label(h.g2) + ") at depth " + std::to_string(h.depth);
}

}  // namespace

LevelSpace level_space(const FanSpace& x, int d) {
  if (d < 1 || d > x.length()) throw UsageError("level out of range");
  LevelSpace out;
  out.depth = d;
  out.ambient_dim = x.chain().dim(d);
  out.minus = x.chain().minus_at(d);
  out.members = x.level(d);
  for (CharId h : out.members) out.functionals.push_back(x.coords(h).functional);
  return out;
}

bool is_dependent(const FanSpace& x, const std::vector<CharId>& a) {
  std::vector<CharId> set = as_level_set(x, a);
  return Homogenized(x, set).dependent_members > 0;
}

int affine_dimension(const FanSpace& x, const std::vector<CharId>& a) {
  std::vector<CharId> set = as_level_set(x, a);
  if (set.empty()) return 0;
  return 1 + Homogenized(x, set).span.rank();
}

std::vector<CharId> closure(const FanSpace& x, const std::vector<CharId>& a) {
  std::vector<CharId> set = as_level_set(x, a);
  if (set.empty()) return {};
  Homogenized hom(x, set);
  std::vector<CharId> out;
  for (CharId h : x.level(x.depth(set.front()))) {
    if (hom.span.contains(x.coords(h).functional ^ hom.anchor)) out.push_back(h);
  }
  return out;
}

std::vector<CharId> extend_basis(const FanSpace& x, const std::vector<CharId>& indep,
                                 const std::vector<CharId>& target, ChoicePolicy* policy) {
  std::vector<CharId> all = indep;
  all.insert(all.end(), target.begin(), target.end());
  as_level_set(x, all);
  if (is_dependent(x, indep)) throw UsageError("extend_basis: dependent start");

  // Keep the caller's order for the independent part.
  std::vector<CharId> basis;
  for (CharId h : indep) {
    if (std::find(basis.begin(), basis.end(), h) == basis.end()) basis.push_back(h);
  }
  if (all.empty()) return basis;
  Gf2Span span(x.chain().dim(x.depth(all.front())));
  Bits anchor = 0;
  bool anchored = false;
  auto try_add = [&](CharId h) {
    Bits f = x.coords(h).functional;
    if (!anchored) {
      anchor = f;
      anchored = true;
      return true;
    }
    return span.insert(f ^ anchor);
  };
  for (CharId h : basis) try_add(h);
  std::vector<CharId> candidates = as_level_set(x, target);
  if (policy != nullptr) candidates = policy->order(std::move(candidates));
  for (CharId h : candidates) {
    if (std::find(basis.begin(), basis.end(), h) != basis.end()) continue;
    if (try_add(h)) basis.push_back(h);
  }
  return basis;
}

bool affine_coordinates(const FanSpace& x, const std::vector<CharId>& basis, CharId v,
                        Bits* coefficients) {
  Gf2Span span(x.chain().dim(x.depth(v)));
  for (CharId b : basis) {
    if (x.depth(b) != x.depth(v)) throw UsageError("mixed depths");
    if (!span.insert(x.coords(b).functional)) {
      throw UsageError("affine_coordinates: basis is dependent");
    }
  }
  std::optional<Bits> c = span.coordinates(x.coords(v).functional);
  if (!c) return false;
  if (popcount(*c) % 2 != 1) {
    throw std::logic_error("level member is an even combination");
  }
  *coefficients = *c;
  return true;
}

std::map<CharId, CharId> kappa(const FanSpace& x, int d, int e) {
  if (d < 1 || d > e || e > x.length()) {
    throw UsageError("kappa needs 1 <= d <= e <= n");
  }
  std::map<CharId, CharId> out;
  for (CharId g : x.level(e)) out[g] = successor(x, g, d);
  return out;
}

CharId involution(const FanSpace& x, const InvolutionHandle& handle, CharId h) {
  x.require_id(handle.g1);
  x.require_id(handle.g2);
  x.require_id(h);
  if (x.depth(h) != handle.depth || x.depth(handle.g1) < handle.depth ||
      x.depth(handle.g2) < handle.depth) {
    throw UsageError("involution " + handle_string(x, handle) + " applied to " + x.label(h));
  }
  CharId out = x.triple(h, handle.g1, handle.g2);
  if (x.depth(out) != handle.depth) {
    throw std::logic_error("involution left its level");
  }
  return out;
}

PropertyReport verify_involution(const FanSpace& x, const InvolutionHandle& handle) {
  PropertyReport report;
  const int d = handle.depth;
  const int top = std::min(x.depth(handle.g1), x.depth(handle.g2));
  if (d < 1 || d > top) {
    report.check_with("handle", false, [&] { return handle_string(x, handle); });
    return report;
  }
  const std::vector<CharId>& level = x.level(d);
  auto phi_at = [&](int depth, CharId h) {
    return involution(x, {handle.g1, handle.g2, depth}, h);
  };
  auto phi = [&](CharId h) { return phi_at(d, h); };

  std::set<CharId> image;
  for (CharId h : level) image.insert(phi(h));
  report.check_with("(a) bijective", image.size() == level.size(),
                    [&] { return handle_string(x, handle); });
  for (CharId a : level) {
    for (CharId b : level) {
      for (CharId c : level) {
        report.check_with("(a) preserves triple products",
                          phi(x.triple(a, b, c)) == x.triple(phi(a), phi(b), phi(c)),
                          [&] { return x.label(a) + " " + x.label(b) + " " + x.label(c); });
      }
    }
  }

  for (CharId h : level) {
    report.check_with("(b) involution", phi(phi(h)) == h, [&] { return x.label(h); });
  }

  CharId h1 = successor(x, handle.g1, d);
  CharId h2 = successor(x, handle.g2, d);
  report.check_with("(c) successor exchange", phi(h1) == h2,
                    [&] { return handle_string(x, handle); });

  for (CharId h : level) {
    if (x.specializes(handle.g1, h) && x.specializes(handle.g2, h)) {
      report.check_with("(d) common specialization fixed", phi(h) == h, [&] { return x.label(h); });
    }
  }

  // Deeper level j, shallower level i, both within reach of the handle.
  for (int j = 1; j <= top; ++j) {
    for (int i = 1; i <= j; ++i) {
      for (CharId a : x.level(j)) {
        for (CharId b : x.level(i)) {
          if (!x.specializes(a, b)) continue;
          report.check_with("(e) commutes with specialization",
                            x.specializes(phi_at(j, a), phi_at(i, b)),
                            [&] { return x.label(a) + " ~> " + x.label(b); });
        }
      }
    }
  }

  // C^d_j is only preserved below the handle depth: at j = top, a root with
  // children and an isolated root are exchanged.
  for (int j = d; j <= top; ++j) {
    for (StratumKind kind : {StratumKind::kS, StratumKind::kC}) {
      if (kind == StratumKind::kC && j == top) continue;
      std::vector<CharId> s = x.order().stratum(kind, d, j);
      std::set<CharId> before(s.begin(), s.end());
      std::set<CharId> after;
      for (CharId h : s) after.insert(phi(h));
      report.check_with(kind == StratumKind::kS ? "permutes S" : "permutes C", before == after,
                        [&] { return "j=" + std::to_string(j); });
    }
  }

  for (int e = d; e <= top; ++e) {
    InvolutionHandle moved{successor(x, handle.g1, e), successor(x, handle.g2, e), d};
    for (CharId h : level) {
      report.check_with("successor invariance", involution(x, moved, h) == phi(h),
                        [&] { return "e=" + std::to_string(e) + " h=" + x.label(h); });
    }
  }
  return report;
}

std::vector<CharId> predecessor_fan(const FanSpace& x, CharId h) {
  x.require_id(h);
  std::vector<CharId> out = x.order().predecessors(h);
  std::set<CharId> members(out.begin(), out.end());
  for (CharId a : out) {
    for (CharId b : out) {
      for (CharId c : out) {
        if (!members.count(x.triple(a, b, c))) {
          throw std::logic_error("predecessor set not closed under products");
        }
      }
    }
  }
  return out;
}

PredecessorEmbedding embed_predecessors(const FanSpace& x, CharId h1, CharId h2, int j) {
  x.require_id(h1);
  x.require_id(h2);
  const int k = x.depth(h1);
  if (x.depth(h2) != k || j < k || j > x.length()) {
    throw UsageError("embed_predecessors needs a common depth k <= j <= n");
  }
  if (x.order().deepest_below(h1) != j) {
    throw UsageError(x.label(h1) + " is not in C^" + std::to_string(k) + "_" + std::to_string(j));
  }
  if (x.order().deepest_below(h2) < j) {
    throw UsageError(x.label(h2) + " is not in S^" + std::to_string(k) + "_" + std::to_string(j));
  }
  auto least_at = [&](CharId h) {
    for (CharId u : x.level(j)) {
      if (x.specializes(u, h)) return u;
    }
    throw std::logic_error("missing predecessor at depth j");
  };
  PredecessorEmbedding out;
  out.u1 = least_at(h1);
  out.u2 = least_at(h2);
  for (CharId g : predecessor_fan(x, h1)) {
    out.map[g] = involution(x, {out.u1, out.u2, x.depth(g)}, g);
  }
  return out;
}

}  // namespace fanforge
