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

#include "fanforge/iso_engine.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fanforge/aos_level.h"
#include "fanforge/error.h"
#include "fanforge/genesis.h"

namespace fanforge {
namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

// ---- Representation -------------------------------------------------------

std::string condition_name(RepresentationCondition c) {
  switch (c) {
    case RepresentationCondition::kZeroUpward:
      return "(zero-upward)";
    case RepresentationCondition::kSignDescends:
      return "(sign-descends)";
    case RepresentationCondition::kFourElementFan:
      return "(four-element-fan)";
    case RepresentationCondition::kTripleProduct:
      return "(triple-product)";
  }
  return "?";
}

std::string RepresentationWitness::describe(const FanSpace& x) const {
  std::string out = condition_name(condition);
  for (CharId h : chars) out += " " + x.label(h);
  return out;
}

std::vector<Sign3> evaluation(const FanSpace& x, int element) {
  if (element < 0 || element >= x.table().size()) {
    throw UsageError("element " + str(element) + " out of range");
  }
  std::vector<Sign3> out;
  out.reserve(x.size());
  for (CharId h = 0; h < x.size(); ++h) out.push_back(x.character(h)[element]);
  return out;
}

bool preserves_triple_products(const FanSpace& x, const std::vector<Sign3>& f) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw UsageError("map has " + str(static_cast<int>(f.size())) + " values for " + str(x.size()) +
                     " characters");
  }
  for (CharId a = 0; a < x.size(); ++a) {
    for (CharId b = 0; b < x.size(); ++b) {
      for (CharId c = 0; c < x.size(); ++c) {
        if (f[x.triple(a, b, c)] != f[a] * f[b] * f[c]) return false;
      }
    }
  }
  return true;
}

std::optional<RepresentationWitness> representation_conditions(const FanSpace& x,
                                                               const std::vector<Sign3>& f) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw UsageError("map has " + str(static_cast<int>(f.size())) + " values for " + str(x.size()) +
                     " characters");
  }
  // Z(a) is contained in Z(b) exactly when a is at least as deep as b.
  for (CharId a = 0; a < x.size(); ++a) {
    if (f[a] != Sign3::kZero) continue;
    for (CharId b = 0; b < x.size(); ++b) {
      if (x.depth(a) >= x.depth(b) && f[b] != Sign3::kZero) {
        return RepresentationWitness{RepresentationCondition::kZeroUpward, {a, b}};
      }
    }
  }
  for (CharId a = 0; a < x.size(); ++a) {
    if (f[a] == Sign3::kZero) continue;
    for (CharId b = 0; b < x.size(); ++b) {
      if (x.specializes(b, a) && f[b] != f[a]) {
        return RepresentationWitness{RepresentationCondition::kSignDescends, {a, b}};
      }
    }
  }
  for (int d = 1; d <= x.length(); ++d) {
    const std::vector<CharId>& level = x.level(d);
    bool vanishes =
        std::all_of(level.begin(), level.end(), [&](CharId h) { return f[h] == Sign3::kZero; });
    if (vanishes) continue;
    for (size_t i = 0; i < level.size(); ++i) {
      for (size_t j = i + 1; j < level.size(); ++j) {
        for (size_t k = j + 1; k < level.size(); ++k) {
          CharId a = level[i], b = level[j], c = level[k];
          CharId e = x.triple(a, b, c);
          if (f[a] * f[b] * f[c] * f[e] != Sign3::kPlus) {
            return RepresentationWitness{RepresentationCondition::kFourElementFan, {a, b, c, e}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Representation represent(const FanSpace& x, const std::vector<Sign3>& f) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw UsageError("map has " + str(static_cast<int>(f.size())) + " values for " + str(x.size()) +
                     " characters");
  }
  Representation out;
  for (int a = 0; a < x.table().size(); ++a) {
    if (evaluation(x, a) == f) {
      out.element = a;
      return out;
    }
  }
  out.witness = representation_conditions(x, f);
  if (!out.witness) {
    // The pointwise conditions hold but no element represents f; report a
    // failing triple so the caller still gets a witness.
    for (CharId a = 0; a < x.size() && !out.witness; ++a) {
      for (CharId b = 0; b < x.size() && !out.witness; ++b) {
        for (CharId c = 0; c < x.size() && !out.witness; ++c) {
          if (f[x.triple(a, b, c)] != f[a] * f[b] * f[c]) {
            out.witness = RepresentationWitness{RepresentationCondition::kTripleProduct, {a, b, c}};
          }
        }
      }
    }
  }
  if (!out.witness) {
    throw std::logic_error("triple-product preserving map without a representing element");
  }
  return out;
}

// ---- Morphisms ------------------------------------------------------------

MorphismCertificate is_ars_morphism(const FanSpace& x1, const FanSpace& x2, const CandidateMap& m) {
  MorphismCertificate cert;
  if (static_cast<int>(m.size()) != x1.size()) {
    cert.total = false;
    cert.witness = "map has " + str(static_cast<int>(m.size())) + " entries";
    return cert;
  }
  for (CharId h = 0; h < x1.size(); ++h) {
    if (m[h] < 0 || m[h] >= x2.size()) {
      cert.total = false;
      cert.witness = "no image for " + x1.label(h);
      return cert;
    }
  }
  auto note = [&](const std::string& w) {
    if (cert.witness.empty()) cert.witness = w;
  };
  const int n = x1.size();
  for (CharId a = 0; a < n; ++a) {
    for (CharId b = 0; b < n; ++b) {
      if (x1.specializes(a, b) && !x2.specializes(m[a], m[b])) {
        if (cert.monotone) note("not monotone at " + x1.label(a) + " ~> " + x1.label(b));
        cert.monotone = false;
      }
      for (CharId c = 0; c < n; ++c) {
        if (m[x1.triple(a, b, c)] == x2.triple(m[a], m[b], m[c])) continue;
        if (x1.depth(a) == x1.depth(b) && x1.depth(b) == x1.depth(c)) {
          if (cert.same_level_products) {
            note("same-level product fails at " + x1.label(a) + " " + x1.label(b) + " " +
                 x1.label(c));
          }
          cert.same_level_products = false;
        }
        if (cert.global_products) {
          note("product fails at " + x1.label(a) + " " + x1.label(b) + " " + x1.label(c));
        }
        cert.global_products = false;
      }
    }
  }
  return cert;
}

std::optional<CandidateMap> invert(const CandidateMap& m, int target_size) {
  if (static_cast<int>(m.size()) != target_size) return std::nullopt;
  CandidateMap inv(target_size, -1);
  for (size_t h = 0; h < m.size(); ++h) {
    if (m[h] < 0 || m[h] >= target_size || inv[m[h]] != -1) return std::nullopt;
    inv[m[h]] = static_cast<CharId>(h);
  }
  return inv;
}

// ---- Isomorphism ----------------------------------------------------------

namespace {

// Pairs two construction sequences stage by stage, keeping each sequence's
// order within a stage.
void pair_stages(const std::vector<SgsElement>& a, const std::vector<SgsElement>& b,
                 std::map<CharId, CharId>* out) {
  std::map<int, std::vector<CharId>> by_stage_a, by_stage_b;
  for (const SgsElement& e : a) by_stage_a[e.stage].push_back(e.id);
  for (const SgsElement& e : b) by_stage_b[e.stage].push_back(e.id);
  if (by_stage_a.size() != by_stage_b.size()) {
    throw std::logic_error("tower stages differ");
  }
  for (const auto& [stage, ids] : by_stage_a) {
    auto it = by_stage_b.find(stage);
    if (it == by_stage_b.end() || it->second.size() != ids.size()) {
      throw std::logic_error("tower stage " + str(stage) + " differs in size");
    }
    for (size_t i = 0; i < ids.size(); ++i) (*out)[ids[i]] = it->second[i];
  }
}

// Extends a bijection between level bases affinely to the whole level.
void extend_level(const FanSpace& x1, const FanSpace& x2, int d, const std::vector<CharId>& basis1,
                  const std::map<CharId, CharId>& f, CandidateMap* out) {
  std::vector<CharId> basis2;
  for (CharId b : basis1) basis2.push_back(f.at(b));
  if (is_dependent(x2, basis2)) {
    throw std::logic_error("image of a basis is dependent at depth " + str(d));
  }
  for (CharId v : x1.level(d)) {
    Bits coeffs = 0;
    if (!affine_coordinates(x1, basis1, v, &coeffs)) {
      throw std::logic_error(x1.label(v) + " outside the span of its level basis");
    }
    Bits functional = 0;
    for (size_t i = 0; i < basis2.size(); ++i) {
      if ((coeffs >> i) & 1) functional ^= x2.coords(basis2[i]).functional;
    }
    std::optional<CharId> image = x2.find(ChainCharacter{d, functional});
    if (!image) throw std::logic_error("affine image is not a character");
    (*out)[v] = *image;
  }
}

}  // namespace

CandidateMap build_isomorphism(const FanSpace& x1, const FanSpace& x2, ChoicePolicy& policy) {
  ForestCode c1 = forest_canonical(x1.order().forest());
  ForestCode c2 = forest_canonical(x2.order().forest());
  if (c1 != c2) throw OrderMismatchError(c1.text, c2.text);

  const int n = x1.length();
  GeneratingSystem sgs = standard_generating_system(x1, policy);
  CandidateMap out(x1.size(), -1);

  std::map<CharId, CharId> f;
  pair_stages(sgs.levels[0], level_one_tower(x2, policy), &f);
  extend_level(x1, x2, 1, sgs.basis(1), f, &out);

  for (int k = 1; k < n; ++k) {
    const std::vector<SgsElement>& next = sgs.levels[k];
    std::vector<SgsElement> tower1;
    CharId h0 = -1;
    for (const SgsElement& e : next) {
      if (e.source == SgsSource::kFibreTower) {
        tower1.push_back(e);
        h0 = e.anchor;
      }
    }
    if (h0 < 0) throw std::logic_error("level " + str(k + 1) + " has no fibre tower");

    f.clear();
    pair_stages(tower1, fibre_tower(x2, k + 1, out[h0], policy), &f);
    for (const SgsElement& e : next) {
      if (e.source != SgsSource::kLift) continue;
      f[e.id] = choose_lift(x2, k + 1, out[e.anchor], e.stage, policy);
    }
    extend_level(x1, x2, k + 1, sgs.basis(k + 1), f, &out);
  }

  MorphismCertificate forward = is_ars_morphism(x1, x2, out);
  std::optional<CandidateMap> inverse = invert(out, x2.size());
  if (!forward.accepted() || !inverse) {
    throw std::logic_error("constructed map is not a morphism: " + forward.witness);
  }
  MorphismCertificate backward = is_ars_morphism(x2, x1, *inverse);
  if (!backward.accepted()) {
    throw std::logic_error("inverse of constructed map is not a morphism: " + backward.witness);
  }
  return out;
}

CandidateMap build_isomorphism(const FanSpace& x1, const FanSpace& x2) {
  ChoicePolicy policy = ChoicePolicy::deterministic();
  return build_isomorphism(x1, x2, policy);
}

namespace {

class BruteForce {
 public:
  BruteForce(const FanSpace& x1, const FanSpace& x2)
      : x1_(x1), x2_(x2), m_(x1.size(), -1), used_(x2.size(), false) {}

  std::optional<CandidateMap> run() {
    if (!extend(0)) return std::nullopt;
    return found_;
  }

 private:
  bool consistent(CharId a) const {
    for (CharId b = 0; b < a; ++b) {
      if (x1_.specializes(a, b) != x2_.specializes(m_[a], m_[b]) ||
          x1_.specializes(b, a) != x2_.specializes(m_[b], m_[a])) {
        return false;
      }
    }
    const int d = x1_.depth(a);
    for (CharId p : x1_.level(d)) {
      if (m_[p] < 0) continue;
      for (CharId q : x1_.level(d)) {
        if (m_[q] < 0) continue;
        for (CharId r : x1_.level(d)) {
          if (m_[r] < 0) continue;
          CharId t = x1_.triple(p, q, r);
          if (m_[t] >= 0 && m_[t] != x2_.triple(m_[p], m_[q], m_[r])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool extend(CharId a) {
    if (a == x1_.size()) {
      std::optional<CandidateMap> inv = invert(m_, x2_.size());
      if (inv && is_ars_morphism(x1_, x2_, m_).accepted() &&
          is_ars_morphism(x2_, x1_, *inv).accepted()) {
        found_ = m_;
        return true;
      }
      return false;
    }
    for (CharId b : x2_.level(x1_.depth(a))) {
      if (used_[b]) continue;
      m_[a] = b;
      used_[b] = true;
      if (consistent(a) && extend(a + 1)) return true;
      used_[b] = false;
      m_[a] = -1;
    }
    return false;
  }

  const FanSpace& x1_;
  const FanSpace& x2_;
  CandidateMap m_;
  std::vector<bool> used_;
  CandidateMap found_;
};

}  // namespace

std::optional<CandidateMap> brute_force_isomorphism(const FanSpace& x1, const FanSpace& x2,
                                                    int cap) {
  if (x1.size() > cap || x2.size() > cap) {
    throw ResourceError("brute-force isomorphism limited to " + str(cap) + " characters");
  }
  if (x1.size() != x2.size() || x1.length() != x2.length()) return std::nullopt;
  for (int d = 1; d <= x1.length(); ++d) {
    if (x1.level(d).size() != x2.level(d).size()) return std::nullopt;
  }
  return BruteForce(x1, x2).run();
}

// ---- Candidate forests ----------------------------------------------------

namespace {

bool power_of_two(size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::string stratum_name(const char* kind, int k, int j) {
  return std::string(kind) + "^" + str(k) + "_" + str(j);
}

void check_regularity(const RootSystem& rs, std::vector<ForestViolation>* out) {
  const int n = rs.length();
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j <= n; ++j) {
      for (StratumKind kind : {StratumKind::kS, StratumKind::kC}) {
        const PredKind pk = kind == StratumKind::kS ? PredKind::kB : PredKind::kA;
        const char* set_name = pk == PredKind::kB ? "B" : "A";
        std::vector<int> s = rs.stratum(kind, k, j);
        if (s.size() < 2) continue;
        for (int j1 = k; j1 <= j; ++j1) {
          for (int j2 = k; j2 <= j1; ++j2) {
            size_t first = rs.pred_set(s.front(), j1, j2, pk).size();
            for (int h : s) {
              size_t count = rs.pred_set(h, j1, j2, pk).size();
              if (count == first) continue;
              auto set = [&](int node, size_t card) {
                return "card(" + std::string(set_name) + "^{" + str(j1) + "," + str(j2) +
                       "}(node " + str(node) + "))=" + str(static_cast<int>(card));
              };
              out->push_back({"RC2", "RC2 violated: " + set(s.front(), first) + " vs " +
                                         set(h, count) + " over " +
                                         stratum_name(kind == StratumKind::kS ? "S" : "C", k, j)});
              break;
            }
          }
        }
      }
    }
  }
}

struct ComponentProfile {
  std::vector<int> members;
  int lowest = 0;
  // s[j'][j] = card(S^j'_j(K)), 1-based.
  std::vector<std::vector<int>> s;
};

}  // namespace

std::vector<ForestViolation> check_forest(const Forest& f) {
  require_valid_forest(f);
  RootSystem rs(f);
  const int n = rs.length();
  std::vector<ForestViolation> out;

  for (int k = 1; k <= n; ++k) {
    for (int j = k; j <= n; ++j) {
      size_t card = rs.stratum(StratumKind::kS, k, j).size();
      if (card != 0 && !power_of_two(card)) {
        out.push_back({"RC1", "RC1 violated: card(" + stratum_name("S", k, j) +
                                  ")=" + str(static_cast<int>(card)) + " not a power of 2"});
      }
    }
  }

  check_regularity(rs, &out);

  std::vector<ComponentProfile> comps;
  for (const std::vector<int>& members : rs.components()) {
    ComponentProfile p;
    p.members = members;
    p.s.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int v : members) {
      p.lowest = std::max(p.lowest, rs.depth(v));
      for (int j = rs.depth(v); j <= rs.deepest_below(v); ++j) ++p.s[rs.depth(v)][j];
    }
    comps.push_back(std::move(p));
  }

  for (size_t a = 0; a < comps.size(); ++a) {
    for (size_t b = a + 1; b < comps.size(); ++b) {
      const std::string ka = "K" + str(static_cast<int>(a) + 1);
      const std::string kb = "K" + str(static_cast<int>(b) + 1);
      const int common = std::min(comps[a].lowest, comps[b].lowest);
      for (int j = 1; j <= common; ++j) {
        for (int jp = 1; jp <= j; ++jp) {
          int ca = comps[a].s[jp][j];
          int cb = comps[b].s[jp][j];
          if (ca == cb) continue;
          std::string set = jp == j ? "L_" + str(j) : stratum_name("S", jp, j);
          out.push_back({"RC3", "RC3 violated: card(" + set + "(" + ka + "))=" + str(ca) +
                                    " vs card(" + set + "(" + kb + "))=" + str(cb)});
        }
      }

      const ComponentProfile& shallow = comps[a].lowest <= comps[b].lowest ? comps[a] : comps[b];
      const ComponentProfile& deep = &shallow == &comps[a] ? comps[b] : comps[a];
      const std::string& ks = &shallow == &comps[a] ? ka : kb;
      const std::string& kd = &shallow == &comps[a] ? kb : ka;
      Forest lhs = truncate_component(rs, shallow.members, shallow.lowest);
      Forest rhs = truncate_component(rs, deep.members, shallow.lowest);
      if (!forests_isomorphic(lhs, rhs)) {
        out.push_back({"RC4", "RC4 violated: " + ks + " not order-isomorphic to " + kd +
                                  " truncated at depth " + str(shallow.lowest)});
      }
    }
  }
  return out;
}

// ---- Synthesis ------------------------------------------------------------

Forest chain_forest(const FanChain& c, int depth) {
  std::vector<ChainCharacter> chars = chain_characters(c);
  std::map<ChainCharacter, int> index;
  Forest out;
  for (const ChainCharacter& h : chars) {
    if (h.depth > depth) continue;
    int parent = -1;
    if (h.depth > 1) {
      ChainCharacter p{h.depth - 1, pull_back(h.functional, c.tau_at(h.depth - 1))};
      parent = index.at(p);
    }
    index[h] = out.add(h.depth, parent);
  }
  return out;
}

namespace {

inline constexpr int kMaxSynthesisDim = 6;

// Subspaces of GF(2)^k avoiding e0, as membership masks over the 2^k
// vectors, ordered by dimension then mask.
std::vector<std::pair<int, Bits>> subspaces_avoiding_e0(int k) {
  const int count = 1 << k;
  std::set<Bits> seen = {Bits{1}};
  std::vector<Bits> frontier = {Bits{1}};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (Bits mask : frontier) {
      for (int v = 1; v < count; ++v) {
        if ((mask >> v) & 1) continue;
        Bits grown = mask;
        for (int u = 0; u < count; ++u) {
          if ((mask >> u) & 1) grown |= Bits{1} << (u ^ v);
        }
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, Bits>> out;
  for (Bits mask : seen) {
    if ((mask >> 1) & 1) continue;  // contains e0
    int dim = 0;
    while ((Bits{1} << dim) < static_cast<Bits>(popcount(mask))) ++dim;
    out.push_back({dim, mask});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The transition with kernel K sending its lexicographically first
// complement basis c0 = e0, c1, ... to e0, e1, ...
Gf2Matrix canonical_transition(int k_src, int k_dst, Bits kernel_mask) {
  Gf2Span span(k_src);
  std::vector<Bits> kernel_basis;
  for (int v = 1; v < (1 << k_src); ++v) {
    if ((kernel_mask >> v) & 1) {
      if (span.insert(static_cast<Bits>(v))) kernel_basis.push_back(v);
    }
  }
  std::vector<Bits> complement = {Bits{1}};
  span.insert(1);
  for (int v = 2; v < (1 << k_src); ++v) {
    if (span.insert(static_cast<Bits>(v))) complement.push_back(v);
  }
  const int r = static_cast<int>(complement.size());
  Gf2Span ordered(k_src);
  for (Bits v : complement) ordered.insert(v);
  for (Bits v : kernel_basis) ordered.insert(v);
  Gf2Matrix tau(k_dst, k_src);
  for (int t = 0; t < k_src; ++t) {
    Bits image = *ordered.coordinates(Bits{1} << t) & low_mask(r);
    for (int row = 0; row < r; ++row) tau.set(row, t, (image >> row) & 1);
  }
  return tau;
}

class Synthesizer {
 public:
  Synthesizer(const Forest& target, std::vector<int> dims, long count_bound)
      : target_(target), dims_(std::move(dims)), count_bound_(count_bound) {
    const int n = static_cast<int>(dims_.size());
    for (int d = 1; d <= n; ++d) {
      std::vector<int> keep;
      for (int v = 0; v < target.size(); ++v) {
        if (target.depth[v] <= d) keep.push_back(v);
      }
      prefix_codes_.push_back(forest_canonical(induced_forest(target, keep)));
    }
    for (int d = 1; d < n; ++d) {
      std::vector<Gf2Matrix> options;
      for (const auto& [dim, mask] : subspaces_avoiding_e0(dims_[d - 1])) {
        if (dims_[d - 1] - dim > dims_[d]) continue;
        options.push_back(canonical_transition(dims_[d - 1], dims_[d], mask));
      }
      options_.push_back(std::move(options));
    }
    chain_.dims = dims_;
    chain_.minus.assign(n, Bits{1});
  }

  std::optional<FanChain> run() {
    if (search(1)) return chain_;
    return std::nullopt;
  }

 private:
  // Levels 1..d are fixed and match the target prefix.
  bool search(int d) {
    const int n = static_cast<int>(dims_.size());
    if (d == n) return true;
    for (const Gf2Matrix& tau : options_[d - 1]) {
      if (++visited_ > count_bound_) {
        throw ResourceError("synthesis exceeded " + str(static_cast<int>(count_bound_)) +
                            " search nodes");
      }
      chain_.tau.push_back(tau);
      FanChain prefix{std::vector<int>(dims_.begin(), dims_.begin() + d + 1),
                      std::vector<Bits>(d + 1, Bits{1}), chain_.tau};
      if (forest_canonical(chain_forest(prefix, d + 1)) == prefix_codes_[d] && search(d + 1)) {
        return true;
      }
      chain_.tau.pop_back();
    }
    return false;
  }

  const Forest& target_;
  std::vector<int> dims_;
  long count_bound_;
  long visited_ = 0;
  std::vector<ForestCode> prefix_codes_;
  std::vector<std::vector<Gf2Matrix>> options_;
  FanChain chain_;
};

}  // namespace

std::optional<FanChain> synthesize_chain(const Forest& f, SynthesisLimits limits) {
  require_valid_forest(f);
  if (limits.dim_bound < 1 || limits.dim_bound > kMaxSynthesisDim) {
    throw UsageError("dimension bound must lie in 1.." + str(kMaxSynthesisDim));
  }
  RootSystem rs(f);
  std::vector<int> dims;
  for (int d = 1; d <= rs.length(); ++d) {
    size_t size = rs.level(d).size();
    if (!power_of_two(size)) return std::nullopt;
    int k = 1;
    while ((size_t{1} << (k - 1)) < size) ++k;
    if (k > limits.dim_bound) {
      throw ResourceError("level " + str(d) + " needs dimension " + str(k) + " above the bound " +
                          str(limits.dim_bound));
    }
    dims.push_back(k);
  }
  if (dims.empty()) return std::nullopt;

  std::optional<FanChain> chain = Synthesizer(f, dims, limits.count_bound).run();
  if (!chain) return std::nullopt;
  if (!validate_chain(*chain).ok() ||
      !forests_isomorphic(chain_forest(*chain, chain->length()), f)) {
    throw std::logic_error("synthesized chain does not realize the forest");
  }
  try {
    FanSpace x = FanSpace::from_chain(*chain);
    if (!forests_isomorphic(x.order().forest(), f)) {
      throw std::logic_error("synthesized fan has a different order");
    }
  } catch (const ResourceError&) {
    // Too large to tabulate; the chain-side check above stands.
  }
  return chain;
}

}  // namespace fanforge
