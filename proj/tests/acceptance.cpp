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

// One PASS/FAIL line per acceptance criterion. Exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "fanforge/corpus.h"
#include "fanforge/io.h"
#include "fanforge/iso_engine.h"
#include "fanforge/suite.h"

namespace {

using fanforge::SuiteOutcome;

constexpr fanforge::CorpusOptions kCorpus{1, 4, 4, 200};
constexpr double kCardinalitySeconds = 5.0;
constexpr double kInvolutionSeconds = 30.0;
constexpr double kIsomorphismSeconds = 60.0;
constexpr int kSeededPolicies = 10;
constexpr int kIsomorphismMaxCard = 10;
constexpr int kRepresentationMaxCard = 4;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fixture(const std::string& name) {
  return std::string(FANFORGE_FIXTURE_DIR) + "/" + name;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Verdict from_suite(const SuiteOutcome& o, double limit = 0) {
  Verdict v;
  v.pass = o.ok() && (limit <= 0 || o.seconds < limit);
  v.detail = std::to_string(o.report.total_checks()) + " checks, " +
             std::to_string(o.report.total_failures()) + " failures, " + seconds(o.seconds);
  if (limit > 0) v.detail += " (limit " + seconds(limit) + ")";
  if (!o.report.ok()) v.detail += "\n" + o.report.summary();
  return v;
}

Verdict configurations(const std::vector<fanforge::FanChain>& corpus) {
  std::vector<fanforge::Forest> files;
  for (int i = 1; i <= 3; ++i) {
    files.push_back(fanforge::parse_forest(
        fanforge::read_file(fixture("config" + std::to_string(i) + ".forest"))));
  }
  Verdict v = from_suite(fanforge::suite_forest_checks(corpus, files));
  std::vector<std::vector<std::string>> expected = fanforge::expected_configuration_violations();
  for (size_t i = 0; i < files.size(); ++i) {
    std::vector<fanforge::ForestViolation> found = fanforge::check_forest(files[i]);
    int named = 0;
    for (const std::string& m : expected[i]) {
      named += std::any_of(found.begin(), found.end(),
                           [&](const fanforge::ForestViolation& f) { return f.message == m; });
    }
    v.pass = v.pass && named == static_cast<int>(expected[i].size());
    v.detail += "; config " + std::to_string(i + 1) + ": " + std::to_string(named) + "/" +
                std::to_string(expected[i].size()) + " named, " + std::to_string(found.size()) +
                " reported";
  }
  return v;
}

Verdict round_trips(const std::vector<fanforge::FanChain>& corpus) {
  Verdict v = from_suite(fanforge::suite_round_trips(corpus));
  int files = 0;
  for (const char* name : {"e1.fan", "e1prime.fan", "triv.fan", "e2.fan", "ea.fan", "eb.fan"}) {
    std::string text = fanforge::read_file(fixture(name));
    v.pass = v.pass && fanforge::serialize_chain(fanforge::parse_chain(text)) == text;
    ++files;
  }
  for (const char* name :
       {"config1.forest", "config2.forest", "config3.forest", "two_roots.forest"}) {
    std::string text = fanforge::read_file(fixture(name));
    v.pass = v.pass && fanforge::serialize_forest(fanforge::parse_forest(text)) == text;
    ++files;
  }
  v.detail += "; " + std::to_string(files) + " fixture files";
  return v;
}

}  // namespace

int main() {
  const std::vector<fanforge::FanChain> corpus = fanforge::generate_corpus(kCorpus);
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"cardinality identity",
       [&] { return from_suite(fanforge::suite_cardinality(corpus), kCardinalitySeconds); }},
      {"specialization criteria agree",
       [&] { return from_suite(fanforge::suite_specialization(corpus)); }},
      {"involution suite",
       [&] { return from_suite(fanforge::suite_involutions(corpus), kInvolutionSeconds); }},
      {"regularity suite", [&] { return from_suite(fanforge::suite_regularity(corpus)); }},
      {"impossible configurations", [&] { return configurations(corpus); }},
      {"generating systems",
       [&] {
         return from_suite(
             fanforge::suite_generating_systems(corpus, kCorpus.seed, kSeededPolicies));
       }},
      {"isomorphism end to end",
       [&] {
         return from_suite(fanforge::suite_isomorphism(corpus, kIsomorphismMaxCard),
                           kIsomorphismSeconds);
       }},
      {"representation",
       [&] { return from_suite(fanforge::suite_representation(corpus, kRepresentationMaxCard)); }},
      {"round trips", [&] { return round_trips(corpus); }},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                v.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
