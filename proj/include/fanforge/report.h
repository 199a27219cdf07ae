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

#ifndef FANFORGE_REPORT_H_
#define FANFORGE_REPORT_H_

#include <string>
#include <vector>

namespace fanforge {

struct Violation {
  std::string rule;
  std::string detail;
};

// A list of violated invariants; empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }
  bool mentions(const std::string& rule) const {
    for (const auto& v : violations) {
      if (v.rule == rule) return true;
    }
    return false;
  }
};

// Per-clause tallies for a property check. Only the first few failure
// witnesses per clause are kept.
class PropertyReport {
 public:
  struct Clause {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> witnesses;
  };

  static constexpr int kMaxWitnesses = 4;

  Clause& clause(const std::string& name);
  const Clause* find(const std::string& name) const;

  void check(const std::string& name, bool holds, const std::string& witness = "");

  // Builds the witness only on failure.
  template <typename MakeWitness>
  void check_with(const std::string& name, bool holds, MakeWitness&& make) {
    if (holds) {
      ++clause(name).checks;
    } else {
      check(name, false, make());
    }
  }
  void merge(const PropertyReport& other);

  bool ok() const;
  long total_checks() const;
  long total_failures() const;
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::string summary() const;

 private:
  std::vector<Clause> clauses_;
};

}  // namespace fanforge

#endif  // FANFORGE_REPORT_H_
