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

#include "fanforge/report.h"

#include <sstream>

namespace fanforge {

PropertyReport::Clause& PropertyReport::clause(const std::string& name) {
  for (auto& c : clauses_) {
    if (c.name == name) return c;
  }
  Clause added;
  added.name = name;
  clauses_.push_back(std::move(added));
  return clauses_.back();
}

const PropertyReport::Clause* PropertyReport::find(const std::string& name) const {
  for (const auto& c : clauses_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void PropertyReport::check(const std::string& name, bool holds, const std::string& witness) {
  Clause& c = clause(name);
  ++c.checks;
  if (!holds) {
    ++c.failures;
    if (static_cast<int>(c.witnesses.size()) < kMaxWitnesses) {
      c.witnesses.push_back(witness);
    }
  }
}

void PropertyReport::merge(const PropertyReport& other) {
  for (const auto& o : other.clauses_) {
    Clause& c = clause(o.name);
    c.checks += o.checks;
    c.failures += o.failures;
    for (const auto& w : o.witnesses) {
      if (static_cast<int>(c.witnesses.size()) < kMaxWitnesses) {
        c.witnesses.push_back(w);
      }
    }
  }
}

bool PropertyReport::ok() const { return total_failures() == 0; }

long PropertyReport::total_checks() const {
  long n = 0;
  for (const auto& c : clauses_) n += c.checks;
  return n;
}

long PropertyReport::total_failures() const {
  long n = 0;
  for (const auto& c : clauses_) n += c.failures;
  return n;
}

std::string PropertyReport::summary() const {
  std::ostringstream out;
  for (const auto& c : clauses_) {
    out << c.name << ": " << c.checks << " checks, " << c.failures << " failures\n";
    for (const auto& w : c.witnesses) out << "  witness: " << w << "\n";
  }
  return out.str();
}

}  // namespace fanforge
