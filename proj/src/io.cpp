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

#include "fanforge/io.h"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "fanforge/error.h"

namespace fanforge {
namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::map<std::string, std::string> fields;
  std::vector<std::string> bare;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string word;
    Line line;
    line.number = number;
    while (words >> word) {
      if (line.keyword.empty()) {
        line.keyword = word;
      } else if (size_t eq = word.find('='); eq != std::string::npos) {
        std::string key = word.substr(0, eq);
        if (!line.fields.emplace(key, word.substr(eq + 1)).second) {
          throw StructuralError("line " + std::to_string(number) + ": repeated field " + key);
        }
      } else {
        line.bare.push_back(word);
      }
    }
    if (!line.keyword.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw StructuralError("line " + std::to_string(line.number) + ": " + what);
}

const std::string& field(const Line& line, const std::string& key) {
  auto it = line.fields.find(key);
  if (it == line.fields.end()) fail(line, "missing field " + key);
  return it->second;
}

int int_field(const Line& line, const std::string& key) {
  const std::string& v = field(line, key);
  size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(v, &used);
  } catch (const std::exception&) {
    fail(line, "bad integer " + key + "=" + v);
  }
  if (used != v.size()) fail(line, "bad integer " + key + "=" + v);
  return out;
}

void expect_fields(const Line& line, size_t count, size_t bare) {
  if (line.fields.size() != count || line.bare.size() != bare) {
    fail(line, "unexpected fields for " + line.keyword);
  }
}

Bits sized_bitstring(const Line& line, const std::string& text, int dim) {
  if (static_cast<int>(text.size()) != dim) {
    fail(line, "bitstring '" + text + "' should have length " + std::to_string(dim));
  }
  return parse_bitstring(text);
}

}  // namespace

FanChain parse_chain(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines.front().keyword != "fanchain") {
    throw StructuralError("chain file must start with 'fanchain n=<n>'");
  }
  expect_fields(lines.front(), 1, 0);
  const int n = int_field(lines.front(), "n");
  if (n < 1 || n > 64) fail(lines.front(), "n out of range");

  std::vector<std::optional<std::pair<int, Bits>>> levels(n);
  std::vector<const Line*> taus(n > 1 ? n - 1 : 0, nullptr);
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.keyword == "level") {
      expect_fields(line, 3, 0);
      int d = int_field(line, "d");
      if (d < 1 || d > n) fail(line, "depth out of range");
      if (levels[d - 1]) fail(line, "repeated level " + std::to_string(d));
      int dim = int_field(line, "dim");
      if (dim < 1 || dim > kMaxDim) fail(line, "dimension out of range");
      levels[d - 1] = {dim, sized_bitstring(line, field(line, "minus"), dim)};
    } else if (line.keyword == "tau") {
      expect_fields(line, 2, 1);
      int d = int_field(line, "d");
      if (d < 1 || d >= n) fail(line, "transition depth out of range");
      if (taus[d - 1]) fail(line, "repeated transition " + std::to_string(d));
      taus[d - 1] = &line;
    } else {
      fail(line, "unknown keyword " + line.keyword);
    }
  }

  FanChain c;
  for (int d = 1; d <= n; ++d) {
    if (!levels[d - 1]) {
      throw StructuralError("missing level " + std::to_string(d));
    }
    c.dims.push_back(levels[d - 1]->first);
    c.minus.push_back(levels[d - 1]->second);
  }
  for (int d = 1; d < n; ++d) {
    const Line* line = taus[d - 1];
    if (line == nullptr) {
      throw StructuralError("missing transition " + std::to_string(d));
    }
    int rows = int_field(*line, "rows");
    if (rows != c.dim(d + 1)) fail(*line, "rows must equal the next dimension");
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(line->bare.front());
    while (std::getline(in, part, ';')) parts.push_back(part);
    if (!line->bare.front().empty() && line->bare.front().back() == ';') {
      parts.push_back("");
    }
    if (static_cast<int>(parts.size()) != rows) {
      fail(*line, "expected " + std::to_string(rows) + " rows");
    }
    Gf2Matrix m(rows, c.dim(d));
    for (int r = 0; r < rows; ++r) {
      m.set_row(r, sized_bitstring(*line, parts[r], c.dim(d)));
    }
    c.tau.push_back(m);
  }
  check_chain_structure(c);
  return c;
}

std::string serialize_chain(const FanChain& c) {
  check_chain_structure(c);
  std::ostringstream out;
  out << "fanchain n=" << c.length() << "\n";
  for (int d = 1; d <= c.length(); ++d) {
    out << "level d=" << d << " dim=" << c.dim(d)
        << " minus=" << to_bitstring(c.minus_at(d), c.dim(d)) << "\n";
  }
  for (int d = 1; d < c.length(); ++d) {
    const Gf2Matrix& m = c.tau_at(d);
    out << "tau d=" << d << " rows=" << m.rows() << " ";
    for (int r = 0; r < m.rows(); ++r) {
      if (r) out << ";";
      out << to_bitstring(m.row(r), m.cols());
    }
    out << "\n";
  }
  return out.str();
}

Forest parse_forest(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  std::vector<std::optional<std::pair<int, int>>> nodes(lines.size());
  for (const Line& line : lines) {
    if (line.keyword != "node") fail(line, "unknown keyword " + line.keyword);
    expect_fields(line, 3, 0);
    int id = int_field(line, "id");
    if (id < 0 || id >= static_cast<int>(lines.size())) {
      fail(line, "ids must be dense from 0");
    }
    if (nodes[id]) fail(line, "repeated id " + std::to_string(id));
    int parent = field(line, "parent") == "none" ? -1 : int_field(line, "parent");
    if (parent < -1) fail(line, "bad parent");
    nodes[id] = {int_field(line, "depth"), parent};
  }
  Forest f;
  for (const auto& node : nodes) f.add(node->first, node->second);
  require_valid_forest(f);
  return f;
}

std::string serialize_forest(const Forest& f) {
  std::ostringstream out;
  for (int v = 0; v < f.size(); ++v) {
    out << "node id=" << v << " depth=" << f.depth[v] << " parent=";
    if (f.parent[v] == -1) {
      out << "none";
    } else {
      out << f.parent[v];
    }
    out << "\n";
  }
  return out.str();
}

std::string to_dot(const FanSpace& x) {
  std::ostringstream out;
  out << "digraph rootsys {\n  rankdir=BT;\n";
  for (CharId h = 0; h < x.size(); ++h) {
    out << "  n" << h << " [label=\"" << x.label(h) << "\"];\n";
  }
  for (CharId h = 0; h < x.size(); ++h) {
    int p = x.order().parent(h);
    if (p != -1) out << "  n" << h << " -> n" << p << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path);
  out << text;
  if (!out) throw StructuralError("write failed for " + path);
}

}  // namespace fanforge
