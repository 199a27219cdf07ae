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

// Text formats for chains and forests, and Graphviz export.
//
// Chain file:
//   fanchain n=<n>
//   level d=<d> dim=<k> minus=<bitstring>        (one per depth)
//   tau d=<d> rows=<k_{d+1}> <row>;<row>;...      (one per d < n)
// Forest file:
//   node id=<int> depth=<int> parent=<int|none>   (ids dense from 0)
// Bitstrings are little-endian. Blank lines and text after '#' are ignored.

#ifndef FANFORGE_IO_H_
#define FANFORGE_IO_H_

#include <string>

#include "fanforge/fan_chain.h"
#include "fanforge/fan_space.h"
#include "fanforge/forest.h"

namespace fanforge {

// Both parsers throw StructuralError on malformed input. The chain parser
// checks shapes only; run validate_chain for the semantic rules.
FanChain parse_chain(const std::string& text);
std::string serialize_chain(const FanChain& c);

Forest parse_forest(const std::string& text);
std::string serialize_forest(const Forest& f);

// Nodes labeled by FanSpace::label, edges from child to parent.
std::string to_dot(const FanSpace& x);

// Throws StructuralError when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace fanforge

#endif  // FANFORGE_IO_H_
