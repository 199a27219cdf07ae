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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "fanforge/cli.h"
#include "fanforge/corpus.h"
#include "fanforge/error.h"
#include "fanforge/io.h"
#include "fanforge/spectral_order.h"
#include "fixtures.h"

using namespace fanforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixtures::path(name); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fanforge_test_" + name)).string();
}

}  // namespace

TEST_CASE("chain files round trip byte for byte") {
  for (const char* name : {"e1.fan", "e1prime.fan", "triv.fan", "e2.fan", "ea.fan", "eb.fan"}) {
    std::string text = read_file(fx(name));
    CHECK(serialize_chain(parse_chain(text)) == text);
  }
  for (const FanChain& c : generate_corpus({18, 4, 4, 40})) {
    CHECK(parse_chain(serialize_chain(c)) == c);
  }
}

TEST_CASE("forest files round trip byte for byte") {
  for (const char* name :
       {"config1.forest", "config2.forest", "config3.forest", "two_roots.forest"}) {
    std::string text = read_file(fx(name));
    CHECK(serialize_forest(parse_forest(text)) == text);
  }
}

TEST_CASE("chain parsing accepts comments and rejects malformed input") {
  FanChain c = parse_chain("# comment\nfanchain n=1\n\nlevel d=1 dim=1 minus=1\n");
  CHECK(c.length() == 1);
  CHECK_THROWS_AS(parse_chain(""), StructuralError);
  CHECK_THROWS_AS(parse_chain("fanchain n=1\n"), StructuralError);
  CHECK_THROWS_AS(parse_chain("fanchain n=1\nlevel d=1 dim=2 minus=1\n"), StructuralError);
  CHECK_THROWS_AS(parse_chain("fanchain n=2\nlevel d=1 dim=1 minus=1\n"
                              "level d=2 dim=1 minus=1\ntau d=1 rows=1 11\n"),
                  StructuralError);
  CHECK_THROWS_AS(parse_chain("fanchain n=1\nlevel d=1 dim=1 minus=1\nbogus\n"), StructuralError);
  CHECK_THROWS_AS(parse_forest("node id=0 depth=2 parent=none\n"), StructuralError);
  CHECK_THROWS_AS(parse_forest("node id=0 depth=x parent=none\n"), StructuralError);
  CHECK_THROWS_AS(read_file(temp_path("missing")), StructuralError);
}

TEST_CASE("dot output has one node per character and one edge per cover") {
  FanSpace x = fixtures::fan("e1.fan");
  std::string dot = to_dot(x);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("label=\"d1:1\"") != std::string::npos);
  size_t arrows = 0;
  for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  CHECK(arrows == 2);
}

TEST_CASE("informational subcommands") {
  Run r = run({"validate", fx("e1.fan")});
  CHECK(r.code == kExitOk);
  r = run({"chars", fx("e1.fan")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3 characters") != std::string::npos);
  CHECK(run({"levels", fx("e1.fan")}).code == kExitOk);
  CHECK(run({"strata", fx("eb.fan")}).code == kExitOk);
  r = run({"rootsys", fx("e1.fan"), "--dot"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == to_dot(fixtures::fan("e1.fan")));
  r = run({"sgs", fx("e1.fan"), "--seed", "3"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("iso exit codes") {
  Run r = run({"iso", fx("e1.fan"), fx("e1prime.fan")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("->") != std::string::npos);
  r = run({"iso", fx("ea.fan"), fx("eb.fan")});
  CHECK(r.code == kExitNegative);
  FanSpace a = fixtures::fan("ea.fan");
  CHECK((r.out + r.err).find(forest_canonical(root_system(a)).text) != std::string::npos);
}

TEST_CASE("represent exit codes") {
  Run r = run({"represent", fx("e1.fan"), "--values", "+0+"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("(zero-upward) d2:10 d1:1") != std::string::npos);
  CHECK(run({"represent", fx("e1.fan"), "--values", "+++"}).code == kExitOk);
  CHECK(run({"represent", fx("e1.fan"), "--values", "++"}).code == kExitInput);
  CHECK(run({"represent", fx("e1.fan"), "--values", "+x+"}).code == kExitInput);
}

TEST_CASE("forest subcommands") {
  Run r = run({"check-forest", fx("config1.forest")});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("RC3 violated: card(L_2(K1))=2 vs card(L_2(K2))=4") != std::string::npos);
  r = run({"check-forest", fx("two_roots.forest")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("no violation found") != std::string::npos);
  CHECK(run({"realize", fx("two_roots.forest")}).code == kExitOk);
  CHECK(run({"realize", fx("config2.forest")}).code == kExitNegative);
  CHECK(run({"realize", fx("config2.forest"), "--max-count", "1"}).code == kExitResource);
}

TEST_CASE("gen is deterministic") {
  std::string a = temp_path("gen_a"), b = temp_path("gen_b");
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
  CHECK(run({"gen", "--seed", "4", "--count", "5", "--out", a}).code == kExitOk);
  CHECK(run({"gen", "--seed", "4", "--count", "5", "--out", b}).code == kExitOk);
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(a)) {
    std::string other = (std::filesystem::path(b) / entry.path().filename()).string();
    CHECK(read_file(entry.path().string()) == read_file(other));
    ++files;
  }
  CHECK(files == 5);
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST_CASE("usage errors") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"validate"}).code == kExitInput);
  CHECK(run({"validate", temp_path("missing.fan")}).code == kExitInput);
  CHECK(run({"gen", "--maxdim", "9", "--out", temp_path("never")}).code == kExitInput);
}
