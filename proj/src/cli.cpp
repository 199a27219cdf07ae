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

#include "fanforge/cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "fanforge/corpus.h"
#include "fanforge/error.h"
#include "fanforge/fan_space.h"
#include "fanforge/genesis.h"
#include "fanforge/io.h"
#include "fanforge/iso_engine.h"
#include "fanforge/spectral_order.h"
#include "fanforge/suite.h"

namespace fanforge {
namespace {

struct Options {
  std::string file;
  std::string file2;
  bool dot = false;
  std::optional<std::uint64_t> seed;
  std::string values;
  int max_dim = SynthesisLimits{}.dim_bound;
  long max_count = SynthesisLimits{}.count_bound;
  CorpusOptions corpus;
  std::string out_dir;
};

FanSpace load_fan(const std::string& path) {
  return FanSpace::from_chain(parse_chain(read_file(path)));
}

ChoicePolicy policy_for(const Options& o) {
  return o.seed ? ChoicePolicy::seeded(*o.seed) : ChoicePolicy::deterministic();
}

std::string element_string(const FanSpace& x, int a) {
  const SliceElement& e = x.element_coords()[a];
  if (e.depth == 0) return "element " + std::to_string(a) + " (zero)";
  return "element " + std::to_string(a) + " (slice " + std::to_string(e.depth) + ", " +
         to_bitstring(e.vec, x.chain().dim(e.depth)) + ")";
}

std::string ids(const FanSpace& x, const std::vector<CharId>& v) {
  std::string out;
  for (CharId h : v) out += " " + x.label(h);
  return out;
}

int cmd_validate(const Options& o, std::ostream& out) {
  FanChain c = parse_chain(read_file(o.file));
  ValidationReport report = validate_chain(c);
  for (const Violation& v : report.violations) {
    out << "violated " << v.rule << ": " << v.detail << "\n";
  }
  if (!report.ok()) return kExitNegative;
  Cardinalities card = cardinalities(c);
  out << "valid fan chain: n=" << c.length() << " card(F)=" << card.card_f
      << " card(X)=" << card.card_x << "\n";
  return kExitOk;
}

int cmd_chars(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  for (CharId h = 0; h < x.size(); ++h) {
    out << x.label(h) << " " << character_string(x.character(h)) << "\n";
  }
  out << x.size() << (x.size() == 1 ? " character\n" : " characters\n");
  return kExitOk;
}

int cmd_levels(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  for (int d = 1; d <= x.length(); ++d) {
    out << "level " << d << ": dim " << x.chain().dim(d) << ", " << x.level(d).size()
        << " characters:" << ids(x, x.level(d)) << "\n";
  }
  return kExitOk;
}

int cmd_rootsys(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  out << (o.dot ? to_dot(x) : serialize_forest(x.order().forest()));
  return kExitOk;
}

int cmd_strata(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  for (int k = 1; k <= x.length(); ++k) {
    for (int j = k; j <= x.length(); ++j) {
      for (StratumKind kind : {StratumKind::kS, StratumKind::kC}) {
        std::vector<CharId> s = stratum(x, kind, k, j).members;
        out << (kind == StratumKind::kS ? "S^" : "C^") << k << "_" << j << ": " << s.size()
            << ids(x, s) << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_sgs(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  ChoicePolicy policy = policy_for(o);
  GeneratingSystem b = standard_generating_system(x, policy);
  for (size_t k = 0; k < b.levels.size(); ++k) {
    out << "level " << k + 1 << ":\n";
    for (const SgsElement& e : b.levels[k]) {
      out << "  " << x.label(e.id) << " " << source_name(e.source) << " stage " << e.stage;
      if (e.anchor >= 0) out << " over " << x.label(e.anchor);
      out << "\n";
    }
  }
  PropertyReport report = verify_sgs(x, b);
  out << "verify: " << report.summary() << "\n";
  return report.ok() ? kExitOk : kExitNegative;
}

int cmd_iso(const Options& o, std::ostream& out) {
  FanSpace a = load_fan(o.file);
  FanSpace b = load_fan(o.file2);
  ChoicePolicy policy = policy_for(o);
  CandidateMap m;
  try {
    m = build_isomorphism(a, b, policy);
  } catch (const OrderMismatchError& e) {
    out << "not isomorphic: specialization forests differ\n"
        << "  " << e.code1() << "\n  " << e.code2() << "\n";
    return kExitNegative;
  }
  for (CharId h = 0; h < a.size(); ++h) {
    out << "depth " << a.depth(h) << ": "
        << to_bitstring(a.coords(h).functional, a.chain().dim(a.depth(h))) << " -> "
        << to_bitstring(b.coords(m[h]).functional, b.chain().dim(b.depth(m[h]))) << "\n";
  }
  return kExitOk;
}

int cmd_represent(const Options& o, std::ostream& out) {
  FanSpace x = load_fan(o.file);
  if (static_cast<int>(o.values.size()) != x.size()) {
    throw UsageError("--values needs one of + 0 - per character (" + std::to_string(x.size()) +
                     ")");
  }
  std::vector<Sign3> f;
  for (char ch : o.values) {
    try {
      f.push_back(sign_from_char(ch));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad value '") + ch + "'");
    }
  }
  Representation rep = represent(x, f);
  if (rep.element) {
    out << "represented by " << element_string(x, *rep.element) << "\n";
    return kExitOk;
  }
  out << "not representable: " << rep.witness->describe(x) << "\n";
  return kExitNegative;
}

int cmd_check_forest(const Options& o, std::ostream& out) {
  std::vector<ForestViolation> found = check_forest(parse_forest(read_file(o.file)));
  for (const ForestViolation& v : found) out << v.message << "\n";
  if (found.empty()) out << "no violation found\n";
  return found.empty() ? kExitOk : kExitNegative;
}

int cmd_realize(const Options& o, std::ostream& out) {
  Forest f = parse_forest(read_file(o.file));
  std::optional<FanChain> c = synthesize_chain(f, {o.max_dim, o.max_count});
  if (!c) {
    out << "no chain realizes this forest\n";
    return kExitNegative;
  }
  out << serialize_chain(*c);
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  std::vector<FanChain> corpus = generate_corpus(o.corpus);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  for (size_t i = 0; i < corpus.size(); ++i) {
    std::ostringstream name;
    name << "chain_" << std::setw(4) << std::setfill('0') << i << ".fan";
    if (o.out_dir.empty()) {
      out << "# " << name.str() << "\n" << serialize_chain(corpus[i]);
    } else {
      std::string path = (std::filesystem::path(o.out_dir) / name.str()).string();
      write_file(path, serialize_chain(corpus[i]));
      out << path << "\n";
    }
  }
  return kExitOk;
}

int cmd_suite(const Options& o, std::ostream& out) {
  CorpusOptions options = o.corpus;
  if (o.seed) options.seed = *o.seed;
  bool ok = true;
  for (const SuiteOutcome& s : run_suites(options)) {
    ok = ok && s.ok();
    out << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.report.total_checks() << " checks, "
        << s.report.total_failures() << " failures\n";
    for (const auto& clause : s.report.clauses()) {
      if (clause.failures == 0) continue;
      out << "  " << clause.name << ": " << clause.failures << " of " << clause.checks << "\n";
      for (const std::string& w : clause.witnesses) out << "    " << w << "\n";
    }
  }
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fanforge: finite fans, their specialization forests and isomorphisms", "fanforge"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a chain file against the chain rules");
  validate->add_option("chain", o.file, "Chain file")->required();
  auto* chars = app.add_subcommand("chars", "List the characters of a chain's fan");
  chars->add_option("chain", o.file, "Chain file")->required();
  auto* levels = app.add_subcommand("levels", "List the levels of the character space");
  levels->add_option("chain", o.file, "Chain file")->required();
  auto* rootsys = app.add_subcommand("rootsys", "Print the specialization forest");
  rootsys->add_option("chain", o.file, "Chain file")->required();
  rootsys->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of a forest file");
  auto* strata = app.add_subcommand("strata", "List the strata S^k_j and C^k_j");
  strata->add_option("chain", o.file, "Chain file")->required();
  auto* sgs = app.add_subcommand("sgs", "Build and verify a standard generating system");
  sgs->add_option("chain", o.file, "Chain file")->required();
  sgs->add_option("--seed", o.seed, "Randomize free choices with this seed");
  auto* iso = app.add_subcommand("iso", "Construct an isomorphism between two fans");
  iso->add_option("first", o.file, "First chain file")->required();
  iso->add_option("second", o.file2, "Second chain file")->required();
  iso->add_option("--seed", o.seed, "Randomize free choices with this seed");
  auto* represent = app.add_subcommand("represent", "Find an element inducing a map X -> {+,0,-}");
  represent->add_option("chain", o.file, "Chain file")->required();
  represent
      ->add_option("--values", o.values,
                   "One of + 0 - per character, in the order printed by chars")
      ->required();
  auto* check = app.add_subcommand("check-forest", "Test necessary conditions on a forest file");
  check->add_option("forest", o.file, "Forest file")->required();
  auto* realize = app.add_subcommand("realize", "Search for a chain whose forest matches");
  realize->add_option("forest", o.file, "Forest file")->required();
  realize->add_option("--max-dim", o.max_dim, "Largest level dimension to search")
      ->capture_default_str();
  realize->add_option("--max-count", o.max_count, "Search node budget")->capture_default_str();
  auto* gen = app.add_subcommand("gen", "Generate a seeded corpus of chains");
  gen->add_option("--seed", o.corpus.seed, "Random seed")->capture_default_str();
  gen->add_option("--levels", o.corpus.levels, "Largest chain length")->capture_default_str();
  gen->add_option("--maxdim", o.corpus.maxdim, "Largest level dimension")->capture_default_str();
  gen->add_option("--count", o.corpus.count, "Number of chains")->capture_default_str();
  gen->add_option("--out", o.out_dir, "Write one file per chain into this directory");
  auto* suite = app.add_subcommand("suite", "Run all property suites on a seeded corpus");
  suite->add_option("--seed", o.seed, "Corpus seed (default 1)");
  suite->add_option("--count", o.corpus.count, "Number of chains")->capture_default_str();
  suite->add_option("--levels", o.corpus.levels, "Largest chain length")->capture_default_str();
  suite->add_option("--maxdim", o.corpus.maxdim, "Largest level dimension")->capture_default_str();
  app.footer(
      "Exit codes: 0 success, 1 negative answer, 2 input error, 3 resource limit.\n"
      "FANFORGE_CAP overrides the table-size cap of character enumeration.");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*chars) return cmd_chars(o, out);
    if (*levels) return cmd_levels(o, out);
    if (*rootsys) return cmd_rootsys(o, out);
    if (*strata) return cmd_strata(o, out);
    if (*sgs) return cmd_sgs(o, out);
    if (*iso) return cmd_iso(o, out);
    if (*represent) return cmd_represent(o, out);
    if (*check) return cmd_check_forest(o, out);
    if (*realize) return cmd_realize(o, out);
    if (*gen) return cmd_gen(o, out);
    if (*suite) return cmd_suite(o, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace fanforge
