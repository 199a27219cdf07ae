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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "fanforge/error.h"
#include "fanforge/fan_space.h"
#include "fanforge/io.h"
#include "fanforge/iso_engine.h"
#include "fanforge/spectral_order.h"
#include "fanforge/suite.h"

namespace py = pybind11;
using namespace fanforge;

namespace {

FanSpace space(const std::string& text) { return FanSpace::from_chain(parse_chain(text)); }

py::dict chain_info(const std::string& text) {
  FanChain c = parse_chain(text);
  FanSpace x = FanSpace::from_chain(c);
  Cardinalities card = cardinalities(c);
  py::list levels;
  for (int d = 1; d <= x.length(); ++d) {
    py::list labels;
    for (CharId h : x.level(d)) labels.append(x.label(h));
    levels.append(labels);
  }
  py::dict out;
  out["length"] = c.length();
  out["dims"] = c.dims;
  out["card_f"] = card.card_f;
  out["card_x"] = card.card_x;
  out["levels"] = levels;
  out["forest_code"] = forest_canonical(root_system(x)).text;
  return out;
}

py::dict isomorphism(const std::string& a, const std::string& b,
                     std::optional<std::uint64_t> seed) {
  FanSpace x1 = space(a), x2 = space(b);
  ChoicePolicy policy = seed ? ChoicePolicy::seeded(*seed) : ChoicePolicy::deterministic();
  CandidateMap m = build_isomorphism(x1, x2, policy);
  py::dict out;
  for (CharId h = 0; h < x1.size(); ++h) out[py::str(x1.label(h))] = x2.label(m[h]);
  return out;
}

py::tuple represent_values(const std::string& text, const std::string& values) {
  FanSpace x = space(text);
  std::vector<Sign3> f;
  for (char ch : values) f.push_back(sign_from_char(ch));
  Representation r = represent(x, f);
  py::object element = r.element ? py::object(py::int_(*r.element)) : py::none();
  py::object witness = r.witness ? py::object(py::str(r.witness->describe(x))) : py::none();
  return py::make_tuple(element, witness);
}

py::list forest_violations(const std::string& text) {
  py::list out;
  for (const ForestViolation& v : check_forest(parse_forest(text))) {
    out.append(py::make_tuple(v.rule, v.message));
  }
  return out;
}

std::optional<std::string> realize(const std::string& text, int max_dim, long max_count) {
  std::optional<FanChain> c = synthesize_chain(parse_forest(text), {max_dim, max_count});
  if (!c) return std::nullopt;
  return serialize_chain(*c);
}

py::list suites(std::uint64_t seed, int levels, int maxdim, int count) {
  py::list out;
  for (const SuiteOutcome& o : run_suites({seed, levels, maxdim, count})) {
    py::dict d;
    d["name"] = o.name;
    d["ok"] = o.ok();
    d["checks"] = o.report.total_checks();
    d["failures"] = o.report.total_failures();
    d["seconds"] = o.seconds;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite fans from chain descriptions.";

  auto base = py::register_exception<Error>(m, "FanforgeError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", base);
  py::register_exception<UsageError>(m, "UsageError", base);
  py::register_exception<ResourceError>(m, "ResourceError", base);
  py::register_exception<NotAFanError>(m, "NotAFanError", base);
  py::register_exception<OrderMismatchError>(m, "OrderMismatchError", base);

  m.def(
      "normalize_chain", [](const std::string& t) { return serialize_chain(parse_chain(t)); },
      py::arg("text"));
  m.def(
      "normalize_forest", [](const std::string& t) { return serialize_forest(parse_forest(t)); },
      py::arg("text"));
  m.def("chain_info", &chain_info, py::arg("text"));
  m.def("to_dot", [](const std::string& t) { return to_dot(space(t)); }, py::arg("text"));
  m.def("isomorphism", &isomorphism, py::arg("a"), py::arg("b"), py::arg("seed") = py::none());
  m.def("represent", &represent_values, py::arg("text"), py::arg("values"));
  m.def("check_forest", &forest_violations, py::arg("text"));
  m.def("realize", &realize, py::arg("text"), py::arg("max_dim") = 4,
        py::arg("max_count") = 200000);
  m.def("run_suites", &suites, py::arg("seed") = 1, py::arg("levels") = 4, py::arg("maxdim") = 4,
        py::arg("count") = 200);
}
