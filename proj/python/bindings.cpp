// Copyright 2026 The GDLZ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdlz/analysis.hpp"
#include "gdlz/eval.hpp"
#include "gdlz/model_io.hpp"
#include "gdlz/nim.hpp"
#include "gdlz/parse.hpp"
#include "gdlz/translate.hpp"

namespace py = pybind11;
using namespace gdlz;

namespace {

path build_path_from_lines(const std::shared_ptr<extensional_model>& m,
                           const std::vector<std::string>& lines) {
  std::vector<joint_action> joints;
  for (const auto& line : lines)
    joints.push_back(parse_joint_action(line, m->signature()));
  return build_path(m, joints);
}

py::object verdict_to_dict(const model_of_verdict& v) {
  py::dict out;
  out["status"] = std::string(v.name());
  out["paths_checked"] = v.paths_checked;
  if (v.counterexample) {
    py::dict ce;
    ce["stage"] = v.counterexample->stage;
    ce["rule_index"] = v.counterexample->rule_index;
    std::vector<std::string> joints;
    for (const auto& d : v.counterexample->witness.joints)
      joints.push_back(joint_to_string(d));
    ce["joints"] = joints;
    out["counterexample"] = ce;
  } else {
    out["counterexample"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_gdlz, m) {
  m.doc() = "game descriptions with integer state variables: parsing, "
            "evaluation, model checking, translation and size analysis";

  py::register_exception<parse_error>(m, "ParseError");
  py::register_exception<eval_error>(m, "EvalError");
  py::register_exception<model_error>(m, "ModelError");
  py::register_exception<path_error>(m, "PathError");
  py::register_exception<translate_error>(m, "TranslateError");
  py::register_exception<io_error>(m, "IoError");

  py::class_<formula>(m, "Formula")
      .def("__str__", &formula::to_string)
      .def("__repr__",
           [](const formula& f) { return "Formula(" + f.to_string() + ")"; })
      .def("__eq__", [](const formula& a, const formula& b) { return a == b; })
      .def("__hash__", &formula::hash)
      .def_property_readonly("atomic", &formula::is_atomic);

  py::class_<rule_set>(m, "RuleSet")
      .def(py::init<>())
      .def_readwrite("name", &rule_set::name)
      .def_readwrite("rules", &rule_set::rules)
      .def("__len__", [](const rule_set& rs) { return rs.rules.size(); });

  py::class_<extensional_model, std::shared_ptr<extensional_model>>(m, "Model")
      .def_property_readonly(
          "agents",
          [](const extensional_model& mm) { return mm.signature().agents; })
      .def_property_readonly(
          "vars", [](const extensional_model& mm) { return mm.signature().vars; })
      .def_property_readonly("state_count", &extensional_model::state_count)
      .def("to_text", [](const extensional_model& mm) { return model_to_text(mm); })
      .def("validate",
           [](const extensional_model& mm) { return validate_model(mm); })
      .def("build_path", &build_path_from_lines,
           "Fold a list of joint-action strings from the initial state")
      .def("enumerate_complete_paths",
           [](const std::shared_ptr<extensional_model>& mm, std::size_t depth) {
             auto r = enumerate_complete_paths(mm, depth);
             return py::make_tuple(r.paths, r.truncated);
           },
           py::arg("max_depth"));

  py::class_<path>(m, "Path")
      .def_property_readonly("length", &path::length)
      .def_property_readonly("complete", &path::complete)
      .def("state_name",
           [](const path& p, std::size_t j) {
             return p.model->state_name(p.states.at(j));
           })
      .def("vals",
           [](const path& p, std::size_t j) {
             return p.model->vals_at(p.states.at(j));
           })
      .def("props",
           [](const path& p, std::size_t j) {
             return p.model->props_at(p.states.at(j));
           })
      .def_property_readonly("joints", [](const path& p) {
        std::vector<std::string> out;
        for (const auto& d : p.joints) out.push_back(joint_to_string(d));
        return out;
      });

  py::class_<gdl_artifacts>(m, "Artifacts")
      .def_readonly("model", &gdl_artifacts::model)
      .def_property_readonly("translated_path",
                             [](const gdl_artifacts& a) -> py::object {
                               if (!a.translated_path) return py::none();
                               return py::cast(*a.translated_path);
                             })
      .def_property_readonly("action_map",
                             [](const gdl_artifacts& a) {
                               py::dict out;
                               for (const auto& [flat, src] : a.action_map)
                                 out[py::str(flat)] = src.to_string();
                               return out;
                             })
      .def_readonly("order_props", &gdl_artifacts::order_props);

  py::class_<succinctness_report>(m, "SuccinctnessReport")
      .def_readonly("source_count", &succinctness_report::source_count)
      .def_readonly("translated_count", &succinctness_report::translated_count)
      .def_readonly("predicted_count", &succinctness_report::predicted_count)
      .def_readonly("match", &succinctness_report::match)
      .def_readonly("k", &succinctness_report::k)
      .def_readonly("kappa", &succinctness_report::kappa)
      .def_readonly("eta", &succinctness_report::eta)
      .def_readonly("mu", &succinctness_report::mu)
      .def_readonly("eligible_match", &succinctness_report::eligible_match)
      .def_readonly("theorem3_inequality",
                    &succinctness_report::theorem3_inequality)
      .def("__str__", &succinctness_report::to_key_values);

  // formulas
  m.def("parse_formula", [](const std::string& s) { return parse_formula(s); });
  m.def("desugar", &desugar);
  m.def("is_core", &is_core);
  m.def("is_gdl_fragment", &is_gdl_fragment, py::arg("f"),
        py::arg("core_only") = false);
  m.def("subformulas", &subformulas);
  m.def("count_atoms", &count_atoms);

  // games and models
  m.def("make_nim", [](const std::vector<std::int64_t>& gammas) {
    auto g = make_nim(gammas);
    return py::make_tuple(g.model, g.rules);
  });
  m.def("model_from_text",
        [](const std::string& text) { return parse_model_text(text); });
  m.def("load_model", &load_model);
  m.def("save_model", [](const std::shared_ptr<extensional_model>& mm,
                         const std::string& file) { save_model(*mm, file); });
  m.def("rules_from_text", [](const std::string& text) {
    rule_set rs;
    for (const auto& f : parse_rules_text(text)) rs.rules.push_back(desugar(f));
    return rs;
  });
  m.def("load_rules", &load_rules);
  m.def("save_rules", &save_rules);

  // evaluation
  m.def("holds", [](const path& p, std::size_t stage, const formula& f) {
    return holds(p, stage, f);
  });
  m.def("holds",
        [](const path& p, std::size_t stage, const std::string& text) {
          return holds(p, stage, parse_formula(text));
        });
  m.def("holds_globally_on_path",
        [](const path& p, const formula& f) {
          return holds_globally_on_path(p, f);
        });
  m.def("is_model_of",
        [](const std::shared_ptr<extensional_model>& mm, const rule_set& rs,
           std::size_t max_depth) {
          return verdict_to_dict(is_model_of(mm, rs, max_depth));
        },
        py::arg("model"), py::arg("rules"), py::arg("max_depth") = 16);

  // translation
  m.def("bounds_of_path", [](const path& p) -> py::object {
    auto b = bounds_of_path(p);
    if (!b) return py::none();
    return py::make_tuple(b->min, b->max);
  });
  m.def("actions_of_path", [](const path& p) {
    std::vector<std::string> out;
    for (const auto& a : actions_of_path(p)) out.push_back(a.to_string());
    return out;
  });
  m.def("flatten_action", [](const std::string& text) {
    return flatten_action(parse_ground_action(text));
  });
  m.def("translate_model_path", &translate_model_path);
  m.def("translate_path", &translate_path);
  m.def("translate_formula_path",
        [](const formula& f, const path& p, std::size_t stage,
           gdl_artifacts& art) {
          return translate_formula_path(f, p, stage, art);
        });
  m.def("is_finite_model",
        [](const std::shared_ptr<extensional_model>& mm, std::int64_t zmin,
           std::int64_t zmax) { return is_finite_model(*mm, {zmin, zmax}); });
  m.def("translate_model_complete",
        [](const std::shared_ptr<extensional_model>& mm, std::int64_t zmin,
           std::int64_t zmax) {
          return translate_model_complete(mm, {zmin, zmax});
        });
  m.def("translate_path_complete", &translate_path_complete);
  m.def("is_bounded_formula",
        [](const formula& f, const std::shared_ptr<extensional_model>& mm,
           std::int64_t zmin, std::int64_t zmax) {
          return is_bounded_formula(f, mm->signature(), {zmin, zmax});
        });
  m.def("remove_var",
        [](const formula& f, const std::shared_ptr<extensional_model>& mm,
           std::int64_t zmin, std::int64_t zmax, bool sugar) {
          return remove_var(f, mm->signature(), {zmin, zmax}, sugar);
        },
        py::arg("f"), py::arg("model"), py::arg("zmin"), py::arg("zmax"),
        py::arg("sugar_disjunction") = true);
  m.def("translate_formula_complete",
        [](const formula& f, const std::shared_ptr<extensional_model>& mm,
           std::int64_t zmin, std::int64_t zmax, gdl_artifacts& art) {
          return translate_formula_complete(f, mm->signature(), {zmin, zmax},
                                            art);
        });
  m.def("embed_gdl", &embed_gdl);
  m.def("action_map_to_text", &action_map_to_text);

  // analysis
  m.def("count_description", &count_description);
  m.def("analyze_path_mode", &analyze_path_mode, py::arg("rules"),
        py::arg("path"), py::arg("stage") = 0);
  m.def("analyze_complete_mode",
        [](const rule_set& rs, const std::shared_ptr<extensional_model>& mm,
           std::int64_t zmin, std::int64_t zmax) {
          return analyze_complete_mode(rs, mm->signature(), {zmin, zmax});
        });
}
