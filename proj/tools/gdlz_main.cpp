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

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gdlz/analysis.hpp"
#include "gdlz/eval.hpp"
#include "gdlz/model_io.hpp"
#include "gdlz/nim.hpp"
#include "gdlz/parse.hpp"
#include "gdlz/translate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;

bool use_color() {
  const char* env = std::getenv("GDLZ_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(fileno(stdout));
}

void print_result(const std::string& verdict, bool good) {
  if (use_color())
    std::cout << "RESULT " << (good ? "\033[32m" : "\033[31m") << verdict
              << "\033[0m\n";
  else
    std::cout << "RESULT " << verdict << "\n";
}

std::vector<std::int64_t> parse_heaps(const std::string& spec) {
  std::vector<std::int64_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw gdlz::io_error("bad --heaps list");
    out.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

void print_state_line(const gdlz::st_model& m, gdlz::state_id w,
                      std::size_t stage) {
  std::cout << "STAGE " << stage << " state=" << m.state_name(w) << " props=";
  bool first = true;
  for (const auto& p : m.props_at(w)) {
    if (!first) std::cout << ',';
    std::cout << p;
    first = false;
  }
  std::cout << " vals=";
  const auto& vs = m.vals_at(w);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << vs[i];
  }
  if (m.is_terminal(w)) std::cout << " terminal";
  std::cout << "\n";
}

std::string winners_of(const gdlz::st_model& m, gdlz::state_id w) {
  std::string out;
  for (const auto& r : m.signature().agents)
    if (m.is_goal(r, w)) {
      if (!out.empty()) out += ", ";
      out += r;
    }
  return out.empty() ? "none" : out;
}

void print_final_line(const gdlz::path& p) {
  const auto& m = *p.model;
  if (p.complete())
    std::cout << "complete; wins: " << winners_of(m, p.states.back()) << "\n";
  else
    std::cout << "incomplete\n";
}

int run_trace(const gdlz::path& p) {
  const auto& m = *p.model;
  for (std::size_t j = 0; j <= p.length(); ++j) {
    print_state_line(m, p.states[j], j);
    if (j < p.length())
      std::cout << "DOES " << gdlz::joint_to_string(p.joints[j]) << "\n";
  }
  print_final_line(p);
  return kExitOk;
}

int cmd_parse(const std::string& formula_text, const std::string& rules_file,
              const std::string& signature_file) {
  std::optional<gdlz::game_signature> sig;
  if (!signature_file.empty())
    sig = gdlz::load_model(signature_file)->signature();
  if (!formula_text.empty()) {
    gdlz::formula f = gdlz::parse_formula(formula_text);
    std::cout << f.to_string() << "\n";
    if (sig) {
      auto issues = gdlz::check_formula(*sig, f);
      for (const auto& i : issues) std::cout << "conformance: " << i << "\n";
      if (!issues.empty()) return kExitInput;
    }
    return kExitOk;
  }
  if (rules_file.empty())
    throw gdlz::io_error("parse needs a formula or --rules");
  auto rules = gdlz::parse_rules_text(gdlz::read_file(rules_file));
  bool all_ok = true;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::cout << "rule " << i << ": ";
    std::vector<std::string> issues;
    if (sig) issues = gdlz::check_formula(*sig, rules[i]);
    if (issues.empty()) {
      std::cout << "ok  " << rules[i].to_string() << "\n";
    } else {
      all_ok = false;
      std::cout << issues[0] << "\n";
      for (std::size_t k = 1; k < issues.size(); ++k)
        std::cout << "        " << issues[k] << "\n";
    }
  }
  return all_ok ? kExitOk : kExitInput;
}

int cmd_nim(const std::string& heaps_spec, const std::string& prefix) {
  auto game = gdlz::make_nim(parse_heaps(heaps_spec));
  gdlz::save_model(*game.model, prefix + ".model");
  gdlz::save_rules(game.rules, prefix + ".rules");
  std::cout << "wrote " << prefix << ".model (" << game.model->state_count()
            << " states)\n";
  std::cout << "wrote " << prefix << ".rules (" << game.rules.rules.size()
            << " rules)\n";
  return kExitOk;
}

int cmd_run_interactive(const std::shared_ptr<gdlz::extensional_model>& model,
                        const std::optional<gdlz::rule_set>& rules) {
  std::vector<gdlz::joint_action> joints;
  gdlz::path p = gdlz::build_path(model, joints);
  for (;;) {
    gdlz::state_id w = p.states.back();
    print_state_line(*model, w, p.length());
    std::cout << "legal:";
    for (const auto& a : model->legal_actions(w))
      std::cout << ' ' << a.to_string();
    std::cout << "\n";
    if (rules) {
      for (std::size_t i = 0; i < rules->rules.size(); ++i)
        std::cout << "rule " << i << ": "
                  << (holds(p, p.length(), rules->rules[i]) ? "true" : "false")
                  << "\n";
    }
    if (model->is_terminal(w)) break;
    std::cout << "> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line == "quit" || line == "exit")
      break;
    if (line.empty()) continue;
    try {
      gdlz::joint_action d = gdlz::parse_joint_action(line, model->signature());
      joints.push_back(std::move(d));
      p = gdlz::build_path(model, joints);
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
      joints.resize(p.length());  // drop whatever this line added
    }
  }
  print_final_line(p);
  return kExitOk;
}

int cmd_run(const std::string& model_file, const std::string& actions_file,
            bool enumerate, std::size_t max_depth, bool interactive,
            const std::string& rules_file) {
  const int modes = (!actions_file.empty() ? 1 : 0) + (enumerate ? 1 : 0) +
                    (interactive ? 1 : 0);
  if (modes > 1)
    throw gdlz::io_error(
        "--actions, --enumerate and --interactive are mutually exclusive");
  auto model = gdlz::load_model(model_file);
  std::optional<gdlz::rule_set> rules;
  if (!rules_file.empty()) rules = gdlz::load_rules(rules_file);
  if (interactive) return cmd_run_interactive(model, rules);
  if (enumerate) {
    auto result = gdlz::enumerate_complete_paths(model, max_depth);
    for (std::size_t i = 0; i < result.paths.size(); ++i) {
      std::cout << "PATH " << i << ": ";
      const auto& p = result.paths[i];
      for (std::size_t j = 0; j < p.joints.size(); ++j) {
        if (j) std::cout << " | ";
        std::cout << gdlz::joint_to_string(p.joints[j]);
      }
      std::cout << "\n";
    }
    std::cout << result.paths.size() << " complete paths";
    if (result.truncated) std::cout << " (truncated at depth " << max_depth << ")";
    std::cout << "\n";
    return kExitOk;
  }
  if (actions_file.empty())
    throw gdlz::io_error("run needs --actions, --enumerate or --interactive");
  auto joints = gdlz::load_joint_actions(actions_file, model->signature());
  gdlz::path p = gdlz::build_path(model, joints);
  return run_trace(p);
}

int cmd_check(const std::string& model_file, const std::string& path_file,
              const std::string& formula_text, std::optional<std::size_t> stage,
              bool global, const std::string& is_model_of_rules,
              std::size_t max_depth) {
  if (!formula_text.empty() && !is_model_of_rules.empty())
    throw gdlz::io_error("--formula and --is-model-of are mutually exclusive");
  if (global && stage)
    throw gdlz::io_error("--global and --stage are mutually exclusive");
  auto model = gdlz::load_model(model_file);
  if (!is_model_of_rules.empty()) {
    auto rules = gdlz::load_rules(is_model_of_rules);
    auto verdict = gdlz::is_model_of(model, rules, max_depth);
    print_result(verdict.name(),
                 verdict.result == gdlz::model_of_verdict::status::holds);
    std::cout << "paths checked: " << verdict.paths_checked << "\n";
    if (verdict.counterexample) {
      const auto& ce = *verdict.counterexample;
      std::cout << "counterexample: rule " << ce.rule_index << " at stage "
                << ce.stage << "\n";
      std::cout << "  rule: " << rules.rules[ce.rule_index].to_string() << "\n";
      std::cout << "  path:";
      for (const auto& d : ce.witness.joints)
        std::cout << ' ' << gdlz::joint_to_string(d);
      std::cout << "\n";
    }
    return verdict.result == gdlz::model_of_verdict::status::holds
               ? kExitOk
               : kExitSemantic;
  }
  if (formula_text.empty())
    throw gdlz::io_error("check needs --formula or --is-model-of");
  std::vector<gdlz::joint_action> joints;
  if (!path_file.empty())
    joints = gdlz::load_joint_actions(path_file, model->signature());
  gdlz::path p = gdlz::build_path(model, joints);
  gdlz::formula f = gdlz::parse_formula(formula_text);
  bool result = global ? gdlz::holds_globally_on_path(p, f)
                       : gdlz::holds(p, stage.value_or(0), f);
  print_result(result ? "true" : "false", result);
  return result ? kExitOk : kExitSemantic;
}

int cmd_translate(const std::string& mode, const std::string& model_file,
                  const std::string& path_file,
                  std::optional<std::int64_t> zmin,
                  std::optional<std::int64_t> zmax,
                  const std::string& formula_text,
                  const std::string& rules_file, std::size_t stage,
                  const std::string& prefix) {
  const bool path_mode = mode == "path";
  if (path_mode && (zmin || zmax))
    throw gdlz::io_error("--zmin/--zmax only apply to complete mode");
  if (!path_mode && !path_file.empty())
    throw gdlz::io_error("--path only applies to path mode");
  auto model = gdlz::load_model(model_file);
  gdlz::gdl_artifacts art;
  gdlz::path source_path;
  if (path_mode) {
    if (path_file.empty()) throw gdlz::io_error("path mode needs --path");
    auto joints = gdlz::load_joint_actions(path_file, model->signature());
    source_path = gdlz::build_path(model, joints);
    art = gdlz::translate_model_path(source_path);
  } else {
    if (!zmin || !zmax)
      throw gdlz::io_error("complete mode needs --zmin and --zmax");
    art = gdlz::translate_model_complete(model, {*zmin, *zmax});
  }
  if (art.bounds && art.bounds->max - art.bounds->min > 10000)
    std::cerr << "warning: bounds span " << (art.bounds->max - art.bounds->min)
              << " values; the numeric-order vocabulary is quadratic in it\n";

  // Formulas first: their translation may extend the vocabulary that the
  // model file has to declare.
  std::optional<gdlz::rule_set> translated_rules;
  if (!rules_file.empty()) {
    auto rules = gdlz::load_rules(rules_file);
    translated_rules = gdlz::rule_set{rules.name, {}};
    for (const auto& r : rules.rules)
      translated_rules->rules.push_back(
          path_mode
              ? gdlz::translate_formula_path(r, source_path, stage, art)
              : gdlz::translate_formula_complete(r, model->signature(),
                                                 {*zmin, *zmax}, art));
  }
  std::optional<gdlz::formula> translated_formula;
  if (!formula_text.empty()) {
    gdlz::formula f = gdlz::desugar(gdlz::parse_formula(formula_text));
    translated_formula =
        path_mode ? gdlz::translate_formula_path(f, source_path, stage, art)
                  : gdlz::translate_formula_complete(f, model->signature(),
                                                     {*zmin, *zmax}, art);
  }

  gdlz::save_model(*art.model, prefix + ".model");
  std::cout << "wrote " << prefix << ".model\n";
  gdlz::write_file(prefix + ".actionmap.tsv", gdlz::action_map_to_text(art));
  std::cout << "wrote " << prefix << ".actionmap.tsv\n";
  if (art.translated_path) {
    gdlz::save_joint_actions(art.translated_path->joints, prefix + ".path");
    std::cout << "wrote " << prefix << ".path\n";
  }
  if (translated_rules) {
    gdlz::save_rules(*translated_rules, prefix + ".rules");
    std::cout << "wrote " << prefix << ".rules\n";
  }
  if (translated_formula)
    std::cout << translated_formula->to_string() << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& rules_file, const std::string& mode,
                const std::string& model_file, const std::string& path_file,
                std::size_t stage, std::optional<std::int64_t> zmin,
                std::optional<std::int64_t> zmax) {
  auto model = gdlz::load_model(model_file);
  auto rules = gdlz::load_rules(rules_file);
  gdlz::succinctness_report rep;
  if (mode == "path") {
    if (path_file.empty()) throw gdlz::io_error("path mode needs --path");
    auto joints = gdlz::load_joint_actions(path_file, model->signature());
    rep = gdlz::analyze_path_mode(rules, gdlz::build_path(model, joints), stage);
  } else {
    if (!zmin || !zmax)
      throw gdlz::io_error("complete mode needs --zmin and --zmax");
    rep = gdlz::analyze_complete_mode(rules, model->signature(), {*zmin, *zmax});
  }
  std::cout << rep.to_key_values();
  std::cout << rep.to_table();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"game descriptions with integers: evaluate, check, translate"};
  app.require_subcommand(1);

  // parse
  std::string formula_text, p_rules, p_signature;
  auto* parse = app.add_subcommand("parse", "parse and echo formulas");
  parse->add_option("formula", formula_text, "formula text");
  parse->add_option("--rules", p_rules, "rule file, one formula per line");
  parse->add_option("--signature", p_signature,
                    "model file supplying the signature for conformance");

  // nim
  std::string heaps, nim_prefix = "nim";
  auto* nim = app.add_subcommand("nim", "generate a take-away game");
  nim->add_option("--heaps", heaps, "comma list of heap sizes")->required();
  nim->add_option("--out-prefix", nim_prefix, "output file prefix");

  // run
  std::string r_model, r_actions, r_rules;
  bool r_enumerate = false, r_interactive = false;
  std::size_t r_depth = 16;
  auto* run = app.add_subcommand("run", "replay or enumerate paths");
  run->add_option("--model", r_model, "model file")->required();
  run->add_option("--actions", r_actions, "joint-action file to replay");
  run->add_flag("--enumerate", r_enumerate, "list all complete paths");
  run->add_option("--max-depth", r_depth, "enumeration depth bound");
  run->add_flag("--interactive", r_interactive, "read joint actions from stdin");
  run->add_option("--rules", r_rules, "rules to report verdicts for");

  // check
  std::string c_model, c_path, c_formula, c_rules;
  std::optional<std::size_t> c_stage;
  bool c_global = false;
  std::size_t c_depth = 16;
  auto* check = app.add_subcommand("check", "evaluate formulas on a path");
  check->add_option("--model", c_model, "model file")->required();
  check->add_option("--path", c_path, "joint-action file");
  check->add_option("--formula", c_formula, "formula text");
  check->add_option("--stage", c_stage, "stage to evaluate at (default 0)");
  check->add_flag("--global", c_global, "check all stages of the path");
  check->add_option("--is-model-of", c_rules,
                    "rule file to check over all complete paths");
  check->add_option("--max-depth", c_depth, "enumeration depth bound");

  // translate
  std::string t_mode, t_model, t_path, t_formula, t_rules, t_prefix = "out";
  std::optional<std::int64_t> t_zmin, t_zmax;
  std::size_t t_stage = 0;
  auto* translate = app.add_subcommand("translate", "translate away integers");
  translate->add_option("--mode", t_mode, "path or complete")
      ->required()
      ->check(CLI::IsMember({"path", "complete"}));
  translate->add_option("--model", t_model, "model file")->required();
  translate->add_option("--path", t_path, "joint-action file (path mode)");
  translate->add_option("--zmin", t_zmin, "lower bound (complete mode)");
  translate->add_option("--zmax", t_zmax, "upper bound (complete mode)");
  translate->add_option("--formula", t_formula, "single formula to translate");
  translate->add_option("--rules", t_rules, "rule file to translate");
  translate->add_option("--stage", t_stage, "stage for path-mode formulas");
  translate->add_option("--out-prefix", t_prefix, "output file prefix");

  // analyze
  std::string a_rules, a_mode, a_model, a_path;
  std::size_t a_stage = 0;
  std::optional<std::int64_t> a_zmin, a_zmax;
  auto* analyze = app.add_subcommand("analyze", "description size report");
  analyze->add_option("--rules", a_rules, "rule file")->required();
  analyze->add_option("--mode", a_mode, "path or complete")
      ->required()
      ->check(CLI::IsMember({"path", "complete"}));
  analyze->add_option("--model", a_model, "model file")->required();
  analyze->add_option("--path", a_path, "joint-action file (path mode)");
  analyze->add_option("--stage", a_stage, "stage for path mode");
  analyze->add_option("--zmin", a_zmin, "lower bound (complete mode)");
  analyze->add_option("--zmax", a_zmax, "upper bound (complete mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return cmd_parse(formula_text, p_rules, p_signature);
    if (*nim) return cmd_nim(heaps, nim_prefix);
    if (*run)
      return cmd_run(r_model, r_actions, r_enumerate, r_depth, r_interactive,
                     r_rules);
    if (*check)
      return cmd_check(c_model, c_path, c_formula, c_stage, c_global, c_rules,
                       c_depth);
    if (*translate)
      return cmd_translate(t_mode, t_model, t_path, t_zmin, t_zmax, t_formula,
                           t_rules, t_stage, t_prefix);
    if (*analyze)
      return cmd_analyze(a_rules, a_mode, a_model, a_path, a_stage, a_zmin,
                         a_zmax);
  } catch (const gdlz::parse_error& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gdlz::path_error& e) {
    std::cerr << "path error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const gdlz::io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gdlz::translate_error& e) {
    std::cerr << "translation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gdlz::eval_error& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
