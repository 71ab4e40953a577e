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

#include "gdlz/eval.hpp"

#include <unordered_map>

namespace gdlz {

namespace {

void check_terms(const game_signature& sig, const std::vector<num_term>& ts,
                 const std::string& where, std::vector<std::string>& out) {
  for (const auto& t : ts) {
    std::vector<std::string> vars;
    t.collect_variables(vars);
    for (const auto& x : vars)
      if (!sig.var_index(x))
        out.push_back(where + ": undeclared variable " + x);
  }
}

void check_action_atom(const game_signature& sig, const formula& f,
                       std::vector<std::string>& out) {
  const std::string head =
      f.node_kind() == formula::kind::legal ? "legal" : "does";
  if (!sig.has_agent(f.agent())) {
    out.push_back(head + ": unknown agent " + f.agent());
    return;
  }
  const action_schema* s = sig.find_schema(f.agent(), f.action_name());
  if (!s) {
    out.push_back(head + ": agent " + f.agent() + " has no action " +
                  f.action_name());
  } else if (s->arity != f.action_args().size()) {
    out.push_back(head + ": action " + f.action_name() + "^" + f.agent() +
                  " takes " + std::to_string(s->arity) + " arguments, got " +
                  std::to_string(f.action_args().size()));
  }
  check_terms(sig, f.action_args(), head + "(" + f.action_name() + ")", out);
}

void check_formula_rec(const game_signature& sig, const formula& f,
                       std::vector<std::string>& out) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::prop:
      if (!sig.props.count(f.prop_key()))
        out.push_back("undeclared proposition " + f.prop_key());
      return;
    case kind::initial:
    case kind::terminal:
    case kind::verum:
    case kind::falsum:
      return;
    case kind::wins:
      if (!sig.has_agent(f.agent()))
        out.push_back("wins: unknown agent " + f.agent());
      return;
    case kind::legal:
    case kind::does:
      check_action_atom(sig, f, out);
      return;
    case kind::vals:
      if (f.items().size() != sig.vars.size())
        out.push_back("vals carries " + std::to_string(f.items().size()) +
                      " terms but the signature declares " +
                      std::to_string(sig.vars.size()) + " variables");
      check_terms(sig, f.items(), "vals", out);
      return;
    default:
      if (f.is_comparison()) {
        check_terms(sig, {f.term_lhs(), f.term_rhs()}, "comparison", out);
        return;
      }
      if (f.is_unary()) {
        check_formula_rec(sig, f.child(), out);
        return;
      }
      check_formula_rec(sig, f.lhs(), out);
      check_formula_rec(sig, f.rhs(), out);
  }
}

}  // namespace

std::vector<std::string> check_formula(const game_signature& sig,
                                       const formula& f) {
  std::vector<std::string> out;
  check_formula_rec(sig, f, out);
  return out;
}

std::vector<std::string> check_ground_action(const game_signature& sig,
                                             const ground_action& a) {
  std::vector<std::string> out;
  if (!sig.has_agent(a.agent)) {
    out.push_back("unknown agent " + a.agent);
    return out;
  }
  const action_schema* s = sig.find_schema(a.agent, a.name);
  if (!s)
    out.push_back("agent " + a.agent + " has no action " + a.name);
  else if (s->arity != a.args.size())
    out.push_back("action " + a.to_string() + " has arity " +
                  std::to_string(a.args.size()) + ", declared " +
                  std::to_string(s->arity));
  return out;
}

std::int64_t eval_term(const st_model& m, state_id w, const num_term& z) {
  switch (z.op()) {
    case num_term::kind::literal:
      return z.value();
    case num_term::kind::variable: {
      auto i = m.signature().var_index(z.var_name());
      if (!i) throw eval_error("undeclared variable " + z.var_name());
      return m.vals_at(w)[*i];
    }
    default: {
      const std::int64_t a = eval_term(m, w, z.lhs());
      const std::int64_t b = eval_term(m, w, z.rhs());
      std::int64_t r = 0;
      switch (z.op()) {
        case num_term::kind::add:
          if (__builtin_add_overflow(a, b, &r))
            throw eval_error("overflow in " + z.to_string());
          return r;
        case num_term::kind::sub:
          if (__builtin_sub_overflow(a, b, &r))
            throw eval_error("overflow in " + z.to_string());
          return r;
        case num_term::kind::min:
          return a < b ? a : b;
        default:
          return a > b ? a : b;
      }
    }
  }
}

namespace {

// One memo table per stage, keyed by structural formula identity.
struct eval_session {
  const path& p;
  std::vector<std::unordered_map<formula, bool, formula_hasher>> memo;

  explicit eval_session(const path& pp) : p(pp), memo(pp.length() + 1) {}

  ground_action resolve_action(const formula& f, std::size_t stage) {
    ground_action a;
    a.agent = f.agent();
    a.name = f.action_name();
    for (const auto& t : f.action_args())
      a.args.push_back(eval_term(*p.model, p.states[stage], t));
    return a;
  }

  bool eval(std::size_t stage, const formula& f) {
    auto& table = memo[stage];
    if (auto it = table.find(f); it != table.end()) return it->second;
    bool v = compute(stage, f);
    table.emplace(f, v);
    return v;
  }

  bool compute(std::size_t stage, const formula& f) {
    using kind = formula::kind;
    const st_model& m = *p.model;
    const state_id w = p.states[stage];
    switch (f.node_kind()) {
      case kind::prop:
        return m.props_at(w).count(f.prop_key()) > 0;
      case kind::initial:
        return w == m.initial_state();
      case kind::terminal:
        return m.is_terminal(w);
      case kind::wins:
        return m.is_goal(f.agent(), w);
      case kind::legal:
        return m.is_legal(w, resolve_action(f, stage));
      case kind::does: {
        if (stage >= p.length()) return false;  // no action at the last stage
        const auto& d = p.joints[stage];
        const std::size_t i = m.signature().agent_index(f.agent());
        return d[i] == resolve_action(f, stage);
      }
      case kind::negation:
        return !eval(stage, f.child());
      case kind::conjunction:
        return eval(stage, f.lhs()) && eval(stage, f.rhs());
      case kind::next_state:
        // Vacuously true at the last stage.
        return stage >= p.length() ? true : eval(stage + 1, f.child());
      case kind::greater:
        return eval_term(m, w, f.term_lhs()) > eval_term(m, w, f.term_rhs());
      case kind::less:
        return eval_term(m, w, f.term_lhs()) < eval_term(m, w, f.term_rhs());
      case kind::equal:
        return eval_term(m, w, f.term_lhs()) == eval_term(m, w, f.term_rhs());
      case kind::vals: {
        const auto& tuple = m.vals_at(w);
        if (f.items().size() != tuple.size()) return false;
        for (std::size_t i = 0; i < tuple.size(); ++i)
          if (eval_term(m, w, f.items()[i]) != tuple[i]) return false;
        return true;
      }
      default:
        throw eval_error("sugar node survived desugaring");
    }
  }
};

}  // namespace

bool holds(const path& p, std::size_t stage, const formula& f) {
  if (!p.model) throw eval_error("path has no model");
  if (stage > p.length())
    throw eval_error("stage " + std::to_string(stage) +
                     " out of range for a path of length " +
                     std::to_string(p.length()));
  formula core = is_core(f) ? f : desugar(f);
  auto issues = check_formula(p.model->signature(), core);
  if (!issues.empty()) throw eval_error("formula does not conform: " + issues[0]);
  eval_session session(p);
  return session.eval(stage, core);
}

bool holds_globally_on_path(const path& p, const formula& f) {
  if (!p.model) throw eval_error("path has no model");
  formula core = is_core(f) ? f : desugar(f);
  auto issues = check_formula(p.model->signature(), core);
  if (!issues.empty()) throw eval_error("formula does not conform: " + issues[0]);
  eval_session session(p);
  for (std::size_t j = 0; j <= p.length(); ++j)
    if (!session.eval(j, core)) return false;
  return true;
}

model_of_verdict is_model_of(const std::shared_ptr<const st_model>& m,
                             const rule_set& rules, std::size_t max_depth) {
  std::vector<formula> cores;
  cores.reserve(rules.rules.size());
  for (const auto& r : rules.rules) {
    cores.push_back(is_core(r) ? r : desugar(r));
    auto issues = check_formula(m->signature(), cores.back());
    if (!issues.empty())
      throw eval_error("rule does not conform: " + issues[0]);
  }
  model_of_verdict verdict;
  bool truncated = false;
  bool failed = false;
  for_each_complete_path(
      m, max_depth,
      [&](const path& p) {
        if (failed) return;
        ++verdict.paths_checked;
        eval_session session(p);
        for (std::size_t i = 0; i < cores.size(); ++i) {
          for (std::size_t j = 0; j <= p.length(); ++j) {
            if (!session.eval(j, cores[i])) {
              failed = true;
              verdict.result = model_of_verdict::status::fails;
              verdict.counterexample = {p, j, i};
              return;
            }
          }
        }
      },
      &truncated);
  if (!failed)
    verdict.result = truncated ? model_of_verdict::status::inconclusive
                               : model_of_verdict::status::holds;
  return verdict;
}

}  // namespace gdlz
