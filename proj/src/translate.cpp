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

#include "gdlz/translate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gdlz/eval.hpp"

namespace gdlz {

namespace {

void widen(std::optional<path_bounds>& b, std::int64_t v) {
  if (!b) {
    b = path_bounds{v, v};
    return;
  }
  b->min = std::min(b->min, v);
  b->max = std::max(b->max, v);
}

std::string int_name(std::int64_t v) { return std::to_string(v); }

std::string relation_prop(const char* rel, std::int64_t a, std::int64_t b) {
  return std::string(rel) + "(" + int_name(a) + "," + int_name(b) + ")";
}

// The numeric-order propositions true in every translated state.
std::vector<std::string> build_order_props(const std::optional<path_bounds>& b) {
  if (!b) return {relation_prop("equal", 0, 0)};
  std::vector<std::string> out;
  for (std::int64_t z = b->min; z < b->max; ++z) {
    out.push_back(relation_prop("succ", z, z + 1));
    out.push_back(relation_prop("prec", z + 1, z));
  }
  for (std::int64_t z = b->min; z <= b->max; ++z)
    out.push_back(relation_prop("equal", z, z));
  for (std::int64_t z1 = b->min; z1 <= b->max; ++z1)
    for (std::int64_t z2 = z1 + 1; z2 <= b->max; ++z2) {
      out.push_back(relation_prop("smaller", z1, z2));
      out.push_back(relation_prop("bigger", z2, z1));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// The declared proposition vocabulary of a translated signature: the
// source propositions, every order relation over the range, and a value
// proposition per variable and range element.
std::set<std::string> build_translated_props(
    const game_signature& src, const std::optional<path_bounds>& b) {
  std::set<std::string> props = src.props;
  if (!b) {
    props.insert(relation_prop("equal", 0, 0));
    return props;
  }
  static const char* rels[] = {"smaller", "bigger", "equal", "succ", "prec"};
  for (const char* rel : rels)
    for (std::int64_t z1 = b->min; z1 <= b->max; ++z1)
      for (std::int64_t z2 = b->min; z2 <= b->max; ++z2)
        props.insert(relation_prop(rel, z1, z2));
  for (const auto& x : src.vars)
    for (std::int64_t q = b->min; q <= b->max; ++q)
      props.insert(x + "(" + int_name(q) + ")");
  return props;
}

std::set<std::string> translated_state_props(
    const st_model& src, state_id w, const std::vector<std::string>& order) {
  std::set<std::string> props = src.props_at(w);
  props.insert(order.begin(), order.end());
  const auto& vars = src.signature().vars;
  const auto& vals = src.vals_at(w);
  for (std::size_t i = 0; i < vars.size(); ++i)
    props.insert(vars[i] + "(" + int_name(vals[i]) + ")");
  return props;
}

formula tautology_atom(const gdl_artifacts& art) {
  const std::int64_t z = art.bounds ? art.bounds->min : 0;
  return formula::prop("equal", {int_name(z), int_name(z)});
}

}  // namespace

std::optional<path_bounds> bounds_of_path(const path& p) {
  std::optional<path_bounds> b;
  for (const auto& w : p.states)
    for (std::int64_t v : p.model->vals_at(w)) widen(b, v);
  for (const auto& d : p.joints)
    for (const auto& a : d)
      for (std::int64_t v : a.args) widen(b, v);
  return b;
}

std::vector<ground_action> actions_of_path(const path& p) {
  std::set<ground_action> out;
  for (const auto& d : p.joints) out.insert(d.begin(), d.end());
  return {out.begin(), out.end()};
}

std::string flatten_action(const ground_action& a) {
  std::string out = a.name + "__" + a.agent + "__";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += '_';
    if (a.args[i] < 0)
      out += "m" + std::to_string(-a.args[i]);
    else
      out += std::to_string(a.args[i]);
  }
  return out;
}

std::string gdl_artifacts::ensure_action(const ground_action& a) {
  std::string flat = flatten_action(a);
  auto it = action_map.find(flat);
  if (it == action_map.end()) {
    action_map.emplace(flat, a);
    model->declare_action(a.agent, flat, 0);
  } else if (it->second != a) {
    // Names containing the separator can alias; refuse rather than merge.
    throw translate_error("flat name collision: " + a.to_string() + " and " +
                          it->second.to_string() + " both map to " + flat);
  }
  return flat;
}

void gdl_artifacts::ensure_prop(const std::string& canonical_name) {
  model->declare_prop(canonical_name);
}

// ---------------------------------------------------------------------------
// path-restricted translation

gdl_artifacts translate_model_path(const path& p) {
  if (!p.model) throw translate_error("path has no model");
  if (!p.complete())
    throw translate_error(
        "path-restricted translation needs a complete path (the translated "
        "terminal set is the path's endpoint)");
  const st_model& src = *p.model;
  gdl_artifacts art;
  art.bounds = bounds_of_path(p);
  art.order_props = build_order_props(art.bounds);

  game_signature sig;
  sig.agents = src.signature().agents;
  sig.props = build_translated_props(src.signature(), art.bounds);
  art.model = std::make_shared<extensional_model>(sig);

  // States of the path, first occurrence order, source names kept.
  for (state_id w : p.states)
    if (!art.model->find_state(src.state_name(w)))
      art.model->add_state(src.state_name(w),
                           translated_state_props(src, w, art.order_props), {});
  auto image = [&](state_id w) {
    return *art.model->find_state(src.state_name(w));
  };
  art.model->set_initial(image(p.states.front()));
  art.model->mark_terminal(image(p.states.back()));
  for (const auto& r : sig.agents)
    if (src.is_goal(r, p.states.back()))
      art.model->add_goal(r, image(p.states.back()));

  path tp;
  tp.model = art.model;
  tp.states.push_back(image(p.states.front()));
  for (std::size_t j = 0; j < p.joints.size(); ++j) {
    joint_action flat_joint;
    for (const auto& a : p.joints[j]) {
      std::string flat = art.ensure_action(a);
      flat_joint.push_back({a.agent, flat, {}});
      art.model->add_legal(image(p.states[j]), flat_joint.back());
    }
    const auto& updates = art.model->updates();
    auto key = std::make_pair(image(p.states[j]), flat_joint);
    auto it = updates.find(key);
    if (it != updates.end() && it->second != image(p.states[j + 1]))
      throw translate_error(
          "path revisits state " + src.state_name(p.states[j]) +
          " with conflicting updates; the restricted translation is not "
          "well-defined for it");
    art.model->add_update(image(p.states[j]), flat_joint,
                          image(p.states[j + 1]));
    tp.states.push_back(image(p.states[j + 1]));
    tp.joints.push_back(std::move(flat_joint));
  }
  art.translated_path = std::move(tp);
  return art;
}

path translate_path(const path& p, const gdl_artifacts& art) {
  if (!p.model) throw translate_error("path has no model");
  path tp;
  tp.model = art.model;
  for (state_id w : p.states) {
    auto img = art.model->find_state(p.model->state_name(w));
    if (!img)
      throw translate_error("state " + p.model->state_name(w) +
                            " has no image in the translated model");
    tp.states.push_back(*img);
  }
  for (const auto& d : p.joints) {
    joint_action flat_joint;
    for (const auto& a : d) {
      auto it = art.action_map.find(flatten_action(a));
      if (it == art.action_map.end())
        throw translate_error("action " + a.to_string() +
                              " has no image in the translated model");
      flat_joint.push_back({a.agent, it->first, {}});
    }
    tp.joints.push_back(std::move(flat_joint));
  }
  return tp;
}

namespace {

ground_action evaluate_action_args(const formula& f, const st_model& m,
                                   state_id w) {
  ground_action a;
  a.agent = f.agent();
  a.name = f.action_name();
  for (const auto& t : f.action_args()) a.args.push_back(eval_term(m, w, t));
  return a;
}

formula translate_path_rec(const formula& f, const path& p, std::size_t stage,
                           gdl_artifacts& art,
                           formula_translation_stats* stats) {
  using kind = formula::kind;
  const st_model& m = *p.model;
  const state_id w = p.states[stage];
  switch (f.node_kind()) {
    case kind::prop:
    case kind::initial:
    case kind::terminal:
    case kind::wins:
      return f;
    case kind::negation:
      return formula::negation(translate_path_rec(f.child(), p, stage, art, stats));
    case kind::conjunction:
      return formula::conjunction(
          translate_path_rec(f.lhs(), p, stage, art, stats),
          translate_path_rec(f.rhs(), p, stage, art, stats));
    case kind::next_state: {
      if (stage >= p.length()) {
        // The source formula is vacuously true here; substitute an atom
        // that is true in every translated state.
        if (stats) stats->used_last_stage_next = true;
        return tautology_atom(art);
      }
      return formula::next_state(
          translate_path_rec(f.child(), p, stage + 1, art, stats));
    }
    case kind::legal: {
      ground_action a = evaluate_action_args(f, m, w);
      std::string flat = art.ensure_action(a);
      formula atom = formula::legal(a.agent, flat, {});
      const std::size_t i = m.signature().agent_index(a.agent);
      if (stage < p.length() && p.joints[stage][i] == a) return atom;
      if (stats) stats->used_legal_else = true;
      return formula::negation(atom);
    }
    case kind::does: {
      ground_action a = evaluate_action_args(f, m, w);
      return formula::does(a.agent, art.ensure_action(a), {});
    }
    case kind::vals: {
      const auto& vars = m.signature().vars;
      if (vars.empty()) return tautology_atom(art);
      std::vector<formula> parts;
      for (std::size_t i = 0; i < f.items().size(); ++i) {
        std::int64_t v = eval_term(m, w, f.items()[i]);
        formula atom = formula::prop(vars[i], {int_name(v)});
        art.ensure_prop(atom.prop_key());
        parts.push_back(std::move(atom));
      }
      return formula::conjoin(parts);
    }
    case kind::less:
    case kind::greater:
    case kind::equal: {
      const std::int64_t v1 = eval_term(m, w, f.term_lhs());
      const std::int64_t v2 = eval_term(m, w, f.term_rhs());
      const char* rel = f.node_kind() == kind::less      ? "smaller"
                        : f.node_kind() == kind::greater ? "bigger"
                                                         : "equal";
      formula atom = formula::prop(rel, {int_name(v1), int_name(v2)});
      art.ensure_prop(atom.prop_key());
      return atom;
    }
    default:
      throw translate_error("formula contains sugar; desugar before translating");
  }
}

}  // namespace

formula translate_formula_path(const formula& f, const path& p,
                               std::size_t stage, gdl_artifacts& art,
                               formula_translation_stats* stats) {
  if (!p.model) throw translate_error("path has no model");
  if (stage > p.length())
    throw translate_error("stage " + std::to_string(stage) +
                          " out of range for a path of length " +
                          std::to_string(p.length()));
  auto issues = check_formula(p.model->signature(), f);
  if (!issues.empty())
    throw translate_error("formula does not conform: " + issues[0]);
  return translate_path_rec(f, p, stage, art, stats);
}

// ---------------------------------------------------------------------------
// complete translation

std::vector<std::string> finite_model_violations(const extensional_model& m,
                                                 translation_bounds b) {
  std::vector<std::string> out;
  if (b.zmin > b.zmax) {
    out.push_back("bounds are inverted: zmin > zmax");
    return out;
  }
  for (const auto& a : m.action_universe())
    for (std::int64_t v : a.args)
      if (v < b.zmin || v > b.zmax)
        out.push_back("condition (i): action " + a.to_string() +
                      " carries parameter " + std::to_string(v) +
                      " outside [" + std::to_string(b.zmin) + ", " +
                      std::to_string(b.zmax) + "]");
  for (state_id w = 0; w < m.state_count(); ++w)
    for (std::int64_t v : m.vals_at(w))
      if (v < b.zmin || v > b.zmax)
        out.push_back("condition (iii): state " + m.state_name(w) +
                      " carries value " + std::to_string(v) + " outside [" +
                      std::to_string(b.zmin) + ", " + std::to_string(b.zmax) +
                      "]");
  return out;
}

bool is_finite_model(const extensional_model& m, translation_bounds b) {
  return finite_model_violations(m, b).empty();
}

gdl_artifacts translate_model_complete(
    const std::shared_ptr<const extensional_model>& m, translation_bounds b) {
  if (!m) throw translate_error("null model");
  auto violations = finite_model_violations(*m, b);
  if (!violations.empty())
    throw translate_error("not a finite model for these bounds: " +
                          violations[0]);
  gdl_artifacts art;
  art.bounds = path_bounds{b.zmin, b.zmax};
  art.order_props = build_order_props(art.bounds);

  game_signature sig;
  sig.agents = m->signature().agents;
  sig.props = build_translated_props(m->signature(), art.bounds);
  art.model = std::make_shared<extensional_model>(sig);

  for (state_id w = 0; w < m->state_count(); ++w)
    art.model->add_state(m->state_name(w),
                         translated_state_props(*m, w, art.order_props), {});
  auto image = [&](state_id w) {
    return *art.model->find_state(m->state_name(w));
  };
  art.model->set_initial(image(m->initial_state()));
  for (state_id w : m->terminal_states()) art.model->mark_terminal(image(w));
  for (const auto& r : sig.agents)
    for (state_id w : m->goal_states(r)) art.model->add_goal(r, image(w));

  for (const auto& a : m->action_universe()) art.ensure_action(a);
  for (const auto& [w, as] : m->legality())
    for (const auto& a : as)
      art.model->add_legal(image(w), {a.agent, art.ensure_action(a), {}});
  for (const auto& [key, succ] : m->updates()) {
    joint_action flat_joint;
    for (const auto& a : key.second)
      flat_joint.push_back({a.agent, art.ensure_action(a), {}});
    art.model->add_update(image(key.first), std::move(flat_joint), image(succ));
  }
  return art;
}

path translate_path_complete(const path& p, const gdl_artifacts& art) {
  return translate_path(p, art);
}

std::int64_t eval_simple_term(const num_term& z) {
  switch (z.op()) {
    case num_term::kind::literal:
      return z.value();
    case num_term::kind::variable:
      throw translate_error("variable " + z.var_name() +
                            " in a variable-free term position");
    default: {
      const std::int64_t a = eval_simple_term(z.lhs());
      const std::int64_t b = eval_simple_term(z.rhs());
      std::int64_t r = 0;
      switch (z.op()) {
        case num_term::kind::add:
          if (__builtin_add_overflow(a, b, &r))
            throw translate_error("overflow in " + z.to_string());
          return r;
        case num_term::kind::sub:
          if (__builtin_sub_overflow(a, b, &r))
            throw translate_error("overflow in " + z.to_string());
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

// A term is groundable when it is a bare declared variable; acceptable
// when additionally variable-free with an in-bounds value.
bool term_in_bounds(const num_term& t, const game_signature& sig,
                    translation_bounds b) {
  if (t.is_variable()) return sig.var_index(t.var_name()).has_value();
  if (!t.is_ground()) return false;
  const std::int64_t v = eval_simple_term(t);
  return v >= b.zmin && v <= b.zmax;
}

bool bounded_rec(const formula& f, const game_signature& sig,
                 translation_bounds b) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::legal:
    case kind::does:
      for (const auto& t : f.action_args())
        if (!term_in_bounds(t, sig, b)) return false;
      return true;
    case kind::vals:
      for (const auto& t : f.items())
        if (!term_in_bounds(t, sig, b)) return false;
      return true;
    default:
      if (f.is_comparison())
        return term_in_bounds(f.term_lhs(), sig, b) &&
               term_in_bounds(f.term_rhs(), sig, b);
      if (f.is_unary()) return bounded_rec(f.child(), sig, b);
      if (f.is_binary())
        return bounded_rec(f.lhs(), sig, b) && bounded_rec(f.rhs(), sig, b);
      return true;
  }
}

}  // namespace

bool is_bounded_formula(const formula& f, const game_signature& sig,
                        translation_bounds b) {
  if (b.zmin > b.zmax) return false;
  return bounded_rec(f, sig, b);
}

namespace {

void require_groundable_term(const num_term& t, const game_signature& sig) {
  if (t.is_variable()) {
    if (!sig.var_index(t.var_name()))
      throw translate_error("undeclared variable " + t.var_name());
    return;
  }
  if (!t.is_ground())
    throw translate_error(
        "variable nested inside compound term " + t.to_string() +
        "; only bare variable arguments can be grounded");
}

// Grounds the leftmost bare-variable position of an atom, recursing over
// the remaining occurrences, and wires the value proposition alongside.
template <typename Rebuild>
formula ground_positions(const std::vector<num_term>& terms,
                         const game_signature& sig, translation_bounds b,
                         const Rebuild& rebuild, const formula& original) {
  for (const auto& t : terms) require_groundable_term(t, sig);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_variable()) continue;
    const std::string x = terms[i].var_name();
    std::vector<formula> disjuncts;
    for (std::int64_t q = b.zmin; q <= b.zmax; ++q) {
      std::vector<num_term> substituted = terms;
      substituted[i] = num_term::literal(q);
      formula grounded =
          ground_positions(substituted, sig, b, rebuild, rebuild(substituted));
      disjuncts.push_back(formula::conjunction(
          std::move(grounded), formula::prop(x, {int_name(q)})));
    }
    return formula::disjoin(disjuncts);
  }
  return original;
}

formula remove_var_rec(const formula& f, const game_signature& sig,
                       translation_bounds b) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::negation:
      return formula::negation(remove_var_rec(f.child(), sig, b));
    case kind::next_state:
      return formula::next_state(remove_var_rec(f.child(), sig, b));
    case kind::conjunction:
      return formula::conjunction(remove_var_rec(f.lhs(), sig, b),
                                  remove_var_rec(f.rhs(), sig, b));
    case kind::legal:
    case kind::does: {
      const std::string agent = f.agent(), action = f.action_name();
      const bool is_legal = f.node_kind() == kind::legal;
      auto rebuild = [&](const std::vector<num_term>& ts) {
        return is_legal ? formula::legal(agent, action, ts)
                        : formula::does(agent, action, ts);
      };
      return ground_positions(f.action_args(), sig, b, rebuild, f);
    }
    case kind::vals: {
      auto rebuild = [](const std::vector<num_term>& ts) {
        return formula::vals(ts);
      };
      return ground_positions(f.items(), sig, b, rebuild, f);
    }
    default:
      if (f.is_comparison()) {
        const kind k = f.node_kind();
        auto rebuild = [k](const std::vector<num_term>& ts) {
          switch (k) {
            case kind::less: return formula::less(ts[0], ts[1]);
            case kind::greater: return formula::greater(ts[0], ts[1]);
            default: return formula::equal(ts[0], ts[1]);
          }
        };
        return ground_positions({f.term_lhs(), f.term_rhs()}, sig, b, rebuild,
                                f);
      }
      return f;
  }
}

}  // namespace

formula remove_var(const formula& f, const game_signature& sig,
                   translation_bounds b, bool sugar_disjunction) {
  if (!is_core(f))
    throw translate_error("formula contains sugar; desugar before grounding");
  formula out = remove_var_rec(f, sig, b);
  return sugar_disjunction ? out : desugar(out);
}

namespace {

formula translate_complete_rec(const formula& f, const game_signature& src,
                               gdl_artifacts& art) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::prop:
    case kind::initial:
    case kind::terminal:
    case kind::wins:
      return f;
    case kind::negation:
      return formula::negation(translate_complete_rec(f.child(), src, art));
    case kind::next_state:
      return formula::next_state(translate_complete_rec(f.child(), src, art));
    case kind::conjunction:
      return formula::conjunction(translate_complete_rec(f.lhs(), src, art),
                                  translate_complete_rec(f.rhs(), src, art));
    case kind::disjunction:
      // Grounding disjunctions pass through as disjunctions of the
      // translated sides.
      return formula::disjunction(translate_complete_rec(f.lhs(), src, art),
                                  translate_complete_rec(f.rhs(), src, art));
    case kind::legal:
    case kind::does: {
      ground_action a;
      a.agent = f.agent();
      a.name = f.action_name();
      for (const auto& t : f.action_args())
        a.args.push_back(eval_simple_term(t));
      std::string flat = art.ensure_action(a);
      return f.node_kind() == kind::legal ? formula::legal(a.agent, flat, {})
                                          : formula::does(a.agent, flat, {});
    }
    case kind::vals: {
      std::vector<formula> parts;
      for (std::size_t i = 0; i < f.items().size(); ++i) {
        std::int64_t v = eval_simple_term(f.items()[i]);
        parts.push_back(formula::prop(src.vars.at(i), {int_name(v)}));
        art.ensure_prop(parts.back().prop_key());
      }
      if (parts.empty()) return tautology_atom(art);
      return formula::conjoin(parts);
    }
    default: {
      if (!f.is_comparison())
        throw translate_error(
            "formula contains sugar; desugar before translating");
      const std::int64_t v1 = eval_simple_term(f.term_lhs());
      const std::int64_t v2 = eval_simple_term(f.term_rhs());
      const char* rel = f.node_kind() == kind::less      ? "smaller"
                        : f.node_kind() == kind::greater ? "bigger"
                                                         : "equal";
      formula atom = formula::prop(rel, {int_name(v1), int_name(v2)});
      art.ensure_prop(atom.prop_key());
      return atom;
    }
  }
}

}  // namespace

formula translate_formula_complete(const formula& f, const game_signature& sig,
                                   translation_bounds b, gdl_artifacts& art,
                                   bool sugar_disjunction) {
  if (!is_core(f))
    throw translate_error("formula contains sugar; desugar before translating");
  auto issues = check_formula(sig, f);
  if (!issues.empty())
    throw translate_error("formula does not conform: " + issues[0]);
  if (!is_bounded_formula(f, sig, b))
    throw translate_error("formula is not bounded for [" +
                          std::to_string(b.zmin) + ", " +
                          std::to_string(b.zmax) + "]: " + f.to_string());
  formula grounded = remove_var(f, sig, b, true);
  formula out = translate_complete_rec(grounded, sig, art);
  return sugar_disjunction ? out : desugar(out);
}

std::shared_ptr<extensional_model> embed_gdl(
    const std::shared_ptr<const extensional_model>& m) {
  if (!m) throw translate_error("null model");
  if (!m->signature().vars.empty())
    throw translate_error(
        "embedding expects a propositional model with no numerical variables");
  return std::make_shared<extensional_model>(*m);
}

std::string action_map_to_text(const gdl_artifacts& art) {
  std::ostringstream os;
  for (const auto& [flat, a] : art.action_map) {
    os << flat << '\t' << a.agent << '\t' << a.name << '\t';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) os << ',';
      os << a.args[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gdlz
