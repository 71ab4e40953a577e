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

#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gdlz/eval.hpp"
#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"
#include "gdlz/model_io.hpp"
#include "gdlz/nim.hpp"

namespace gdlz::testing {

// ---------------------------------------------------------------------------
// Independent satisfaction oracle: a plain recursive descent over the
// semantic clauses, no memoization, nothing shared with the library
// evaluator. Core formulas only.

inline std::int64_t naive_term(const st_model& m, state_id w,
                               const num_term& z) {
  switch (z.op()) {
    case num_term::kind::literal:
      return z.value();
    case num_term::kind::variable: {
      const auto& vars = m.signature().vars;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == z.var_name()) return m.vals_at(w)[i];
      throw std::runtime_error("oracle: undeclared variable");
    }
    case num_term::kind::add:
      return naive_term(m, w, z.lhs()) + naive_term(m, w, z.rhs());
    case num_term::kind::sub:
      return naive_term(m, w, z.lhs()) - naive_term(m, w, z.rhs());
    case num_term::kind::min: {
      auto a = naive_term(m, w, z.lhs()), b = naive_term(m, w, z.rhs());
      return a < b ? a : b;
    }
    default: {
      auto a = naive_term(m, w, z.lhs()), b = naive_term(m, w, z.rhs());
      return a > b ? a : b;
    }
  }
}

inline bool naive_holds(const path& p, std::size_t j, const formula& f) {
  using kind = formula::kind;
  const st_model& m = *p.model;
  const state_id w = p.states[j];
  switch (f.node_kind()) {
    case kind::prop:
      return m.props_at(w).count(f.prop_key()) > 0;
    case kind::initial:
      return w == m.initial_state();
    case kind::terminal:
      return m.is_terminal(w);
    case kind::wins:
      return m.is_goal(f.agent(), w);
    case kind::legal: {
      ground_action a{f.agent(), f.action_name(), {}};
      for (const auto& t : f.action_args())
        a.args.push_back(naive_term(m, w, t));
      return m.is_legal(w, a);
    }
    case kind::does: {
      if (j >= p.length()) return false;
      ground_action a{f.agent(), f.action_name(), {}};
      for (const auto& t : f.action_args())
        a.args.push_back(naive_term(m, w, t));
      for (std::size_t i = 0; i < m.signature().agents.size(); ++i)
        if (m.signature().agents[i] == f.agent())
          return p.joints[j][i] == a;
      return false;
    }
    case kind::negation:
      return !naive_holds(p, j, f.child());
    case kind::conjunction:
      return naive_holds(p, j, f.lhs()) && naive_holds(p, j, f.rhs());
    case kind::next_state:
      return j < p.length() ? naive_holds(p, j + 1, f.child()) : true;
    case kind::greater:
      return naive_term(m, w, f.term_lhs()) > naive_term(m, w, f.term_rhs());
    case kind::less:
      return naive_term(m, w, f.term_lhs()) < naive_term(m, w, f.term_rhs());
    case kind::equal:
      return naive_term(m, w, f.term_lhs()) == naive_term(m, w, f.term_rhs());
    case kind::vals: {
      const auto& tuple = m.vals_at(w);
      if (f.items().size() != tuple.size()) return false;
      for (std::size_t i = 0; i < tuple.size(); ++i)
        if (naive_term(m, w, f.items()[i]) != tuple[i]) return false;
      return true;
    }
    default:
      throw std::runtime_error("oracle: sugar node");
  }
}

// ---------------------------------------------------------------------------
// The worked two-heap game run: <5,3>, three moves, four states.

struct fig2 {
  nim_game game;
  path run;
};

inline fig2 make_fig2() {
  fig2 out{make_nim({5, 3}), {}};
  const auto& sig = out.game.model->signature();
  std::vector<joint_action> joints{
      parse_joint_action("reduce^Player1(1,5);noop^Player2()", sig),
      parse_joint_action("noop^Player1();reduce^Player2(2,2)", sig),
      parse_joint_action("reduce^Player1(2,1);noop^Player2()", sig),
  };
  out.run = build_path(out.game.model, joints);
  return out;
}

// ---------------------------------------------------------------------------
// Random sampling

// A random complete run (the take-away games always terminate).
inline path random_walk_path(const std::shared_ptr<const st_model>& m,
                             std::mt19937_64& rng, std::size_t max_steps = 64) {
  std::vector<joint_action> joints;
  state_id w = m->initial_state();
  for (std::size_t step = 0; step < max_steps && !m->is_terminal(w); ++step) {
    auto options = legal_joint_actions(*m, w);
    if (options.empty()) break;
    const auto& d = options[std::uniform_int_distribution<std::size_t>(
        0, options.size() - 1)(rng)];
    joints.push_back(d);
    w = m->apply(w, d);
  }
  return build_path(m, joints);
}

struct formula_gen_options {
  bool allow_legal = true;
  bool allow_does = true;
  bool allow_vals = true;
  bool allow_comparisons = true;
  bool allow_wins = true;
  // Keep legal atoms out of negative polarity (the path-restricted
  // translation preserves truth of legal atoms only positively).
  bool legal_positive_only = false;
  // Restrict comparison operands to literals and bare variables (keeps
  // evaluated values inside the path bounds).
  bool simple_comparisons = false;
  // Terms are bare variables or variable-free compounds (the bounded
  // fragment of the complete translation).
  bool bounded_terms = false;
  std::int64_t const_min = 0;
  std::int64_t const_max = 5;
  int max_depth = 3;
};

class formula_generator {
 public:
  formula_generator(const game_signature& sig, formula_gen_options opts,
                    std::uint64_t seed)
      : sig_(sig), opts_(opts), rng_(seed) {
    props_.assign(sig.props.begin(), sig.props.end());
  }

  formula operator()() { return gen(opts_.max_depth, +1); }

  std::uint64_t pick(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }

  std::int64_t pick_const() {
    return std::uniform_int_distribution<std::int64_t>(opts_.const_min,
                                                       opts_.const_max)(rng_);
  }

  // allow_var covers this node only; under bounded_terms compound
  // subterms never contain variables.
  num_term gen_term(int depth, bool allow_var) {
    const auto roll = pick(10);
    if (allow_var && !sig_.vars.empty() && roll < 3)
      return num_term::variable(sig_.vars[pick(sig_.vars.size())]);
    if (depth > 0 && roll >= 7) {
      const bool sub_vars = allow_var && !opts_.bounded_terms;
      num_term l = gen_term(depth - 1, sub_vars);
      num_term r = gen_term(depth - 1, sub_vars);
      switch (pick(4)) {
        case 0: return num_term::add(l, r);
        case 1: return num_term::sub(l, r);
        case 2: return num_term::min(l, r);
        default: return num_term::max(l, r);
      }
    }
    return num_term::literal(pick_const());
  }

  ground_action gen_ground_action() {
    const std::string& agent = sig_.agents[pick(sig_.agents.size())];
    const auto& schemas = sig_.actions.at(agent);
    const auto& schema = schemas[pick(schemas.size())];
    ground_action a{agent, schema.name, {}};
    for (std::size_t i = 0; i < schema.arity; ++i) a.args.push_back(pick_const());
    return a;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  formula gen(int depth, int polarity) {
    if (depth > 0) {
      switch (pick(8)) {
        case 0:
          return formula::negation(gen(depth - 1, -polarity));
        case 1:
        case 2:
          return formula::conjunction(gen(depth - 1, polarity),
                                      gen(depth - 1, polarity));
        case 3:
          return formula::next_state(gen(depth - 1, polarity));
        default:
          break;
      }
    }
    return gen_atom(polarity);
  }

  formula gen_atom(int polarity) {
    for (;;) {
      switch (pick(8)) {
        case 0: {
          if (props_.empty()) break;
          return prop_from_key(props_[pick(props_.size())]);
        }
        case 1:
          return formula::initial();
        case 2:
          return formula::terminal();
        case 3:
          if (!opts_.allow_wins) break;
          return formula::wins(sig_.agents[pick(sig_.agents.size())]);
        case 4: {
          if (!opts_.allow_legal) break;
          if (opts_.legal_positive_only && polarity < 0) break;
          auto [agent, name, args] = gen_action_parts();
          return formula::legal(agent, name, args);
        }
        case 5: {
          if (!opts_.allow_does) break;
          auto [agent, name, args] = gen_action_parts();
          return formula::does(agent, name, args);
        }
        case 6: {
          if (!opts_.allow_comparisons) break;
          const int depth = opts_.simple_comparisons ? 0 : 1;
          num_term l = gen_term(depth, true);
          num_term r = gen_term(depth, true);
          switch (pick(3)) {
            case 0: return formula::less(l, r);
            case 1: return formula::greater(l, r);
            default: return formula::equal(l, r);
          }
        }
        default: {
          if (!opts_.allow_vals) break;
          std::vector<num_term> items;
          for (std::size_t i = 0; i < sig_.vars.size(); ++i)
            items.push_back(gen_term(1, true));
          return formula::vals(std::move(items));
        }
      }
    }
  }

  std::tuple<std::string, std::string, std::vector<num_term>>
  gen_action_parts() {
    const std::string& agent = sig_.agents[pick(sig_.agents.size())];
    const auto& schemas = sig_.actions.at(agent);
    const auto& schema = schemas[pick(schemas.size())];
    std::vector<num_term> args;
    for (std::size_t i = 0; i < schema.arity; ++i)
      args.push_back(gen_term(1, true));
    return {agent, schema.name, std::move(args)};
  }

  static formula prop_from_key(const std::string& key) {
    auto lp = key.find('(');
    if (lp == std::string::npos) return formula::prop(key);
    std::vector<std::string> args;
    std::string cur;
    for (std::size_t i = lp + 1; i + 1 < key.size(); ++i) {
      if (key[i] == ',') {
        args.push_back(cur);
        cur.clear();
      } else {
        cur += key[i];
      }
    }
    if (!cur.empty()) args.push_back(cur);
    return formula::prop(key.substr(0, lp), std::move(args));
  }

  const game_signature& sig_;
  formula_gen_options opts_;
  std::mt19937_64 rng_;
  std::vector<std::string> props_;
};

}  // namespace gdlz::testing
