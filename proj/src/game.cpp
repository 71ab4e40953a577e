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

#include "gdlz/game.hpp"

#include <algorithm>
#include <sstream>

namespace gdlz {

bool game_signature::has_agent(const std::string& r) const {
  return std::find(agents.begin(), agents.end(), r) != agents.end();
}

std::size_t game_signature::agent_index(const std::string& r) const {
  auto it = std::find(agents.begin(), agents.end(), r);
  if (it == agents.end()) throw model_error("unknown agent: " + r);
  return static_cast<std::size_t>(it - agents.begin());
}

const action_schema* game_signature::find_schema(const std::string& agent,
                                                 const std::string& name) const {
  auto it = actions.find(agent);
  if (it == actions.end()) return nullptr;
  for (const auto& s : it->second)
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<std::size_t> game_signature::var_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

std::string ground_action::to_string() const {
  std::string out = name;
  out += '^';
  out += agent;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(args[i]);
  }
  out += ')';
  return out;
}

std::string joint_to_string(const joint_action& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ';';
    out += d[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// extensional_model

extensional_model::extensional_model(game_signature sig)
    : st_model(std::move(sig)) {}

state_id extensional_model::add_state(std::string name,
                                      std::set<std::string> props,
                                      std::vector<std::int64_t> vals) {
  if (by_name_.count(name))
    throw model_error("duplicate state id: " + name);
  state_id w = static_cast<state_id>(names_.size());
  by_name_.emplace(name, w);
  names_.push_back(std::move(name));
  props_.push_back(std::move(props));
  vals_.push_back(std::move(vals));
  return w;
}

void extensional_model::set_initial(state_id w) {
  require_state(w);
  initial_ = w;
}

void extensional_model::mark_terminal(state_id w) {
  require_state(w);
  terminal_.insert(w);
}

void extensional_model::add_goal(const std::string& agent, state_id w) {
  require_state(w);
  goals_[agent].insert(w);
}

void extensional_model::add_legal(state_id w, ground_action a) {
  require_state(w);
  legal_[w].insert(std::move(a));
}

void extensional_model::add_update(state_id w, joint_action d,
                                   state_id successor) {
  require_state(w);
  require_state(successor);
  update_[{w, std::move(d)}] = successor;
}

void extensional_model::declare_prop(const std::string& name) {
  sig_.props.insert(name);
}

void extensional_model::declare_action(const std::string& agent,
                                       const std::string& name,
                                       std::size_t arity) {
  if (!sig_.find_schema(agent, name))
    sig_.actions[agent].push_back({name, arity});
}

state_id extensional_model::initial_state() const {
  if (!initial_) throw model_error("model has no initial state");
  return *initial_;
}

bool extensional_model::is_terminal(state_id w) const {
  require_state(w);
  return terminal_.count(w) > 0;
}

bool extensional_model::is_legal(state_id w, const ground_action& a) const {
  require_state(w);
  auto it = legal_.find(w);
  return it != legal_.end() && it->second.count(a) > 0;
}

std::vector<ground_action> extensional_model::legal_actions(state_id w) const {
  require_state(w);
  auto it = legal_.find(w);
  if (it == legal_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

state_id extensional_model::apply(state_id w, const joint_action& d) const {
  require_state(w);
  auto it = update_.find({w, d});
  if (it == update_.end())
    throw model_error("update undefined for state " + names_[w] +
                      " and joint action " + joint_to_string(d));
  return it->second;
}

bool extensional_model::is_goal(const std::string& agent, state_id w) const {
  require_state(w);
  auto it = goals_.find(agent);
  return it != goals_.end() && it->second.count(w) > 0;
}

const std::set<std::string>& extensional_model::props_at(state_id w) const {
  require_state(w);
  return props_[w];
}

const std::vector<std::int64_t>& extensional_model::vals_at(state_id w) const {
  require_state(w);
  return vals_[w];
}

const std::string& extensional_model::state_name(state_id w) const {
  require_state(w);
  return names_[w];
}

std::optional<state_id> extensional_model::find_state(
    const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::set<state_id>& extensional_model::goal_states(
    const std::string& agent) const {
  static const std::set<state_id> empty;
  auto it = goals_.find(agent);
  return it == goals_.end() ? empty : it->second;
}

std::vector<ground_action> extensional_model::action_universe() const {
  std::set<ground_action> all;
  for (const auto& [w, as] : legal_) all.insert(as.begin(), as.end());
  for (const auto& [key, succ] : update_) {
    (void)succ;
    all.insert(key.second.begin(), key.second.end());
  }
  return {all.begin(), all.end()};
}

void extensional_model::require_state(state_id w) const {
  if (w >= names_.size())
    throw model_error("unknown state handle " + std::to_string(w));
}

// ---------------------------------------------------------------------------
// paths

namespace {

void check_joint_shape(const game_signature& sig, const joint_action& d,
                       std::size_t stage) {
  if (d.size() != sig.agents.size())
    throw path_error("stage " + std::to_string(stage) + ": joint action has " +
                     std::to_string(d.size()) + " components, expected " +
                     std::to_string(sig.agents.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].agent != sig.agents[i])
      throw path_error("stage " + std::to_string(stage) + ": component " +
                       std::to_string(i) + " belongs to agent " + d[i].agent +
                       ", expected " + sig.agents[i]);
}

}  // namespace

path build_path(std::shared_ptr<const st_model> m,
                const std::vector<joint_action>& joints) {
  if (!m) throw path_error("null model");
  path p;
  p.model = m;
  p.states.push_back(m->initial_state());
  for (std::size_t j = 0; j < joints.size(); ++j) {
    const state_id w = p.states.back();
    if (m->is_terminal(w))
      throw path_error("stage " + std::to_string(j) +
                       ": cannot extend past terminal state " +
                       m->state_name(w));
    check_joint_shape(m->signature(), joints[j], j + 1);
    for (const auto& a : joints[j])
      if (!m->is_legal(w, a))
        throw path_error("stage " + std::to_string(j + 1) + ": action " +
                         a.to_string() + " of agent " + a.agent +
                         " is not legal at state " + m->state_name(w));
    p.states.push_back(m->apply(w, joints[j]));
    p.joints.push_back(joints[j]);
  }
  return p;
}

std::vector<std::string> validate_path(const path& p) {
  std::vector<std::string> problems;
  if (!p.model) return {"path has no model"};
  const st_model& m = *p.model;
  if (p.states.empty() || p.states.size() != p.joints.size() + 1)
    return {"malformed path: state/joint counts do not line up"};
  if (p.states.front() != m.initial_state())
    problems.push_back("path does not start at the initial state");
  for (std::size_t j = 0; j + 1 < p.states.size(); ++j)
    if (m.is_terminal(p.states[j]))
      problems.push_back("non-final state at stage " + std::to_string(j) +
                         " is terminal");
  for (std::size_t j = 0; j < p.joints.size(); ++j) {
    if (p.joints[j].size() != m.signature().agents.size()) {
      problems.push_back("joint " + std::to_string(j + 1) +
                         " has wrong component count");
      continue;
    }
    for (const auto& a : p.joints[j])
      if (!m.is_legal(p.states[j], a))
        problems.push_back("action " + a.to_string() + " at stage " +
                           std::to_string(j + 1) + " is not legal");
    try {
      if (m.apply(p.states[j], p.joints[j]) != p.states[j + 1])
        problems.push_back("stage " + std::to_string(j + 1) +
                           " does not follow the update function");
    } catch (const model_error& e) {
      problems.push_back(e.what());
    }
  }
  return problems;
}

std::vector<joint_action> legal_joint_actions(const st_model& m, state_id w) {
  const auto& agents = m.signature().agents;
  std::vector<std::vector<ground_action>> per_agent(agents.size());
  for (const auto& a : m.legal_actions(w)) {
    auto it = std::find(agents.begin(), agents.end(), a.agent);
    if (it != agents.end())
      per_agent[static_cast<std::size_t>(it - agents.begin())].push_back(a);
  }
  for (const auto& opts : per_agent)
    if (opts.empty()) return {};
  std::vector<joint_action> out;
  joint_action current(agents.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == agents.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& a : per_agent[i]) {
      current[i] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

void for_each_complete_path(const std::shared_ptr<const st_model>& m,
                            std::size_t max_depth,
                            const std::function<void(const path&)>& fn,
                            bool* truncated) {
  if (truncated) *truncated = false;
  path current;
  current.model = m;
  current.states.push_back(m->initial_state());
  auto rec = [&](auto&& self) -> void {
    const state_id w = current.states.back();
    if (m->is_terminal(w)) {
      fn(current);
      return;
    }
    if (current.joints.size() >= max_depth) {
      if (truncated) *truncated = true;
      return;
    }
    for (const auto& d : legal_joint_actions(*m, w)) {
      current.states.push_back(m->apply(w, d));
      current.joints.push_back(d);
      self(self);
      current.states.pop_back();
      current.joints.pop_back();
    }
  };
  rec(rec);
}

enumeration_result enumerate_complete_paths(std::shared_ptr<const st_model> m,
                                            std::size_t max_depth) {
  enumeration_result out;
  for_each_complete_path(
      m, max_depth, [&](const path& p) { out.paths.push_back(p); },
      &out.truncated);
  return out;
}

// ---------------------------------------------------------------------------
// model validation

std::vector<std::string> validate_model(const extensional_model& m) {
  std::vector<std::string> out;
  const game_signature& sig = m.signature();
  if (sig.agents.empty()) out.push_back("signature has no agents");
  for (const auto& r : sig.agents) {
    auto it = sig.actions.find(r);
    if (it == sig.actions.end() || it->second.empty())
      out.push_back("agent " + r + " has no actions");
  }
  if (!m.has_initial()) out.push_back("no initial state");
  for (state_id w = 0; w < m.state_count(); ++w) {
    if (m.vals_at(w).size() != sig.vars.size())
      out.push_back("state " + m.state_name(w) + " carries " +
                    std::to_string(m.vals_at(w).size()) +
                    " numerical values, expected " +
                    std::to_string(sig.vars.size()));
    for (const auto& q : m.props_at(w))
      if (!sig.props.count(q))
        out.push_back("state " + m.state_name(w) + " satisfies undeclared " +
                      "proposition " + q);
  }
  for (const auto& r : sig.agents)
    (void)r;  // goal states were validated on insertion
  for (const auto& [w, as] : m.legality()) {
    for (const auto& a : as) {
      if (!sig.has_agent(a.agent)) {
        out.push_back("legality entry at " + m.state_name(w) +
                      " names unknown agent " + a.agent);
        continue;
      }
      const action_schema* s = sig.find_schema(a.agent, a.name);
      if (!s)
        out.push_back("legality entry at " + m.state_name(w) +
                      " names undeclared action " + a.to_string());
      else if (s->arity != a.args.size())
        out.push_back("legality entry " + a.to_string() + " at " +
                      m.state_name(w) + " has arity " +
                      std::to_string(a.args.size()) + ", declared " +
                      std::to_string(s->arity));
    }
  }
  for (const auto& [key, succ] : m.updates()) {
    (void)succ;
    const joint_action& d = key.second;
    if (d.size() != sig.agents.size()) {
      out.push_back("update entry at " + m.state_name(key.first) +
                    " has wrong joint-action shape");
      continue;
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i].agent != sig.agents[i])
        out.push_back("update entry at " + m.state_name(key.first) +
                      " lists agent " + d[i].agent + " in slot " +
                      std::to_string(i));
  }
  return out;
}

}  // namespace gdlz
