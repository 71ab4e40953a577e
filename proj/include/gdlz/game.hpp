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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdlz {

using state_id = std::uint32_t;

class model_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class path_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct action_schema {
  std::string name;
  std::size_t arity = 0;
};

// Static game vocabulary: agents, per-agent action schemas, propositions
// (by canonical name, e.g. "turn(Player1)"), and the ordered numerical
// variables indexing the valuation tuple.
struct game_signature {
  std::vector<std::string> agents;
  std::map<std::string, std::vector<action_schema>> actions;
  std::set<std::string> props;
  std::vector<std::string> vars;

  bool has_agent(const std::string& r) const;
  std::size_t agent_index(const std::string& r) const;  // throws model_error
  const action_schema* find_schema(const std::string& agent,
                                   const std::string& name) const;
  std::optional<std::size_t> var_index(const std::string& name) const;
};

// A fully instantiated action of one agent.
struct ground_action {
  std::string agent;
  std::string name;
  std::vector<std::int64_t> args;

  std::string to_string() const;  // name^agent(a1,a2,...)
  friend bool operator==(const ground_action&, const ground_action&) = default;
  friend auto operator<=>(const ground_action&, const ground_action&) = default;
};

// One action per agent, in signature agent order.
using joint_action = std::vector<ground_action>;

std::string joint_to_string(const joint_action& d);

// State-transition model interface. States are opaque handles owned by
// the model. Implementations are immutable once built and safe to share
// across threads.
class st_model {
 public:
  virtual ~st_model() = default;

  const game_signature& signature() const { return sig_; }

  virtual state_id initial_state() const = 0;
  virtual bool is_terminal(state_id w) const = 0;
  virtual bool is_legal(state_id w, const ground_action& a) const = 0;
  // All legal actions at w, every agent, sorted.
  virtual std::vector<ground_action> legal_actions(state_id w) const = 0;
  // The update function; throws model_error where undefined.
  virtual state_id apply(state_id w, const joint_action& d) const = 0;
  virtual bool is_goal(const std::string& agent, state_id w) const = 0;
  virtual const std::set<std::string>& props_at(state_id w) const = 0;
  virtual const std::vector<std::int64_t>& vals_at(state_id w) const = 0;
  virtual const std::string& state_name(state_id w) const = 0;

 protected:
  explicit st_model(game_signature sig) : sig_(std::move(sig)) {}
  game_signature sig_;
};

// Finite table-backed model; also the build surface for generators, file
// loading and translation. Treated as immutable once fully assembled.
class extensional_model final : public st_model {
 public:
  explicit extensional_model(game_signature sig);

  // -- construction
  state_id add_state(std::string name, std::set<std::string> props,
                     std::vector<std::int64_t> vals);
  void set_initial(state_id w);
  void mark_terminal(state_id w);
  void add_goal(const std::string& agent, state_id w);
  void add_legal(state_id w, ground_action a);
  void add_update(state_id w, joint_action d, state_id successor);
  void declare_prop(const std::string& name);
  void declare_action(const std::string& agent, const std::string& name,
                      std::size_t arity);

  // -- st_model
  state_id initial_state() const override;
  bool is_terminal(state_id w) const override;
  bool is_legal(state_id w, const ground_action& a) const override;
  std::vector<ground_action> legal_actions(state_id w) const override;
  state_id apply(state_id w, const joint_action& d) const override;
  bool is_goal(const std::string& agent, state_id w) const override;
  const std::set<std::string>& props_at(state_id w) const override;
  const std::vector<std::int64_t>& vals_at(state_id w) const override;
  const std::string& state_name(state_id w) const override;

  // -- enumeration
  std::size_t state_count() const { return names_.size(); }
  std::optional<state_id> find_state(const std::string& name) const;
  bool has_initial() const { return initial_.has_value(); }
  const std::set<state_id>& terminal_states() const { return terminal_; }
  const std::set<state_id>& goal_states(const std::string& agent) const;
  // Ground actions seen in legality or update entries, sorted.
  std::vector<ground_action> action_universe() const;
  const std::map<state_id, std::set<ground_action>>& legality() const {
    return legal_;
  }
  const std::map<std::pair<state_id, joint_action>, state_id>& updates() const {
    return update_;
  }

 private:
  void require_state(state_id w) const;

  std::vector<std::string> names_;
  std::vector<std::set<std::string>> props_;
  std::vector<std::vector<std::int64_t>> vals_;
  std::map<std::string, state_id> by_name_;
  std::optional<state_id> initial_;
  std::set<state_id> terminal_;
  std::map<std::string, std::set<state_id>> goals_;
  std::map<state_id, std::set<ground_action>> legal_;
  std::map<std::pair<state_id, joint_action>, state_id> update_;
};

// A finite run: states w0..we with w0 the initial state and the joint
// actions d1..de between them.
struct path {
  std::shared_ptr<const st_model> model;
  std::vector<state_id> states;
  std::vector<joint_action> joints;

  std::size_t length() const { return joints.size(); }
  state_id at(std::size_t stage) const { return states.at(stage); }
  bool complete() const {
    return model && model->is_terminal(states.back());
  }
};

// Folds apply() from the initial state, enforcing the path conditions:
// no stage leaves a terminal state, and every action component is legal
// where taken. Throws path_error naming the stage, agent and action.
path build_path(std::shared_ptr<const st_model> m,
                const std::vector<joint_action>& joints);

// Re-checks the path conditions of an already-built path, independently
// of how it was constructed. Empty result means valid.
std::vector<std::string> validate_path(const path& p);

struct enumeration_result {
  std::vector<path> paths;
  bool truncated = false;
};

// Every complete path of length <= max_depth, depth-first over sorted
// joint actions, each exactly once. Truncated is set when the depth
// bound cut off an unfinished branch.
enumeration_result enumerate_complete_paths(std::shared_ptr<const st_model> m,
                                            std::size_t max_depth);
void for_each_complete_path(const std::shared_ptr<const st_model>& m,
                            std::size_t max_depth,
                            const std::function<void(const path&)>& fn,
                            bool* truncated = nullptr);

// Legal joint actions at a state: the product of per-agent legal action
// sets, in sorted order.
std::vector<joint_action> legal_joint_actions(const st_model& m, state_id w);

// Structural well-formedness diagnostics; empty iff the model satisfies
// the ST-model invariants (valuation lengths, initial state present,
// update targets known, legality entries conformant, ...).
std::vector<std::string> validate_model(const extensional_model& m);

}  // namespace gdlz
