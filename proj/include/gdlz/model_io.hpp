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

#include <memory>
#include <string>
#include <vector>

#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"

namespace gdlz {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented extensional model format ('#' comments, UTF-8):
//   AGENTS r1 r2 ...
//   VARS x1 x2 ...                     (section absent when X is empty)
//   PROPS q1 q2 ...                    (repeatable)
//   ACTIONS <agent> <name>/<arity> ... (repeatable; also inferred from
//                                       LEGAL/UPDATE lines when absent)
//   STATE <id> props=<comma list> vals=<comma list of integers>
//   INITIAL <id>
//   TERMINAL <id> ...                  (repeatable)
//   GOAL <agent> <id> ...
//   LEGAL <id> <name>^<agent>(<ints>)
//   UPDATE <id> (<action>;...per agent in order) -> <id>
std::shared_ptr<extensional_model> parse_model_text(const std::string& text);
std::string model_to_text(const extensional_model& m);
std::shared_ptr<extensional_model> load_model(const std::string& file);
void save_model(const extensional_model& m, const std::string& file);

// Rule files: one formula per line. Loading desugars into the core
// fragment; saving writes the canonical core text.
rule_set load_rules(const std::string& file);
void save_rules(const rule_set& rs, const std::string& file);

// Ground action / joint action text, e.g. "reduce^Player1(1,5)" and
// "reduce^Player1(1,5);noop^Player2()".
ground_action parse_ground_action(const std::string& text);
joint_action parse_joint_action(const std::string& text,
                                const game_signature& sig);

// Path files: one joint action per line, '#' comments.
std::vector<joint_action> parse_joint_actions_text(const std::string& text,
                                                   const game_signature& sig);
std::vector<joint_action> load_joint_actions(const std::string& file,
                                             const game_signature& sig);
void save_joint_actions(const std::vector<joint_action>& joints,
                        const std::string& file);

std::string read_file(const std::string& file);
void write_file(const std::string& file, const std::string& content);

}  // namespace gdlz
