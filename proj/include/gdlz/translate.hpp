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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"

namespace gdlz {

class translate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest and biggest integer occurring in a path's action parameters
// and state valuations.
struct path_bounds {
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// Arbitrary bounds for the complete translation of a finite model.
struct translation_bounds {
  std::int64_t zmin = 0;
  std::int64_t zmax = 0;
};

// nullopt when the path carries no integers at all (no numerical
// variables and parameterless actions).
std::optional<path_bounds> bounds_of_path(const path& p);

// All actions performed along the path, one entry per distinct action.
std::vector<ground_action> actions_of_path(const path& p);

// Injective flat name: name__agent__a1_a2 with an 'm' prefix for
// negative parameters, e.g. reduce^P1(1,5) -> "reduce__P1__1_5" and
// move^r(-3) -> "move__r__m3".
std::string flatten_action(const ground_action& a);

// A translated GDL model plus the bookkeeping needed to keep working
// with it: the flat-name action map, the numeric-order propositions and
// the bounds they cover. Formula translation may extend the vocabulary
// (never-legal action names, never-true propositions); the artifacts are
// immutable once translation is finished.
struct gdl_artifacts {
  std::shared_ptr<extensional_model> model;
  std::optional<path> translated_path;  // set by the path-restricted mode
  std::map<std::string, ground_action> action_map;  // flat -> source
  std::vector<std::string> order_props;             // true order atoms
  std::optional<path_bounds> bounds;

  // Returns the flat name, declaring it in the translated signature on
  // first sight.
  std::string ensure_action(const ground_action& a);
  void ensure_prop(const std::string& canonical_name);
};

// Path-restricted translation: the translated model covers exactly the
// states reached and the actions performed by the given complete path.
gdl_artifacts translate_model_path(const path& p);

// Maps a path through the action map into the translated model.
path translate_path(const path& p, const gdl_artifacts& art);

struct formula_translation_stats {
  bool used_legal_else = false;
  bool used_last_stage_next = false;
};

// Stage-relative formula translation into the GDL fragment. Arguments
// evaluate at the stage's state; next shifts the stage; a legal atom maps
// positively exactly when its evaluated action is the one the agent
// performed at that stage, and to a negated atom otherwise; vals becomes
// the conjunction of per-variable value propositions.
formula translate_formula_path(const formula& f, const path& p,
                               std::size_t stage, gdl_artifacts& art,
                               formula_translation_stats* stats = nullptr);

// Finite-model conditions for the given bounds: action parameters within
// bounds, finite state/action sets, valuations within bounds.
std::vector<std::string> finite_model_violations(const extensional_model& m,
                                                 translation_bounds b);
bool is_finite_model(const extensional_model& m, translation_bounds b);

// Complete translation of a finite model: every state kept, every action
// flattened, legality and update conjugated through the action map.
gdl_artifacts translate_model_complete(
    const std::shared_ptr<const extensional_model>& m, translation_bounds b);
path translate_path_complete(const path& p, const gdl_artifacts& art);

// Variable-free term valuation; throws translate_error on a variable.
std::int64_t eval_simple_term(const num_term& z);

// A formula is bounded when every maximal numerical term in its atoms is
// either a bare declared variable (groundable) or variable-free with a
// value inside the bounds.
bool is_bounded_formula(const formula& f, const game_signature& sig,
                        translation_bounds b);

// Grounds bare variable arguments of atoms into disjunctions over the
// bound range, conjoined with the variable-value proposition. Variables
// nested inside compound terms are not groundable and raise
// translate_error naming the term. With sugar_disjunction unset the
// result is desugared into the core fragment.
formula remove_var(const formula& f, const game_signature& sig,
                   translation_bounds b, bool sugar_disjunction = true);

// Complete (stage-free) formula translation of a bounded formula:
// remove_var, then fold every term and flatten every action.
formula translate_formula_complete(const formula& f, const game_signature& sig,
                                   translation_bounds b, gdl_artifacts& art,
                                   bool sugar_disjunction = true);

// Reads a propositional (variable-free) model as a model of the extended
// language; evaluation is unchanged. Throws when the model declares
// numerical variables.
std::shared_ptr<extensional_model> embed_gdl(
    const std::shared_ptr<const extensional_model>& m);

// Serialized action map: flat<TAB>agent<TAB>name<TAB>comma-joined args.
std::string action_map_to_text(const gdl_artifacts& art);

}  // namespace gdlz
