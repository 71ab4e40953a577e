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

#include <string>
#include <vector>

#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"
#include "gdlz/translate.hpp"

namespace gdlz {

// Sum of atomic-occurrence counts over the rules; rules are not
// deduplicated against each other.
std::size_t count_description(const rule_set& rs);

enum class translation_mode { path_restricted, complete };

struct rule_report {
  std::size_t index = 0;
  std::size_t source_atoms = 0;
  std::size_t translated_atoms = 0;
  bool bare_vals = false;         // the whole rule is a vals atom
  std::size_t vals_occurrences = 0;
  std::size_t var_occurrences = 0;
  bool eligible = false;          // counted toward the exact closed form
  std::string note;
};

// Size comparison between a description and its translation, with the
// closed-form prediction recomputed from the rule classification
// (k vals-rules, kappa variable-carrying rules with eta occurrences, mu
// bounds span) next to the exact recount of the translated rules.
struct succinctness_report {
  translation_mode mode = translation_mode::path_restricted;
  std::size_t rule_count = 0;
  std::size_t source_count = 0;
  std::size_t translated_count = 0;
  std::size_t k = 0;
  std::size_t kappa = 0;
  std::size_t eta = 0;
  std::int64_t mu = 0;
  std::size_t predicted_count = 0;
  bool match = false;
  std::size_t eligible_rules = 0;
  std::size_t eligible_source = 0;
  std::size_t eligible_translated = 0;
  std::size_t eligible_predicted = 0;
  bool eligible_match = false;
  bool theorem3_inequality = false;  // source_count <= translated_count
  std::vector<rule_report> per_rule;
  std::vector<std::string> notes;

  std::string to_key_values() const;
  std::string to_table() const;
};

// Path-restricted mode: every rule is translated at the given stage of
// the given complete path. The closed form predicts
//   translated = count(rules without a leading vals) + |X| * k
// and is matched exactly on the eligible subset (rules whose translation
// is atom-preserving: no vals occurrences below the root, no legal-else
// branch, no last-stage next substitution).
succinctness_report analyze_path_mode(const rule_set& rs, const path& p,
                                      std::size_t stage);

// Complete mode over the given bounds. The paper-form prediction adds
// 2 * mu^eta * kappa for the variable-carrying rules; grounding actually
// iterates mu+1 values per occurrence, so the exact recount is reported
// (and pinned by tests) alongside the closed form.
succinctness_report analyze_complete_mode(const rule_set& rs,
                                          const game_signature& sig,
                                          translation_bounds b);

}  // namespace gdlz
