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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"

namespace gdlz {

class eval_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Static conformance of a formula against a signature: declared agents,
// action schemas with matching arity, declared propositions and
// variables, and vals arity equal to |vars|. Empty result means ok.
std::vector<std::string> check_formula(const game_signature& sig,
                                       const formula& f);
std::vector<std::string> check_ground_action(const game_signature& sig,
                                             const ground_action& a);

// Term valuation at a state: literals denote themselves, a variable reads
// its slot of the numerical valuation, add/sub/min/max fold their sides.
// Throws eval_error for undeclared variables or 64-bit overflow.
std::int64_t eval_term(const st_model& m, state_id w, const num_term& z);

// Satisfaction of f at the given stage of the path. Sugar is desugared
// first; conformance failures and out-of-range stages throw eval_error.
// Shared subformulas are evaluated once per stage.
bool holds(const path& p, std::size_t stage, const formula& f);

// Conjunction of holds() over every stage 0..|p|.
bool holds_globally_on_path(const path& p, const formula& f);

struct model_of_counterexample {
  path witness;
  std::size_t stage = 0;
  std::size_t rule_index = 0;
};

struct model_of_verdict {
  enum class status { holds, fails, inconclusive };
  status result = status::holds;
  std::optional<model_of_counterexample> counterexample;
  std::size_t paths_checked = 0;

  const char* name() const {
    switch (result) {
      case status::holds: return "holds";
      case status::fails: return "fails";
      default: return "inconclusive";
    }
  }
};

// Checks every rule at every stage of every complete path of length up
// to max_depth. "fails" carries the first counterexample; a truncated
// enumeration with no failure is "inconclusive".
model_of_verdict is_model_of(const std::shared_ptr<const st_model>& m,
                             const rule_set& rules, std::size_t max_depth);

}  // namespace gdlz
