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

#include "gdlz/formula.hpp"
#include "gdlz/game.hpp"

namespace gdlz {

struct nim_game {
  std::shared_ptr<extensional_model> model;
  rule_set rules;  // core formulas, big connectives expanded
};

// Builds the two-player take-away game over the given heap sizes: agents
// Player1/Player2 with reduce(m,s)/noop actions, turn(r) propositions and
// heap_i state variables. The model materializes every (turn, heap tuple)
// combination with heap_i in [0, gamma_i]; sticks only decrease, so the
// fragment is closed under the update function. The rule set expands the
// eight description schemas over the finite index ranges and is already
// desugared. Throws std::invalid_argument unless every gamma_i >= 1.
nim_game make_nim(const std::vector<std::int64_t>& gammas);

}  // namespace gdlz
