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

#include "gdlz/nim.hpp"

#include <stdexcept>
#include <string>

namespace gdlz {

namespace {

constexpr const char* kPlayer1 = "Player1";
constexpr const char* kPlayer2 = "Player2";

std::string turn_prop(const std::string& agent) { return "turn(" + agent + ")"; }

std::string state_name(std::size_t turn_index,
                       const std::vector<std::int64_t>& heaps) {
  std::string out = "P" + std::to_string(turn_index + 1);
  for (auto h : heaps) out += "_" + std::to_string(h);
  return out;
}

// Odometer over heap tuples, low..high per component, last index fastest.
bool next_tuple(std::vector<std::int64_t>& t, const std::vector<std::int64_t>& lo,
                const std::vector<std::int64_t>& hi) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < hi[i]) {
      ++t[i];
      for (std::size_t j = i + 1; j < t.size(); ++j) t[j] = lo[j];
      return true;
    }
  }
  return false;
}

formula turn_atom(const std::string& agent) {
  return formula::prop("turn", {agent});
}

formula vals_of(const std::vector<std::int64_t>& hs) {
  std::vector<num_term> items;
  items.reserve(hs.size());
  for (auto h : hs) items.push_back(num_term::literal(h));
  return formula::vals(std::move(items));
}

}  // namespace

nim_game make_nim(const std::vector<std::int64_t>& gammas) {
  if (gammas.empty())
    throw std::invalid_argument("nim needs at least one heap");
  for (auto g : gammas)
    if (g < 1)
      throw std::invalid_argument("heap sizes must be >= 1, got " +
                                  std::to_string(g));
  // The model stores the update table over all state/joint-action pairs;
  // refuse sizes where that table stops being a desk-scale object.
  {
    double states = 2.0, actions_per_agent = 1.0;
    for (auto g : gammas) {
      states *= static_cast<double>(g) + 1.0;
      actions_per_agent += static_cast<double>(g);
    }
    if (states * actions_per_agent * actions_per_agent > 1e7)
      throw std::invalid_argument(
          "heap sizes produce more than 10^7 update entries; use smaller "
          "heaps");
  }
  const std::size_t k = gammas.size();
  const std::vector<std::string> agents{kPlayer1, kPlayer2};

  game_signature sig;
  sig.agents = agents;
  for (const auto& r : agents) {
    sig.actions[r] = {{"reduce", 2}, {"noop", 0}};
    sig.props.insert(turn_prop(r));
  }
  for (std::size_t i = 1; i <= k; ++i)
    sig.vars.push_back("heap_" + std::to_string(i));

  auto model = std::make_shared<extensional_model>(sig);

  const std::vector<std::int64_t> zeros(k, 0);
  std::vector<std::int64_t> lo(k, 0);

  // States: both turn assignments over every heap combination in range.
  for (std::size_t t = 0; t < agents.size(); ++t) {
    std::vector<std::int64_t> heaps(k, 0);
    do {
      model->add_state(state_name(t, heaps), {turn_prop(agents[t])}, heaps);
    } while (next_tuple(heaps, lo, gammas));
  }
  model->set_initial(*model->find_state(state_name(0, gammas)));
  for (std::size_t t = 0; t < agents.size(); ++t) {
    state_id w = *model->find_state(state_name(t, zeros));
    model->mark_terminal(w);
    // The player without the turn wins when everything is empty.
    model->add_goal(agents[1 - t], w);
  }

  // The finite action fragment: reduce(m,s) with s up to the m-th heap's
  // starting size is everything that is ever legal.
  std::vector<ground_action> acts[2];
  for (std::size_t t = 0; t < agents.size(); ++t) {
    for (std::size_t m = 1; m <= k; ++m)
      for (std::int64_t s = 1; s <= gammas[m - 1]; ++s)
        acts[t].push_back({agents[t], "reduce",
                           {static_cast<std::int64_t>(m), s}});
    acts[t].push_back({agents[t], "noop", {}});
  }

  for (std::size_t t = 0; t < agents.size(); ++t) {
    std::vector<std::int64_t> heaps(k, 0);
    do {
      state_id w = *model->find_state(state_name(t, heaps));
      // Legality: the turn player reduces within range, the other noops.
      for (std::size_t m = 1; m <= k; ++m)
        for (std::int64_t s = 1; s <= heaps[m - 1]; ++s)
          model->add_legal(
              w, {agents[t], "reduce", {static_cast<std::int64_t>(m), s}});
      model->add_legal(w, {agents[1 - t], "noop", {}});
      // Update over every joint action: (reduce, noop) shapes flip the
      // turn and subtract when in range; everything else is the identity.
      for (const auto& a1 : acts[0]) {
        for (const auto& a2 : acts[1]) {
          joint_action d{a1, a2};
          const ground_action* red = nullptr;
          if (a1.name == "reduce" && a2.name == "noop")
            red = &a1;
          else if (a1.name == "noop" && a2.name == "reduce")
            red = &a2;
          if (!red) {
            model->add_update(w, d, w);
            continue;
          }
          std::vector<std::int64_t> succ_heaps = heaps;
          const std::int64_t m = red->args[0];
          const std::int64_t s = red->args[1];
          if (s >= 1 && s <= heaps[static_cast<std::size_t>(m - 1)])
            succ_heaps[static_cast<std::size_t>(m - 1)] -= s;
          state_id succ = *model->find_state(state_name(1 - t, succ_heaps));
          model->add_update(w, d, succ);
        }
      }
    } while (next_tuple(heaps, lo, gammas));
  }

  // Rule schemas expanded over the finite ranges; everything desugared.
  rule_set rules;
  rules.name = "nim";
  for (auto g : gammas) rules.name += "_" + std::to_string(g);
  auto emit = [&](const formula& f) { rules.rules.push_back(desugar(f)); };

  std::vector<num_term> gamma_terms;
  for (auto g : gammas) gamma_terms.push_back(num_term::literal(g));

  // 1. initial <-> turn(Player1) and not turn(Player2) and <gammas>
  emit(formula::equivalence(
      formula::initial(),
      formula::conjoin({turn_atom(kPlayer1),
                        formula::negation(turn_atom(kPlayer2)),
                        vals_of(gammas)})));
  // 2. wins(r) <-> not turn(r) and turn(-r) and <0,...,0>
  for (std::size_t t = 0; t < agents.size(); ++t)
    emit(formula::equivalence(
        formula::wins(agents[t]),
        formula::conjoin({formula::negation(turn_atom(agents[t])),
                          turn_atom(agents[1 - t]), vals_of(zeros)})));
  // 3. terminal <-> <0,...,0>
  emit(formula::equivalence(formula::terminal(), vals_of(zeros)));
  // 4. legal(reduce^r(m,s)) <-> 1 <= s <= heap_m and turn(r)
  for (std::size_t t = 0; t < agents.size(); ++t)
    for (std::size_t m = 1; m <= k; ++m)
      for (std::int64_t s = 1; s <= gammas[m - 1]; ++s) {
        num_term s_lit = num_term::literal(s);
        num_term heap_m = num_term::variable("heap_" + std::to_string(m));
        emit(formula::equivalence(
            formula::legal(agents[t], "reduce",
                           {num_term::literal(static_cast<std::int64_t>(m)),
                            s_lit}),
            formula::conjoin({formula::less_equal(num_term::literal(1), s_lit),
                              formula::less_equal(s_lit, heap_m),
                              turn_atom(agents[t])})));
      }
  // 5. legal(noop^r()) <-> not turn(r)
  for (const auto& r : agents)
    emit(formula::equivalence(formula::legal(r, "noop", {}),
                              formula::negation(turn_atom(r))));
  // 6. terminal and <h1,...,hk> -> next(<h1,...,hk>)
  {
    std::vector<std::int64_t> ones(k, 1);
    std::vector<std::int64_t> h = ones;
    do {
      emit(formula::implication(
          formula::conjunction(formula::terminal(), vals_of(h)),
          formula::next_state(vals_of(h))));
    } while (next_tuple(h, ones, gammas));
  }
  // 7. not terminal and <h1,...,hk> and does(reduce^r(m,s))
  //      -> next(<h1,...,sub(h_m,s),...,hk>)
  {
    std::vector<std::int64_t> ones(k, 1);
    std::vector<std::int64_t> h = ones;
    do {
      for (std::size_t t = 0; t < agents.size(); ++t)
        for (std::size_t m = 1; m <= k; ++m)
          for (std::int64_t s = 1; s <= gammas[m - 1]; ++s) {
            std::vector<num_term> next_items;
            for (std::size_t i = 0; i < k; ++i) {
              num_term h_i = num_term::literal(h[i]);
              next_items.push_back(
                  i + 1 == m ? num_term::sub(h_i, num_term::literal(s)) : h_i);
            }
            emit(formula::implication(
                formula::conjoin(
                    {formula::negation(formula::terminal()), vals_of(h),
                     formula::does(
                         agents[t], "reduce",
                         {num_term::literal(static_cast<std::int64_t>(m)),
                          num_term::literal(s)})}),
                formula::next_state(formula::vals(std::move(next_items)))));
          }
    } while (next_tuple(h, ones, gammas));
  }
  // 8. turn(r) -> next(not turn(r)) and next(turn(-r))
  for (std::size_t t = 0; t < agents.size(); ++t)
    emit(formula::implication(
        turn_atom(agents[t]),
        formula::conjunction(
            formula::next_state(formula::negation(turn_atom(agents[t]))),
            formula::next_state(turn_atom(agents[1 - t])))));

  return {std::move(model), std::move(rules)};
}

}  // namespace gdlz
