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
//
// End-to-end checks for the headline guarantees: the worked <5,3> replay,
// the generated description holding in its model, action functionality
// and legality, truth preservation under both translations, evaluator
// oracle equivalence and cost, the size arithmetic, and the embedding
// round trip. One verdict line per criterion.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gdlz/analysis.hpp"
#include "gdlz/eval.hpp"
#include "gdlz/model_io.hpp"
#include "gdlz/nim.hpp"
#include "gdlz/parse.hpp"
#include "gdlz/translate.hpp"
#include "helpers.hpp"

using namespace gdlz;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_tmpdir;

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw check_failure(what);
}

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string out_file = g_tmpdir + "/cli_out.txt";
  std::string cmd = g_cli + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  if (output) *output = read_file(out_file);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// --------------------------------------------------------------------------
// 1. The worked <5,3> replay through the command line.

std::string criterion1() {
  auto start = clock_type::now();
  require(run_cli("nim --heaps 5,3 --out-prefix " + g_tmpdir + "/nim") == 0,
          "nim generation failed");
  write_file(g_tmpdir + "/fig2.path",
             "reduce^Player1(1,5);noop^Player2()\n"
             "noop^Player1();reduce^Player2(2,2)\n"
             "reduce^Player1(2,1);noop^Player2()\n");
  std::string trace;
  require(run_cli("run --model " + g_tmpdir + "/nim.model --actions " +
                      g_tmpdir + "/fig2.path",
                  &trace) == 0,
          "replay failed");

  const char* expected_vals[] = {"5,3", "0,3", "0,1", "0,0"};
  const char* expected_turn[] = {"turn(Player1)", "turn(Player2)",
                                 "turn(Player1)", "turn(Player2)"};
  std::istringstream is(trace);
  std::string line;
  int stage = -1;
  while (std::getline(is, line)) {
    if (line.rfind("STAGE ", 0) != 0) continue;
    ++stage;
    require(stage <= 3, "too many stages in the trace");
    require(line.find("vals=" + std::string(expected_vals[stage])) !=
                std::string::npos,
            "stage " + std::to_string(stage) + " valuation mismatch: " + line);
    require(line.find(expected_turn[stage]) != std::string::npos,
            "stage " + std::to_string(stage) + " turn mismatch: " + line);
    bool is_terminal = line.find(" terminal") != std::string::npos;
    require(is_terminal == (stage == 3),
            "terminal marker at the wrong stage: " + line);
  }
  require(stage == 3, "trace has fewer than four states");
  require(trace.find("complete; wins: Player1") != std::string::npos,
          "winner line missing");

  require(run_cli("check --model " + g_tmpdir + "/nim.model --path " +
                  g_tmpdir + "/fig2.path --formula \"wins(Player1)\" --stage 3") ==
              0,
          "wins(Player1) should check true at stage 3");
  std::string out;
  require(run_cli("check --model " + g_tmpdir + "/nim.model --path " +
                      g_tmpdir + "/fig2.path --formula \"wins(Player2)\" "
                      "--stage 3",
                  &out) == 1,
          "wins(Player2) should check false at stage 3");
  require(out.find("RESULT false") != std::string::npos,
          "machine-readable verdict line missing");

  double secs = seconds_since(start);
  require(secs < 1.0, "replay took " + std::to_string(secs) + "s");
  return "valuations, turns, terminal stage and winner reproduced in " +
         std::to_string(secs).substr(0, 5) + "s";
}

// --------------------------------------------------------------------------
// 2. The generated description holds in its own model; a broken rule is
// caught with a counterexample.

std::string criterion2() {
  auto start = clock_type::now();
  auto game = make_nim({3, 2});
  auto verdict = is_model_of(game.model, game.rules, 5);
  require(verdict.result == model_of_verdict::status::holds,
          "description does not hold in its model");
  require(verdict.paths_checked == 37, "expected 37 complete paths");

  rule_set broken = game.rules;
  broken.rules[3] = desugar(parse_formula("terminal iff vals(0,1)"));
  auto bad = is_model_of(game.model, broken, 5);
  require(bad.result == model_of_verdict::status::fails,
          "mutated terminal rule not rejected");
  require(bad.counterexample.has_value(), "no counterexample reported");
  require(bad.counterexample->rule_index == 3, "wrong rule blamed");
  require(!holds(bad.counterexample->witness, bad.counterexample->stage,
                 broken.rules[3]),
          "counterexample does not refute the rule");
  double secs = seconds_since(start);
  require(secs < 5.0, "took " + std::to_string(secs) + "s");
  return "all 8 schemas hold over 37 complete paths; mutation caught in " +
         std::to_string(secs).substr(0, 5) + "s";
}

// --------------------------------------------------------------------------
// 3. Performed actions are unique per agent and always legal.

std::string criterion3() {
  std::mt19937_64 rng(90210);
  std::size_t samples = 0, antecedents = 0;
  while (samples < 1200) {
    std::vector<std::int64_t> gammas;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) gammas.push_back(1 + rng() % 4);
    auto game = make_nim(gammas);
    auto universe = game.model->action_universe();
    testing::formula_generator gen(game.model->signature(), {}, rng());
    path p = testing::random_walk_path(game.model, rng);
    for (int i = 0; i < 8; ++i) {
      ++samples;
      std::size_t stage = rng() % (p.length() + 1);
      ground_action a;
      if (rng() % 2 == 0 && stage < p.length()) {
        a = p.joints[stage][rng() % game.model->signature().agents.size()];
      } else {
        a = universe[rng() % universe.size()];
      }
      std::vector<num_term> args;
      for (auto v : a.args) args.push_back(num_term::literal(v));
      if (!holds(p, stage, formula::does(a.agent, a.name, args))) continue;
      ++antecedents;
      require(holds(p, stage, formula::legal(a.agent, a.name, args)),
              "performed action " + a.to_string() + " is not legal");
      for (const auto& b : universe) {
        if (b.agent != a.agent || b == a) continue;
        std::vector<num_term> bargs;
        for (auto v : b.args) bargs.push_back(num_term::literal(v));
        require(!holds(p, stage, formula::does(b.agent, b.name, bargs)),
                "two actions performed by " + a.agent + " at one stage");
      }
    }
  }
  require(antecedents >= 300, "too few satisfied does-atoms to be meaningful");
  return std::to_string(samples) + " samples, " + std::to_string(antecedents) +
         " with does satisfied, zero violations";
}

// --------------------------------------------------------------------------
// 4. Path-restricted translation preserves truth on the worked run.

std::string criterion4() {
  auto fig = testing::make_fig2();
  gdl_artifacts art = translate_model_path(fig.run);
  const path& tp = *art.translated_path;

  std::vector<formula> corpus;
  for (const char* text : {
           "turn(Player1)", "initial", "terminal", "wins(Player1)",
           "legal(reduce^Player1(1,5))",   // performed at stage 0
           "legal(reduce^Player1(2,1))",   // legal, unperformed: else branch
           "does(noop^Player2())", "not terminal", "initial and terminal",
           "next(vals(0,3))", "heap_1 > heap_2", "heap_2 < heap_1",
           "heap_1 = 5", "vals(5,3)", "next(next(next(next(initial))))",
       })
    corpus.push_back(parse_formula(text));

  testing::formula_gen_options opts;
  opts.legal_positive_only = true;
  opts.simple_comparisons = true;
  opts.const_min = 0;
  opts.const_max = 5;
  testing::formula_generator gen(fig.game.model->signature(), opts, 424242);
  while (corpus.size() < 520) corpus.push_back(gen());

  std::size_t checked = 0, satisfied = 0, legal_else = 0;
  std::map<formula::kind, std::size_t> clause_seen;
  for (const auto& f : corpus) {
    for (std::size_t j = 0; j <= fig.run.length(); ++j) {
      formula_translation_stats stats;
      formula tf = translate_formula_path(f, fig.run, j, art, &stats);
      require(is_gdl_fragment(tf), "translation left the GDL fragment");
      if (stats.used_legal_else) ++legal_else;
      ++checked;
      if (!holds(fig.run, j, f)) continue;
      ++satisfied;
      require(holds(tp, j, tf),
              "truth not preserved at stage " + std::to_string(j) + " for " +
                  f.to_string());
    }
    for (const auto& s : subformulas(f)) ++clause_seen[s.node_kind()];
  }
  require(corpus.size() >= 500, "corpus too small");
  require(satisfied >= 400, "too few satisfied source formulas");
  require(legal_else > 0, "negated-legal branch not covered");
  for (formula::kind k :
       {formula::kind::prop, formula::kind::initial, formula::kind::terminal,
        formula::kind::wins, formula::kind::legal, formula::kind::does,
        formula::kind::negation, formula::kind::conjunction,
        formula::kind::next_state, formula::kind::less, formula::kind::greater,
        formula::kind::equal, formula::kind::vals})
    require(clause_seen[k] > 0, "a translation clause is not covered");
  return std::to_string(corpus.size()) + " formulas, " +
         std::to_string(satisfied) + "/" + std::to_string(checked) +
         " satisfied instances all preserved";
}

// --------------------------------------------------------------------------
// 5. Complete translation preserves truth for bounded formulas.

std::string criterion5() {
  auto start = clock_type::now();
  auto game = make_nim({2, 2});
  const auto& sig = game.model->signature();
  translation_bounds b{0, 2};
  gdl_artifacts art = translate_model_complete(game.model, b);
  auto runs = enumerate_complete_paths(game.model, 4);
  require(!runs.truncated, "enumeration truncated");
  std::vector<path> translated_runs;
  for (const auto& p : runs.paths)
    translated_runs.push_back(translate_path_complete(p, art));

  testing::formula_gen_options opts;
  opts.bounded_terms = true;
  opts.const_min = 0;
  opts.const_max = 2;
  testing::formula_generator gen(sig, opts, 777);
  std::size_t formulas = 0, satisfied = 0;
  while (formulas < 500) {
    formula f = gen();
    if (!is_bounded_formula(f, sig, b)) continue;
    ++formulas;
    formula tf = translate_formula_complete(f, sig, b, art);
    for (std::size_t pi = 0; pi < runs.paths.size(); ++pi) {
      const path& p = runs.paths[pi];
      for (std::size_t j = 0; j <= p.length(); ++j) {
        if (!holds(p, j, f)) continue;
        ++satisfied;
        require(holds(translated_runs[pi], j, tf),
                "truth not preserved for " + f.to_string());
      }
    }
  }
  require(satisfied >= 1000, "too few satisfied instances");
  double secs = seconds_since(start);
  require(secs < 30.0, "took " + std::to_string(secs) + "s");
  return std::to_string(formulas) + " bounded formulas over " +
         std::to_string(runs.paths.size()) + " runs, " +
         std::to_string(satisfied) + " satisfied instances preserved, " +
         std::to_string(secs).substr(0, 5) + "s";
}

// --------------------------------------------------------------------------
// 6. The table-driven evaluator agrees with plain recursion and scales.

std::string criterion6() {
  auto game = make_nim({3, 2});
  std::mt19937_64 rng(1234);
  testing::formula_generator gen(game.model->signature(), {}, 4321);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    path p = testing::random_walk_path(game.model, rng);
    for (int i = 0; i < 10; ++i, ++pairs) {
      formula f = gen();
      std::size_t stage = gen.pick(p.length() + 1);
      require(holds(p, stage, f) == testing::naive_holds(p, stage, f),
              "memoized and naive evaluation disagree on " + f.to_string());
    }
  }

  // A ten-step run and a formula with 10^4 atomic subformulas.
  auto big = make_nim({5, 5});
  std::vector<joint_action> joints;
  for (int i = 0; i < 10; ++i) {
    std::string reducer = i % 2 == 0 ? "Player1" : "Player2";
    std::string nooper = i % 2 == 0 ? "Player2" : "Player1";
    std::string heap = i < 5 ? "1" : "2";
    std::string joint = "reduce^" + reducer + "(" + heap + ",1);noop^" +
                        nooper + "()";
    if (reducer == "Player2")
      joint = "noop^" + nooper + "();reduce^" + reducer + "(" + heap + ",1)";
    joints.push_back(parse_joint_action(joint, big.model->signature()));
  }
  path long_run = build_path(big.model, joints);
  require(long_run.length() == 10 && long_run.complete(),
          "ten-step run not built");
  std::vector<formula> atoms;
  for (int i = 0; i < 10000; ++i)
    atoms.push_back(formula::greater(
        num_term::add(num_term::variable("heap_1"), num_term::literal(i)),
        num_term::literal(i - 3)));
  // Balanced conjunction: 10^4 distinct atoms at tree depth ~14.
  std::function<formula(std::size_t, std::size_t)> balance =
      [&](std::size_t lo, std::size_t hi) -> formula {
    if (hi - lo == 1) return atoms[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return formula::conjunction(balance(lo, mid), balance(mid, hi));
  };
  formula wide = balance(0, atoms.size());
  require(count_atoms(wide) == 10000, "atom count off");
  auto start = clock_type::now();
  bool v = holds(long_run, 0, wide);
  double secs = seconds_since(start);
  require(v, "the wide conjunction should hold");
  require(secs < 1.0, "evaluation took " + std::to_string(secs) + "s");
  return "1000+ oracle-equivalent pairs; 10^4-atom formula on a 10-step run "
         "in " +
         std::to_string(secs).substr(0, 5) + "s";
}

// --------------------------------------------------------------------------
// 7. Size arithmetic: inequality everywhere, exact closed form on the
// eligible subset, off-by-one surfaced and the recount pinned.

std::string criterion7() {
  auto fig = testing::make_fig2();

  auto rep = analyze_path_mode(fig.game.rules, fig.run, 0);
  require(rep.theorem3_inequality, "source count exceeds translated count");
  require(rep.eligible_match, "eligible closed form mismatch (game rules)");
  require(rep.eligible_rules > 0, "no eligible rules");

  rule_set mixed;
  for (const char* text :
       {"vals(0,0)", "vals(5,3)", "wins(Player1)", "turn(Player1) and heap_1 > 0",
        "not turn(Player2)", "does(noop^Player2())"})
    mixed.rules.push_back(desugar(parse_formula(text)));
  auto rep2 = analyze_path_mode(mixed, fig.run, 0);
  require(rep2.k == 2, "vals rule count wrong");
  require(rep2.match, "closed form not exact on the substitution-free corpus");
  require(rep2.predicted_count == rep2.translated_count &&
              rep2.translated_count == 9,
          "expected 9 translated atoms, got " +
              std::to_string(rep2.translated_count));
  require(rep2.theorem3_inequality, "inequality violated");

  auto game22 = make_nim({2, 2});
  rule_set probe;
  probe.rules.push_back(desugar(parse_formula("heap_1 < 2")));
  auto rep3 =
      analyze_complete_mode(probe, game22.model->signature(), {0, 2});
  require(rep3.predicted_count == 4, "paper form should predict 4");
  require(rep3.translated_count == 6, "exact recount should be 6");
  require(!rep3.match && rep3.theorem3_inequality,
          "off-by-one not surfaced correctly");

  // The update schemas carry sub() terms that dip to -1, so the full
  // description is bounded only from that lower bound on.
  auto rep4 =
      analyze_complete_mode(game22.rules, game22.model->signature(), {-1, 2});
  require(rep4.source_count == 278, "source recount moved off 278");
  require(rep4.translated_count == 582,
          "pinned complete-mode recount moved off 582: " +
              std::to_string(rep4.translated_count));
  require(rep4.theorem3_inequality && rep4.eligible_match,
          "complete-mode report inconsistent");
  return "inequality + exact path closed form + pinned recounts (6, 582)";
}

// --------------------------------------------------------------------------
// 8. Translated runs survive the embedding unchanged.

std::string criterion8() {
  auto fig = testing::make_fig2();
  gdl_artifacts art = translate_model_path(fig.run);
  auto embedded = embed_gdl(art.model);
  const path& before = *art.translated_path;
  path after = build_path(embedded, before.joints);

  testing::formula_gen_options opts;
  opts.allow_vals = false;
  opts.allow_comparisons = false;
  testing::formula_generator gen(embedded->signature(), opts, 2468);
  std::size_t agreed = 0;
  for (int i = 0; i < 200; ++i) {
    formula f = gen();
    require(is_gdl_fragment(f), "generator left the GDL fragment");
    for (std::size_t j = 0; j <= before.length(); ++j) {
      require(holds(before, j, f) == holds(after, j, f),
              "verdict changed by the embedding for " + f.to_string());
      ++agreed;
    }
  }
  return "200 formulas x 4 stages: " + std::to_string(agreed) +
         " identical verdicts";
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  char tmpl[] = "/tmp/gdlz_acceptance_XXXXXX";
  if (char* dir = mkdtemp(tmpl)) g_tmpdir = dir;

  struct criterion {
    int id;
    const char* title;
    std::function<std::string()> fn;
  };
  std::vector<criterion> criteria{
      {1, "worked <5,3> replay through the CLI", criterion1},
      {2, "generated description holds; mutation caught", criterion2},
      {3, "performed actions unique and legal", criterion3},
      {4, "path-restricted translation preserves truth", criterion4},
      {5, "complete translation preserves truth", criterion5},
      {6, "evaluator oracle equivalence and cost", criterion6},
      {7, "description size arithmetic", criterion7},
      {8, "embedding round trip", criterion8},
  };

  int failures = 0;
  for (auto& c : criteria) {
    if (c.id == 1 && g_cli.empty()) {
      std::cout << "FAIL criterion 1: " << c.title << " -- --cli not given\n";
      ++failures;
      continue;
    }
    try {
      std::string detail = c.fn();
      std::cout << "PASS criterion " << c.id << ": " << c.title << " -- "
                << detail << "\n";
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << c.id << ": " << c.title << " -- "
                << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
