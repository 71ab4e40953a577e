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
// Drives the installed command-line tool end to end: exit codes, verdict
// lines, file outputs and their reloadability, and byte determinism.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "gdlz/eval.hpp"
#include "gdlz/model_io.hpp"
#include "gdlz/parse.hpp"

namespace {

std::string g_cli;
std::string g_dir;
int g_failures = 0;

struct result {
  int code = -1;
  std::string output;
};

result run(const std::string& args, const std::string& stdin_text = "") {
  std::string out_file = g_dir + "/out.txt";
  std::string cmd = "GDLZ_COLOR=0 " + g_cli + " " + args;
  if (!stdin_text.empty()) {
    gdlz::write_file(g_dir + "/stdin.txt", stdin_text);
    cmd += " < " + g_dir + "/stdin.txt";
  }
  cmd += " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, gdlz::read_file(out_file)};
}

void expect(bool cond, const std::string& what) {
  if (cond) return;
  ++g_failures;
  std::cout << "FAIL: " << what << "\n";
}

void expect_contains(const result& r, const std::string& needle,
                     const std::string& what) {
  expect(r.output.find(needle) != std::string::npos,
         what + " (missing '" + needle + "' in: " + r.output.substr(0, 400) +
             ")");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  if (g_cli.empty()) {
    std::cout << "usage: cli_integration --cli <path>\n";
    return 1;
  }
  char tmpl[] = "/tmp/gdlz_cli_XXXXXX";
  g_dir = mkdtemp(tmpl);

  // parse: echo, syntax errors, conformance reports
  {
    auto r = run("parse \"vals(0,0)\"");
    expect(r.code == 0, "parse exit code");
    expect_contains(r, "vals(0,0)", "parse echoes the canonical form");

    r = run("parse \"vals(0,\"");
    expect(r.code == 2, "syntax errors exit 2");
    expect_contains(r, "syntax error", "syntax error message");
    expect_contains(r, "1:8", "error position");
  }

  // nim: file outputs and the gamma >= 1 guard
  {
    auto r = run("nim --heaps 2,2 --out-prefix " + g_dir + "/nim");
    expect(r.code == 0, "nim exit code");
    r = run("nim --heaps 0 --out-prefix " + g_dir + "/zero");
    expect(r.code == 2, "gamma >= 1 enforced");

    r = run("parse --rules " + g_dir + "/nim.rules --signature " + g_dir +
            "/nim.model");
    expect(r.code == 0, "generated rules conform to the generated model");
    expect_contains(r, "rule 0: ok", "per-rule conformance report");
  }

  // run: replay, enumerate, interactive
  {
    gdlz::write_file(g_dir + "/play.path",
                     "reduce^Player1(1,2);noop^Player2()\n"
                     "noop^Player1();reduce^Player2(2,2)\n");
    auto r = run("run --model " + g_dir + "/nim.model --actions " + g_dir +
                 "/play.path");
    expect(r.code == 0, "replay exit code");
    // Player1 holds the turn at the empty position, so Player2 wins.
    expect_contains(r, "complete; wins: Player2", "winner line");

    gdlz::write_file(g_dir + "/bad.path", "reduce^Player1(1,9);noop^Player2()\n");
    r = run("run --model " + g_dir + "/nim.model --actions " + g_dir +
            "/bad.path");
    expect(r.code == 1, "illegal replay exits 1");
    expect_contains(r, "stage 1", "stage named");
    expect_contains(r, "Player1", "agent named");

    r = run("nim --heaps 2 --out-prefix " + g_dir + "/two");
    r = run("run --model " + g_dir + "/two.model --enumerate --max-depth 4");
    expect(r.code == 0, "enumerate exit code");
    expect_contains(r, "2 complete paths", "enumeration count");

    r = run("run --model " + g_dir + "/two.model --interactive --rules " +
                g_dir + "/two.rules",
            "reduce^Player1(1,2);noop^Player2()\n");
    expect(r.code == 0, "interactive exit code");
    expect_contains(r, "legal:", "interactive legality set");
    expect_contains(r, "rule 0: true", "interactive rule verdicts");
    expect_contains(r, "complete; wins: Player1", "interactive final line");

    r = run("run --model " + g_dir + "/two.model --enumerate --actions " +
            g_dir + "/play.path");
    expect(r.code == 2, "conflicting run modes rejected");
    expect_contains(r, "mutually exclusive", "conflict message");

    // A bad interactive line reports and reprompts.
    r = run("run --model " + g_dir + "/two.model --interactive",
            "nonsense\nreduce^Player1(1,2);noop^Player2()\n");
    expect(r.code == 0, "interactive recovers from bad input");
    expect_contains(r, "error:", "interactive error message");
    expect_contains(r, "complete; wins: Player1", "game still finishes");
  }

  // deterministic generation: identical bytes on a second run
  {
    auto first_model = gdlz::read_file(g_dir + "/nim.model");
    auto first_rules = gdlz::read_file(g_dir + "/nim.rules");
    auto r = run("nim --heaps 2,2 --out-prefix " + g_dir + "/nim");
    expect(r.code == 0, "nim regeneration");
    expect(gdlz::read_file(g_dir + "/nim.model") == first_model &&
               gdlz::read_file(g_dir + "/nim.rules") == first_rules,
           "nim outputs are byte-deterministic");
  }

  // check: formulas, global, is-model-of
  {
    gdlz::write_file(g_dir + "/fig.path",
                     "reduce^Player1(1,2);noop^Player2()\n"
                     "noop^Player1();reduce^Player2(2,2)\n");
    auto r = run("check --model " + g_dir + "/nim.model --path " + g_dir +
                 "/fig.path --formula \"wins(Player2)\" --stage 2");
    expect(r.code == 0, "true check exits 0");
    expect_contains(r, "RESULT true", "RESULT true line");

    r = run("check --model " + g_dir + "/nim.model --path " + g_dir +
            "/fig.path --formula terminal --global");
    expect(r.code == 1, "false check exits 1");
    expect_contains(r, "RESULT false", "RESULT false line");

    r = run("check --model " + g_dir + "/nim.model --is-model-of " + g_dir +
            "/nim.rules --max-depth 4");
    expect(r.code == 0, "is-model-of holds exits 0");
    expect_contains(r, "RESULT holds", "RESULT holds line");

    gdlz::write_file(g_dir + "/broken.rules", "terminal iff vals(0,1)\n");
    r = run("check --model " + g_dir + "/nim.model --is-model-of " + g_dir +
            "/broken.rules --max-depth 4");
    expect(r.code == 1, "is-model-of fails exits 1");
    expect_contains(r, "RESULT fails", "RESULT fails line");
    expect_contains(r, "counterexample", "counterexample reported");

    r = run("check --model " + g_dir + "/nim.model --is-model-of " + g_dir +
            "/nim.rules --max-depth 0");
    expect(r.code == 1, "inconclusive exits 1");
    expect_contains(r, "RESULT inconclusive", "RESULT inconclusive line");
  }

  // translate: path mode writes reloadable artifacts, deterministically
  {
    gdlz::write_file(g_dir + "/probe.rules",
                     "vals(2,2)\nlegal(reduce^Player1(1,1))\nheap_1 = heap_2\n");
    std::string base = "translate --mode path --model " + g_dir +
                       "/nim.model --path " + g_dir + "/fig.path --rules " +
                       g_dir + "/probe.rules --out-prefix " + g_dir + "/t";
    auto r = run(base);
    expect(r.code == 0, "path translate exit code");
    for (const char* suffix : {".model", ".path", ".rules", ".actionmap.tsv"})
      expect_contains(r, std::string("wrote ") + g_dir + "/t" + suffix,
                      "translate reports outputs");

    auto first_model = gdlz::read_file(g_dir + "/t.model");
    auto first_rules = gdlz::read_file(g_dir + "/t.rules");
    r = run(base);
    expect(gdlz::read_file(g_dir + "/t.model") == first_model &&
               gdlz::read_file(g_dir + "/t.rules") == first_rules,
           "translate outputs are byte-deterministic");

    // The translated artifacts reload and replay: the path is complete
    // and the translated rules all conform to the translated signature.
    auto tm = gdlz::load_model(g_dir + "/t.model");
    auto joints =
        gdlz::load_joint_actions(g_dir + "/t.path", tm->signature());
    gdlz::path tp = gdlz::build_path(tm, joints);
    expect(tp.complete(), "translated path is complete");
    auto trules = gdlz::load_rules(g_dir + "/t.rules");
    expect(trules.rules.size() == 3, "three translated rules");
    for (const auto& f : trules.rules)
      expect(gdlz::check_formula(tm->signature(), f).empty(),
             "translated rule conforms to the translated signature");
    // The unperformed-action vocabulary survives the file round trip.
    expect(gdlz::holds(tp, 0, trules.rules[1]),
           "negated-legal translation holds in the reloaded model");

    r = run("translate --mode complete --model " + g_dir +
            "/nim.model --zmin 0 --zmax 1 --out-prefix " + g_dir + "/c");
    expect(r.code == 2, "bounds violation exits 2");
    expect_contains(r, "condition (i)", "violated condition cited");

    r = run("translate --mode complete --model " + g_dir +
            "/nim.model --zmin 0 --zmax 2 --formula \"vals(0,0)\" "
            "--out-prefix " + g_dir + "/c");
    expect(r.code == 0, "complete translate exit code");
    expect_contains(r, "heap_1(0) and heap_2(0)", "translated formula echoed");
  }

  // analyze: key=value report plus table
  {
    gdlz::write_file(g_dir + "/vals.rules", "vals(0,0)\n");
    auto r = run("analyze --rules " + g_dir + "/vals.rules --mode path "
                 "--model " + g_dir + "/nim.model --path " + g_dir +
                 "/fig.path");
    expect(r.code == 0, "analyze exit code");
    expect_contains(r, "source_count=1", "source count");
    expect_contains(r, "translated_count=2", "translated count");
    expect_contains(r, "match=true", "match flag");

    gdlz::write_file(g_dir + "/empty.rules", "# nothing here\n");
    r = run("analyze --rules " + g_dir + "/empty.rules --mode path --model " +
            g_dir + "/nim.model --path " + g_dir + "/fig.path");
    expect(r.code == 0, "empty rules analyze");
    expect_contains(r, "source_count=0", "zero counts");
    expect_contains(r, "match=true", "trivial match");

    r = run("analyze --rules " + g_dir + "/vals.rules --mode complete "
            "--model " + g_dir + "/nim.model --zmin 0 --zmax 2");
    expect(r.code == 0, "complete analyze exit code");
    expect_contains(r, "mode=complete", "complete mode report");
  }

  if (g_failures == 0) {
    std::cout << "cli integration: all checks passed\n";
    return 0;
  }
  std::cout << "cli integration: " << g_failures << " checks failed\n";
  return 1;
}
