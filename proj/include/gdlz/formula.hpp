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
#include <memory>
#include <string>
#include <vector>

namespace gdlz {

// Numerical term: an integer literal, a state variable, or an
// add/sub/min/max composition. Immutable; cheap to copy (shared nodes).
class num_term {
 public:
  enum class kind { literal, variable, add, sub, min, max };

  static num_term literal(std::int64_t value);
  static num_term variable(std::string name);
  static num_term add(num_term lhs, num_term rhs);
  static num_term sub(num_term lhs, num_term rhs);
  static num_term min(num_term lhs, num_term rhs);
  static num_term max(num_term lhs, num_term rhs);

  kind op() const;
  bool is_literal() const { return op() == kind::literal; }
  bool is_variable() const { return op() == kind::variable; }
  bool is_compound() const { return !is_literal() && !is_variable(); }

  std::int64_t value() const;          // literal only
  const std::string& var_name() const; // variable only
  const num_term& lhs() const;         // compound only
  const num_term& rhs() const;         // compound only

  // True if no variable occurs anywhere in the term.
  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const num_term& a, const num_term& b);
  friend bool operator!=(const num_term& a, const num_term& b) { return !(a == b); }

 private:
  struct node;
  explicit num_term(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  static num_term binary(kind k, num_term lhs, num_term rhs);
  std::shared_ptr<const node> node_;
};

// Formula AST. The core constructors are prop, initial, terminal, wins,
// legal, does, negation, conjunction, next_state, greater/less/equal and
// vals. The remaining constructors are surface sugar that desugar()
// rewrites into the core fragment.
class formula {
 public:
  enum class kind {
    // core
    prop,
    initial,
    terminal,
    wins,
    legal,
    does,
    negation,
    conjunction,
    next_state,
    greater,
    less,
    equal,
    vals,
    // sugar
    disjunction,
    implication,
    equivalence,
    verum,
    falsum,
    less_equal,
    greater_equal,
    not_equal,
  };

  static formula prop(std::string name, std::vector<std::string> args = {});
  static formula initial();
  static formula terminal();
  static formula wins(std::string agent);
  static formula legal(std::string agent, std::string action,
                       std::vector<num_term> args);
  static formula does(std::string agent, std::string action,
                      std::vector<num_term> args);
  static formula negation(formula f);
  static formula conjunction(formula lhs, formula rhs);
  static formula next_state(formula f);
  static formula greater(num_term lhs, num_term rhs);
  static formula less(num_term lhs, num_term rhs);
  static formula equal(num_term lhs, num_term rhs);
  static formula vals(std::vector<num_term> items);

  static formula disjunction(formula lhs, formula rhs);
  static formula implication(formula lhs, formula rhs);
  static formula equivalence(formula lhs, formula rhs);
  static formula verum();
  static formula falsum();
  static formula less_equal(num_term lhs, num_term rhs);
  static formula greater_equal(num_term lhs, num_term rhs);
  static formula not_equal(num_term lhs, num_term rhs);

  // Left-associative folds; conjoin({}) is verum, disjoin({}) is falsum.
  static formula conjoin(const std::vector<formula>& fs);
  static formula disjoin(const std::vector<formula>& fs);

  kind node_kind() const;

  // Atomic per the satisfaction semantics: anything that is not a
  // connective node (sugar connectives included).
  bool is_atomic() const;
  bool is_unary() const;   // negation / next_state
  bool is_binary() const;  // conjunction / sugar binary connectives
  bool is_comparison() const;

  const formula& child() const;  // unary
  const formula& lhs() const;    // binary
  const formula& rhs() const;    // binary
  const std::string& prop_name() const;
  const std::vector<std::string>& prop_args() const;
  const std::string& agent() const;        // wins/legal/does
  const std::string& action_name() const;  // legal/does
  const std::vector<num_term>& action_args() const;
  const num_term& term_lhs() const;  // comparisons
  const num_term& term_rhs() const;
  const std::vector<num_term>& items() const;  // vals

  // Canonical text of a prop atom, e.g. "turn(Player1)" or "p".
  std::string prop_key() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const formula& a, const formula& b);
  friend bool operator!=(const formula& a, const formula& b) { return !(a == b); }

 private:
  struct node;
  explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  static formula keyword(kind k);
  static formula action_atom(kind k, std::string agent, std::string action,
                             std::vector<num_term> args);
  static formula unary(kind k, formula f);
  static formula binary(kind k, formula lhs, formula rhs);
  static formula comparison(kind k, num_term lhs, num_term rhs);
  std::shared_ptr<const node> node_;
};

struct formula_hasher {
  std::size_t operator()(const formula& f) const { return f.hash(); }
};
struct num_term_hasher {
  std::size_t operator()(const num_term& t) const { return t.hash(); }
};

// An ordered game description: one formula per rule.
struct rule_set {
  std::string name;
  std::vector<formula> rules;
};

// Rewrites sugar connectives and comparisons into the core fragment:
//   a or b        -> not (not a and not b)
//   a implies b   -> not (a and not b)
//   a iff b       -> not (a and not b) and not (b and not a)
//   true / false  -> not (initial and not initial) / initial and not initial
//   z1 <= z2      -> not (not (z1 < z2) and not (z1 = z2))
//   z1 >= z2      -> not (not (z1 > z2) and not (z1 = z2))
//   z1 != z2      -> not (not (z1 > z2) and not (z1 < z2))
formula desugar(const formula& f);

// True iff the formula uses only core constructors.
bool is_core(const formula& f);

// True iff the formula lies in the plain-GDL fragment: no vals, no
// comparisons, and every legal/does carries an empty argument list.
// With core_only set, sugar connectives are rejected as well.
bool is_gdl_fragment(const formula& f, bool core_only = false);

// Subformula closure: (i) f itself; (ii) unary nodes recurse into the
// child; (iii) binary nodes recurse into both sides. Structurally
// distinct formulas only, in first-visit order.
std::vector<formula> subformulas(const formula& f);

// Number of atomic-formula occurrences (leaves under the connectives).
std::size_t count_atoms(const formula& f);

}  // namespace gdlz
