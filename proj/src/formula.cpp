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

#include "gdlz/formula.hpp"

#include <cassert>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace gdlz {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) {
  return std::hash<std::string>{}(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// num_term

struct num_term::node {
  kind k = kind::literal;
  std::int64_t value = 0;
  std::string name;
  std::vector<num_term> kids;  // size 2 for compounds
  std::size_t hash = 0;
  bool ground = true;
};

num_term num_term::literal(std::int64_t value) {
  auto n = std::make_shared<node>();
  n->k = kind::literal;
  n->value = value;
  n->hash = mix(1, std::hash<std::int64_t>{}(value));
  return num_term(std::move(n));
}

num_term num_term::variable(std::string name) {
  auto n = std::make_shared<node>();
  n->k = kind::variable;
  n->name = std::move(name);
  n->hash = mix(2, hash_string(n->name));
  n->ground = false;
  return num_term(std::move(n));
}

num_term num_term::binary(kind k, num_term lhs, num_term rhs) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->ground = lhs.is_ground() && rhs.is_ground();
  n->hash = mix(mix(static_cast<std::size_t>(k) + 11, lhs.hash()), rhs.hash());
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return num_term(std::move(n));
}

num_term num_term::add(num_term l, num_term r) {
  return binary(kind::add, std::move(l), std::move(r));
}
num_term num_term::sub(num_term l, num_term r) {
  return binary(kind::sub, std::move(l), std::move(r));
}
num_term num_term::min(num_term l, num_term r) {
  return binary(kind::min, std::move(l), std::move(r));
}
num_term num_term::max(num_term l, num_term r) {
  return binary(kind::max, std::move(l), std::move(r));
}

num_term::kind num_term::op() const { return node_->k; }

std::int64_t num_term::value() const {
  assert(is_literal());
  return node_->value;
}

const std::string& num_term::var_name() const {
  assert(is_variable());
  return node_->name;
}

const num_term& num_term::lhs() const {
  assert(is_compound());
  return node_->kids[0];
}

const num_term& num_term::rhs() const {
  assert(is_compound());
  return node_->kids[1];
}

bool num_term::is_ground() const { return node_->ground; }

void num_term::collect_variables(std::vector<std::string>& out) const {
  switch (op()) {
    case kind::literal:
      return;
    case kind::variable:
      out.push_back(var_name());
      return;
    default:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
  }
}

std::size_t num_term::hash() const { return node_->hash; }

std::string num_term::to_string() const {
  switch (op()) {
    case kind::literal:
      return std::to_string(value());
    case kind::variable:
      return var_name();
    case kind::add:
      return "add(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case kind::sub:
      return "sub(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case kind::min:
      return "min(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case kind::max:
      return "max(" + lhs().to_string() + "," + rhs().to_string() + ")";
  }
  return {};
}

bool operator==(const num_term& a, const num_term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op()) return false;
  switch (a.op()) {
    case num_term::kind::literal:
      return a.value() == b.value();
    case num_term::kind::variable:
      return a.var_name() == b.var_name();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// formula

struct formula::node {
  kind k = kind::initial;
  std::string a;                       // prop name / agent
  std::string b;                       // action name
  std::vector<std::string> prop_args;  // prop
  std::vector<num_term> terms;         // action args / vals items / cmp sides
  std::vector<formula> kids;           // connective children
  std::size_t hash = 0;
};

namespace {

std::size_t hash_terms(std::size_t seed, const std::vector<num_term>& ts) {
  for (const auto& t : ts) seed = mix(seed, t.hash());
  return mix(seed, ts.size() + 101);
}

}  // namespace

formula formula::prop(std::string name, std::vector<std::string> args) {
  auto n = std::make_shared<node>();
  n->k = kind::prop;
  n->a = std::move(name);
  n->prop_args = std::move(args);
  std::size_t h = mix(3, hash_string(n->a));
  for (const auto& s : n->prop_args) h = mix(h, hash_string(s));
  n->hash = h;
  return formula(std::move(n));
}

formula formula::keyword(kind k) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->hash = mix(4, static_cast<std::size_t>(k) + 7);
  return formula(std::move(n));
}

formula formula::initial() { return keyword(kind::initial); }
formula formula::terminal() { return keyword(kind::terminal); }
formula formula::verum() { return keyword(kind::verum); }
formula formula::falsum() { return keyword(kind::falsum); }

formula formula::wins(std::string agent) {
  auto n = std::make_shared<node>();
  n->k = kind::wins;
  n->a = std::move(agent);
  n->hash = mix(5, hash_string(n->a));
  return formula(std::move(n));
}

formula formula::action_atom(kind k, std::string agent, std::string action,
                             std::vector<num_term> args) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->a = std::move(agent);
  n->b = std::move(action);
  n->terms = std::move(args);
  n->hash = hash_terms(
      mix(mix(static_cast<std::size_t>(k) + 13, hash_string(n->a)),
          hash_string(n->b)),
      n->terms);
  return formula(std::move(n));
}

formula formula::legal(std::string agent, std::string action,
                       std::vector<num_term> args) {
  return action_atom(kind::legal, std::move(agent), std::move(action),
                     std::move(args));
}

formula formula::does(std::string agent, std::string action,
                      std::vector<num_term> args) {
  return action_atom(kind::does, std::move(agent), std::move(action),
                     std::move(args));
}

formula formula::unary(kind k, formula f) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->hash = mix(static_cast<std::size_t>(k) + 17, f.hash());
  n->kids.push_back(std::move(f));
  return formula(std::move(n));
}

formula formula::binary(kind k, formula l, formula r) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->hash = mix(mix(static_cast<std::size_t>(k) + 19, l.hash()), r.hash());
  n->kids.push_back(std::move(l));
  n->kids.push_back(std::move(r));
  return formula(std::move(n));
}

formula formula::comparison(kind k, num_term l, num_term r) {
  auto n = std::make_shared<node>();
  n->k = k;
  n->terms.push_back(std::move(l));
  n->terms.push_back(std::move(r));
  n->hash = hash_terms(static_cast<std::size_t>(k) + 23, n->terms);
  return formula(std::move(n));
}

formula formula::negation(formula f) { return unary(kind::negation, std::move(f)); }
formula formula::next_state(formula f) {
  return unary(kind::next_state, std::move(f));
}
formula formula::conjunction(formula l, formula r) {
  return binary(kind::conjunction, std::move(l), std::move(r));
}
formula formula::disjunction(formula l, formula r) {
  return binary(kind::disjunction, std::move(l), std::move(r));
}
formula formula::implication(formula l, formula r) {
  return binary(kind::implication, std::move(l), std::move(r));
}
formula formula::equivalence(formula l, formula r) {
  return binary(kind::equivalence, std::move(l), std::move(r));
}
formula formula::greater(num_term l, num_term r) {
  return comparison(kind::greater, std::move(l), std::move(r));
}
formula formula::less(num_term l, num_term r) {
  return comparison(kind::less, std::move(l), std::move(r));
}
formula formula::equal(num_term l, num_term r) {
  return comparison(kind::equal, std::move(l), std::move(r));
}
formula formula::less_equal(num_term l, num_term r) {
  return comparison(kind::less_equal, std::move(l), std::move(r));
}
formula formula::greater_equal(num_term l, num_term r) {
  return comparison(kind::greater_equal, std::move(l), std::move(r));
}
formula formula::not_equal(num_term l, num_term r) {
  return comparison(kind::not_equal, std::move(l), std::move(r));
}

formula formula::vals(std::vector<num_term> items) {
  auto n = std::make_shared<node>();
  n->k = kind::vals;
  n->terms = std::move(items);
  n->hash = hash_terms(29, n->terms);
  return formula(std::move(n));
}

formula formula::conjoin(const std::vector<formula>& fs) {
  if (fs.empty()) return verum();
  formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

formula formula::disjoin(const std::vector<formula>& fs) {
  if (fs.empty()) return falsum();
  formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

formula::kind formula::node_kind() const { return node_->k; }

bool formula::is_unary() const {
  return node_kind() == kind::negation || node_kind() == kind::next_state;
}

bool formula::is_binary() const {
  switch (node_kind()) {
    case kind::conjunction:
    case kind::disjunction:
    case kind::implication:
    case kind::equivalence:
      return true;
    default:
      return false;
  }
}

bool formula::is_atomic() const { return !is_unary() && !is_binary(); }

bool formula::is_comparison() const {
  switch (node_kind()) {
    case kind::greater:
    case kind::less:
    case kind::equal:
    case kind::less_equal:
    case kind::greater_equal:
    case kind::not_equal:
      return true;
    default:
      return false;
  }
}

const formula& formula::child() const {
  assert(is_unary());
  return node_->kids[0];
}
const formula& formula::lhs() const {
  assert(is_binary());
  return node_->kids[0];
}
const formula& formula::rhs() const {
  assert(is_binary());
  return node_->kids[1];
}
const std::string& formula::prop_name() const {
  assert(node_kind() == kind::prop);
  return node_->a;
}
const std::vector<std::string>& formula::prop_args() const {
  assert(node_kind() == kind::prop);
  return node_->prop_args;
}
const std::string& formula::agent() const {
  assert(node_kind() == kind::wins || node_kind() == kind::legal ||
         node_kind() == kind::does);
  return node_->a;
}
const std::string& formula::action_name() const {
  assert(node_kind() == kind::legal || node_kind() == kind::does);
  return node_->b;
}
const std::vector<num_term>& formula::action_args() const {
  assert(node_kind() == kind::legal || node_kind() == kind::does);
  return node_->terms;
}
const num_term& formula::term_lhs() const {
  assert(is_comparison());
  return node_->terms[0];
}
const num_term& formula::term_rhs() const {
  assert(is_comparison());
  return node_->terms[1];
}
const std::vector<num_term>& formula::items() const {
  assert(node_kind() == kind::vals);
  return node_->terms;
}

std::string formula::prop_key() const {
  assert(node_kind() == kind::prop);
  if (node_->prop_args.empty()) return node_->a;
  std::string out = node_->a;
  out += '(';
  for (std::size_t i = 0; i < node_->prop_args.size(); ++i) {
    if (i) out += ',';
    out += node_->prop_args[i];
  }
  out += ')';
  return out;
}

std::size_t formula::hash() const { return node_->hash; }

bool operator==(const formula& a, const formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.node_kind() != b.node_kind()) return false;
  using kind = formula::kind;
  switch (a.node_kind()) {
    case kind::initial:
    case kind::terminal:
    case kind::verum:
    case kind::falsum:
      return true;
    case kind::prop:
      return a.prop_name() == b.prop_name() && a.prop_args() == b.prop_args();
    case kind::wins:
      return a.agent() == b.agent();
    case kind::legal:
    case kind::does:
      return a.agent() == b.agent() && a.action_name() == b.action_name() &&
             a.action_args() == b.action_args();
    case kind::negation:
    case kind::next_state:
      return a.child() == b.child();
    case kind::conjunction:
    case kind::disjunction:
    case kind::implication:
    case kind::equivalence:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default:
      if (a.is_comparison())
        return a.term_lhs() == b.term_lhs() && a.term_rhs() == b.term_rhs();
      return a.items() == b.items();  // vals
  }
}

// ---------------------------------------------------------------------------
// printing

namespace {

// Binding tightness; atoms (including comparisons) are self-delimiting.
int precedence(formula::kind k) {
  switch (k) {
    case formula::kind::equivalence:
      return 1;
    case formula::kind::implication:
      return 2;
    case formula::kind::disjunction:
      return 3;
    case formula::kind::conjunction:
      return 4;
    case formula::kind::negation:
      return 5;
    default:
      return 6;
  }
}

const char* comparison_op(formula::kind k) {
  switch (k) {
    case formula::kind::greater:
      return " > ";
    case formula::kind::less:
      return " < ";
    case formula::kind::equal:
      return " = ";
    case formula::kind::less_equal:
      return " <= ";
    case formula::kind::greater_equal:
      return " >= ";
    case formula::kind::not_equal:
      return " != ";
    default:
      return "";
  }
}

void print_numlist(std::ostream& os, const std::vector<num_term>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) os << ',';
    os << ts[i].to_string();
  }
}

void print_action_atom(std::ostream& os, const char* head, const formula& f) {
  os << head << '(' << f.action_name() << '^' << f.agent() << '(';
  print_numlist(os, f.action_args());
  os << "))";
}

void print_formula(std::ostream& os, const formula& f, int parent,
                   bool right_of_same_prec) {
  using kind = formula::kind;
  const kind k = f.node_kind();
  const int prec = precedence(k);
  const bool parens = !f.is_atomic() &&
                      (prec < parent || (prec == parent && right_of_same_prec));
  if (parens) os << '(';
  switch (k) {
    case kind::initial:
      os << "initial";
      break;
    case kind::terminal:
      os << "terminal";
      break;
    case kind::verum:
      os << "true";
      break;
    case kind::falsum:
      os << "false";
      break;
    case kind::prop:
      os << f.prop_key();
      break;
    case kind::wins:
      os << "wins(" << f.agent() << ')';
      break;
    case kind::legal:
      print_action_atom(os, "legal", f);
      break;
    case kind::does:
      print_action_atom(os, "does", f);
      break;
    case kind::vals:
      os << "vals(";
      print_numlist(os, f.items());
      os << ')';
      break;
    case kind::next_state:
      os << "next(";
      print_formula(os, f.child(), 0, false);
      os << ')';
      break;
    case kind::negation:
      os << "not ";
      print_formula(os, f.child(), prec, false);
      break;
    case kind::conjunction:
    case kind::disjunction: {
      // Left-associative: a right child of equal precedence needs parens.
      const char* op = k == kind::conjunction ? " and " : " or ";
      print_formula(os, f.lhs(), prec, false);
      os << op;
      print_formula(os, f.rhs(), prec, true);
      break;
    }
    case kind::implication:
    case kind::equivalence: {
      // Right-associative.
      const char* op = k == kind::implication ? " implies " : " iff ";
      print_formula(os, f.lhs(), prec + 1, false);
      os << op;
      print_formula(os, f.rhs(), prec, false);
      break;
    }
    default:
      os << f.term_lhs().to_string() << comparison_op(k)
         << f.term_rhs().to_string();
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string formula::to_string() const {
  std::ostringstream os;
  print_formula(os, *this, 0, false);
  return os.str();
}

// ---------------------------------------------------------------------------
// desugar and fragment checks

formula desugar(const formula& f) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::negation:
      return formula::negation(desugar(f.child()));
    case kind::next_state:
      return formula::next_state(desugar(f.child()));
    case kind::conjunction:
      return formula::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case kind::disjunction: {
      formula l = desugar(f.lhs()), r = desugar(f.rhs());
      return formula::negation(
          formula::conjunction(formula::negation(l), formula::negation(r)));
    }
    case kind::implication: {
      formula l = desugar(f.lhs()), r = desugar(f.rhs());
      return formula::negation(formula::conjunction(l, formula::negation(r)));
    }
    case kind::equivalence: {
      formula l = desugar(f.lhs()), r = desugar(f.rhs());
      formula fwd =
          formula::negation(formula::conjunction(l, formula::negation(r)));
      formula bwd =
          formula::negation(formula::conjunction(r, formula::negation(l)));
      return formula::conjunction(fwd, bwd);
    }
    case kind::falsum:
      return formula::conjunction(formula::initial(),
                                  formula::negation(formula::initial()));
    case kind::verum:
      return formula::negation(formula::conjunction(
          formula::initial(), formula::negation(formula::initial())));
    case kind::less_equal:
      return formula::negation(formula::conjunction(
          formula::negation(formula::less(f.term_lhs(), f.term_rhs())),
          formula::negation(formula::equal(f.term_lhs(), f.term_rhs()))));
    case kind::greater_equal:
      return formula::negation(formula::conjunction(
          formula::negation(formula::greater(f.term_lhs(), f.term_rhs())),
          formula::negation(formula::equal(f.term_lhs(), f.term_rhs()))));
    case kind::not_equal:
      return formula::negation(formula::conjunction(
          formula::negation(formula::greater(f.term_lhs(), f.term_rhs())),
          formula::negation(formula::less(f.term_lhs(), f.term_rhs()))));
    default:
      return f;
  }
}

bool is_core(const formula& f) {
  using kind = formula::kind;
  switch (f.node_kind()) {
    case kind::disjunction:
    case kind::implication:
    case kind::equivalence:
    case kind::verum:
    case kind::falsum:
    case kind::less_equal:
    case kind::greater_equal:
    case kind::not_equal:
      return false;
    case kind::negation:
    case kind::next_state:
      return is_core(f.child());
    case kind::conjunction:
      return is_core(f.lhs()) && is_core(f.rhs());
    default:
      return true;
  }
}

bool is_gdl_fragment(const formula& f, bool core_only) {
  using kind = formula::kind;
  if (f.is_comparison() || f.node_kind() == kind::vals) return false;
  if (f.node_kind() == kind::legal || f.node_kind() == kind::does)
    return f.action_args().empty();
  if (f.is_unary()) return is_gdl_fragment(f.child(), core_only);
  if (f.is_binary()) {
    if (core_only && f.node_kind() != kind::conjunction) return false;
    return is_gdl_fragment(f.lhs(), core_only) &&
           is_gdl_fragment(f.rhs(), core_only);
  }
  if (core_only &&
      (f.node_kind() == kind::verum || f.node_kind() == kind::falsum))
    return false;
  return true;
}

std::vector<formula> subformulas(const formula& f) {
  std::vector<formula> out;
  std::unordered_set<formula, formula_hasher> seen;
  auto visit = [&](auto&& self, const formula& g) -> void {
    if (!seen.insert(g).second) return;
    out.push_back(g);
    if (g.is_unary()) {
      self(self, g.child());
    } else if (g.is_binary()) {
      self(self, g.lhs());
      self(self, g.rhs());
    }
  };
  visit(visit, f);
  return out;
}

std::size_t count_atoms(const formula& f) {
  if (f.is_unary()) return count_atoms(f.child());
  if (f.is_binary()) return count_atoms(f.lhs()) + count_atoms(f.rhs());
  return 1;
}

}  // namespace gdlz
