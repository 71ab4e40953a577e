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

#include "gdlz/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace gdlz {

namespace {

enum class tok {
  ident,
  integer,
  lparen,
  rparen,
  comma,
  caret,
  lt,
  gt,
  eq,
  le,
  ge,
  ne,
  // keywords
  kw_initial,
  kw_terminal,
  kw_wins,
  kw_legal,
  kw_does,
  kw_not,
  kw_and,
  kw_next,
  kw_vals,
  kw_or,
  kw_implies,
  kw_iff,
  kw_true,
  kw_false,
  kw_add,
  kw_sub,
  kw_min,
  kw_max,
  end,
};

const char* tok_name(tok t) {
  switch (t) {
    case tok::ident: return "identifier";
    case tok::integer: return "integer";
    case tok::lparen: return "'('";
    case tok::rparen: return "')'";
    case tok::comma: return "','";
    case tok::caret: return "'^'";
    case tok::lt: return "'<'";
    case tok::gt: return "'>'";
    case tok::eq: return "'='";
    case tok::le: return "'<='";
    case tok::ge: return "'>='";
    case tok::ne: return "'!='";
    case tok::kw_initial: return "'initial'";
    case tok::kw_terminal: return "'terminal'";
    case tok::kw_wins: return "'wins'";
    case tok::kw_legal: return "'legal'";
    case tok::kw_does: return "'does'";
    case tok::kw_not: return "'not'";
    case tok::kw_and: return "'and'";
    case tok::kw_next: return "'next'";
    case tok::kw_vals: return "'vals'";
    case tok::kw_or: return "'or'";
    case tok::kw_implies: return "'implies'";
    case tok::kw_iff: return "'iff'";
    case tok::kw_true: return "'true'";
    case tok::kw_false: return "'false'";
    case tok::kw_add: return "'add'";
    case tok::kw_sub: return "'sub'";
    case tok::kw_min: return "'min'";
    case tok::kw_max: return "'max'";
    case tok::end: return "end of input";
  }
  return "?";
}

struct token {
  tok type;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

std::optional<tok> keyword_of(std::string_view s) {
  if (s == "initial") return tok::kw_initial;
  if (s == "terminal") return tok::kw_terminal;
  if (s == "wins") return tok::kw_wins;
  if (s == "legal") return tok::kw_legal;
  if (s == "does") return tok::kw_does;
  if (s == "not") return tok::kw_not;
  if (s == "and") return tok::kw_and;
  if (s == "next") return tok::kw_next;
  if (s == "vals") return tok::kw_vals;
  if (s == "or") return tok::kw_or;
  if (s == "implies") return tok::kw_implies;
  if (s == "iff") return tok::kw_iff;
  if (s == "true") return tok::kw_true;
  if (s == "false") return tok::kw_false;
  if (s == "add") return tok::kw_add;
  if (s == "sub") return tok::kw_sub;
  if (s == "min") return tok::kw_min;
  if (s == "max") return tok::kw_max;
  return std::nullopt;
}

std::vector<token> lex(std::string_view text, int base_line) {
  std::vector<token> out;
  int line = base_line, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      t.text = std::string(text.substr(i, j - i));
      auto kw = keyword_of(t.text);
      t.type = kw ? *kw : tok::ident;
      bump(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.type = tok::integer;
      t.text = std::string(text.substr(i, j - i));
      auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(),
                                 t.value);
      if (res.ec != std::errc{})
        throw parse_error("integer literal out of 64-bit range", line, col, "");
      bump(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "<=") {
      t.type = tok::le;
    } else if (two == ">=") {
      t.type = tok::ge;
    } else if (two == "!=") {
      t.type = tok::ne;
    } else {
      switch (c) {
        case '(': t.type = tok::lparen; break;
        case ')': t.type = tok::rparen; break;
        case ',': t.type = tok::comma; break;
        case '^': t.type = tok::caret; break;
        case '<': t.type = tok::lt; break;
        case '>': t.type = tok::gt; break;
        case '=': t.type = tok::eq; break;
        default:
          throw parse_error(std::string("unexpected character '") + c + "'",
                            line, col, "");
      }
    }
    bump(t.type == tok::le || t.type == tok::ge || t.type == tok::ne ? 2 : 1);
    out.push_back(std::move(t));
  }
  token e;
  e.type = tok::end;
  e.line = line;
  e.column = col;
  out.push_back(std::move(e));
  return out;
}

bool is_comparison_tok(tok t) {
  return t == tok::lt || t == tok::gt || t == tok::eq || t == tok::le ||
         t == tok::ge || t == tok::ne;
}

class parser {
 public:
  explicit parser(std::vector<token> toks) : toks_(std::move(toks)) {}

  formula parse_full_formula() {
    formula f = parse_equivalence();
    expect(tok::end);
    return f;
  }

  num_term parse_full_term() {
    num_term t = parse_term_expr();
    expect(tok::end);
    return t;
  }

 private:
  const token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const token& advance() { return toks_[pos_++]; }

  bool accept(tok t) {
    if (peek().type == t) {
      ++pos_;
      return true;
    }
    return false;
  }

  token expect(tok t) {
    if (peek().type != t)
      throw parse_error(std::string("unexpected ") + tok_name(peek().type),
                        peek().line, peek().column, tok_name(t));
    return advance();
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw parse_error(std::string("unexpected ") + tok_name(peek().type),
                      peek().line, peek().column, expected);
  }

  formula parse_equivalence() {
    formula l = parse_implication();
    if (accept(tok::kw_iff)) return formula::equivalence(l, parse_equivalence());
    return l;
  }

  formula parse_implication() {
    formula l = parse_disjunction();
    if (accept(tok::kw_implies))
      return formula::implication(l, parse_implication());
    return l;
  }

  formula parse_disjunction() {
    formula l = parse_conjunction();
    while (accept(tok::kw_or)) l = formula::disjunction(l, parse_conjunction());
    return l;
  }

  formula parse_conjunction() {
    formula l = parse_unary();
    while (accept(tok::kw_and)) l = formula::conjunction(l, parse_unary());
    return l;
  }

  formula parse_unary() {
    if (accept(tok::kw_not)) return formula::negation(parse_unary());
    return parse_atom();
  }

  formula parse_atom() {
    const token& t = peek();
    switch (t.type) {
      case tok::kw_initial:
        advance();
        return formula::initial();
      case tok::kw_terminal:
        advance();
        return formula::terminal();
      case tok::kw_true:
        advance();
        return formula::verum();
      case tok::kw_false:
        advance();
        return formula::falsum();
      case tok::kw_wins: {
        advance();
        expect(tok::lparen);
        std::string agent = expect(tok::ident).text;
        expect(tok::rparen);
        return formula::wins(std::move(agent));
      }
      case tok::kw_legal:
      case tok::kw_does: {
        bool is_legal = t.type == tok::kw_legal;
        advance();
        expect(tok::lparen);
        std::string action = expect(tok::ident).text;
        expect(tok::caret);
        std::string agent = expect(tok::ident).text;
        expect(tok::lparen);
        std::vector<num_term> args = parse_numlist();
        expect(tok::rparen);
        expect(tok::rparen);
        return is_legal
                   ? formula::legal(std::move(agent), std::move(action),
                                    std::move(args))
                   : formula::does(std::move(agent), std::move(action),
                                   std::move(args));
      }
      case tok::kw_next: {
        advance();
        expect(tok::lparen);
        formula f = parse_equivalence();
        expect(tok::rparen);
        return formula::next_state(f);
      }
      case tok::kw_vals: {
        advance();
        expect(tok::lparen);
        std::vector<num_term> items = parse_numlist();
        expect(tok::rparen);
        return formula::vals(std::move(items));
      }
      case tok::lparen: {
        advance();
        formula f = parse_equivalence();
        expect(tok::rparen);
        return f;
      }
      case tok::integer:
        return parse_comparison_chain(parse_term_expr(), true);
      case tok::kw_add:
      case tok::kw_sub:
      case tok::kw_min:
      case tok::kw_max:
        return parse_comparison_chain(parse_term_expr(), true);
      case tok::ident: {
        // Bare prop, prop with arguments, or a variable opening a
        // comparison chain.
        std::string name = advance().text;
        if (peek().type == tok::lparen) {
          advance();
          std::vector<std::string> args;
          if (peek().type != tok::rparen) {
            for (;;) {
              if (peek().type == tok::ident) {
                args.push_back(advance().text);
              } else if (peek().type == tok::integer) {
                args.push_back(std::to_string(advance().value));
              } else {
                fail("identifier or integer");
              }
              if (!accept(tok::comma)) break;
            }
          }
          expect(tok::rparen);
          return formula::prop(std::move(name), std::move(args));
        }
        if (is_comparison_tok(peek().type))
          return parse_comparison_chain(num_term::variable(std::move(name)),
                                        false);
        return formula::prop(std::move(name));
      }
      default:
        fail("a formula");
    }
  }

  // term (op term)+ expands into the conjunction of adjacent comparisons.
  formula parse_comparison_chain(num_term first, bool require_op) {
    if (require_op && !is_comparison_tok(peek().type)) fail("comparison operator");
    std::vector<formula> parts;
    num_term prev = std::move(first);
    while (is_comparison_tok(peek().type)) {
      tok op = advance().type;
      num_term next = parse_term_expr();
      switch (op) {
        case tok::lt: parts.push_back(formula::less(prev, next)); break;
        case tok::gt: parts.push_back(formula::greater(prev, next)); break;
        case tok::eq: parts.push_back(formula::equal(prev, next)); break;
        case tok::le: parts.push_back(formula::less_equal(prev, next)); break;
        case tok::ge: parts.push_back(formula::greater_equal(prev, next)); break;
        default: parts.push_back(formula::not_equal(prev, next)); break;
      }
      prev = std::move(next);
    }
    formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = formula::conjunction(acc, parts[i]);
    return acc;
  }

  std::vector<num_term> parse_numlist() {
    std::vector<num_term> out;
    if (peek().type == tok::rparen) return out;  // empty list
    out.push_back(parse_term_expr());
    while (accept(tok::comma)) out.push_back(parse_term_expr());
    return out;
  }

  num_term parse_term_expr() {
    const token& t = peek();
    switch (t.type) {
      case tok::integer:
        return num_term::literal(advance().value);
      case tok::ident:
        return num_term::variable(advance().text);
      case tok::kw_add:
      case tok::kw_sub:
      case tok::kw_min:
      case tok::kw_max: {
        tok f = advance().type;
        expect(tok::lparen);
        num_term l = parse_term_expr();
        expect(tok::comma);
        num_term r = parse_term_expr();
        expect(tok::rparen);
        switch (f) {
          case tok::kw_add: return num_term::add(l, r);
          case tok::kw_sub: return num_term::sub(l, r);
          case tok::kw_min: return num_term::min(l, r);
          default: return num_term::max(l, r);
        }
      }
      default:
        fail("a numerical term");
    }
  }

  std::vector<token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

formula parse_formula(std::string_view text) {
  return parser(lex(text, 1)).parse_full_formula();
}

num_term parse_term(std::string_view text) {
  return parser(lex(text, 1)).parse_full_term();
}

std::vector<formula> parse_rules_text(std::string_view text) {
  std::vector<formula> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parser(lex(line, line_no)).parse_full_formula());
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace gdlz
