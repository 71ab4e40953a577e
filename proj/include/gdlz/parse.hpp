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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdlz/formula.hpp"

namespace gdlz {

// Syntax error with source position and the token set the parser was
// prepared to accept at that point.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, int line, int column, std::string expected)
      : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                           std::to_string(column) +
                           (expected.empty() ? "" : " (expected " + expected + ")")),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

// Parses one formula. Chained comparisons expand into conjunctions of
// adjacent binary comparisons; sugar connectives are kept as-is (see
// desugar()). The printed form of the result reparses to an equal AST.
formula parse_formula(std::string_view text);

// Parses a bare numerical term (tests and tooling).
num_term parse_term(std::string_view text);

// Parses rule-file text: one formula per line, '#' comments, blank lines
// ignored. Keeps sugar; callers desugar as needed.
std::vector<formula> parse_rules_text(std::string_view text);

}  // namespace gdlz
