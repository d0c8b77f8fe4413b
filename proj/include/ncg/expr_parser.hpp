#pragma once

#include <string_view>

#include "ncg/graded_expr.hpp"

namespace ncg {

// Parse error with a 1-based source location.
class ExprParseError : public Error {
 public:
  ExprParseError(int line, int col, const std::string& message)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
              ": " + message),
        line(line),
        col(col),
        reason(message) {}

  int line;
  int col;
  std::string reason;
};

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ['^' signed-integer]
//   base   := identifier | integer-literal | '(' expr ')'
// Identifiers resolve against the symbol table; the deformation symbol maps to
// the order-1 unit.  Rational literals are spelled with '/', e.g. 1/2.
// line0/col0 give the location of text's first character for embedding inside
// larger documents.
GradedExpr parse_expression(std::string_view text, const SymbolTablePtr& table,
                            int line0 = 1, int col0 = 1);

}  // namespace ncg
