#pragma once

#include <string>

#include "ncg/graded_expr.hpp"

namespace ncg {

// Deterministic canonical text forms.  The plain form round-trips through the
// expression grammar; term order is the canonical monomial order (descending).

std::string to_plain(const Polynomial& p, const SymbolTable& table);
std::string to_plain(const RationalFunction& f, const SymbolTable& table);
// Combined single-expression form "o0 + lambda*(o1)" (grammar-compatible).
std::string to_plain(const GradedExpr& e);

std::string to_latex(const Polynomial& p, const SymbolTable& table);
std::string to_latex(const RationalFunction& f, const SymbolTable& table);
std::string to_latex(const GradedExpr& e);

}  // namespace ncg
