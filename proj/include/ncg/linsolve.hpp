#pragma once

#include <string>
#include <vector>

#include "ncg/rational_function.hpp"
#include "ncg/symbols.hpp"

namespace ncg {

// One equation  sum_j a[j]*unknown_j = rhs  with coefficients in the exact
// rational-function field; label names the equation in diagnostics.
struct LinearRow {
  std::vector<RationalFunction> a;
  RationalFunction rhs;
  std::string label;
};

enum class SolveStatus { Unique, Family, Inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::Unique;
  // Full solution when Unique; a particular solution (free unknowns set to
  // zero) when Family.
  std::vector<RationalFunction> values;
  std::vector<std::size_t> free_columns;       // Family: unknowns left free
  std::vector<std::string> inconsistent_rows;  // Inconsistent: offending rows
  // Case-split assumptions: pivots whose zero-status depends on symbol values
  // are recorded as "assumed nonzero" instead of silently divided by.
  std::vector<std::string> pivot_notes;
};

// Fraction-free (Bareiss) elimination with exact zero tests.  Pivot search
// prefers nonzero constants so case splits happen only when unavoidable.  The
// table is used for printing diagnostics only.
LinearSolution solve_linear(std::size_t unknowns, std::vector<LinearRow> rows,
                            const SymbolTable& table);

}  // namespace ncg
