#include "ncg/linsolve.hpp"

#include "ncg/printer.hpp"

namespace ncg {

LinearSolution solve_linear(std::size_t unknowns, std::vector<LinearRow> rows,
                            const SymbolTable& table) {
  const std::size_t nv = table.size();
  for (const LinearRow& r : rows)
    if (r.a.size() != unknowns)
      throw DimensionMismatch("solve_linear: row '" + r.label + "' has " +
                              std::to_string(r.a.size()) + " coefficients, expected " +
                              std::to_string(unknowns));

  LinearSolution out;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Forward elimination to row echelon form, one-step Bareiss scheme:
  //   row_i <- (pivot*row_i - row_i[col]*row_k) / previous_pivot.
  RationalFunction prev = RationalFunction::constant(nv, 1);
  std::vector<std::size_t> pivot_col;  // column of the k-th pivot row
  std::size_t next_row = 0;

  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t chosen = npos;
    for (std::size_t r = next_row; r < rows.size(); ++r) {
      const RationalFunction& e = rows[r].a[col];
      if (e.is_zero()) continue;
      if (e.is_constant()) {
        chosen = r;
        break;
      }
      if (chosen == npos) chosen = r;
    }
    if (chosen == npos) {
      out.free_columns.push_back(col);
      continue;
    }
    std::swap(rows[next_row], rows[chosen]);
    const RationalFunction pivot = rows[next_row].a[col];
    if (!pivot.is_constant())
      out.pivot_notes.push_back("assuming " + to_plain(pivot, table) +
                                " != 0 (pivot for unknown " + std::to_string(col) +
                                ", row '" + rows[next_row].label + "')");
    for (std::size_t r = next_row + 1; r < rows.size(); ++r) {
      const RationalFunction factor = rows[r].a[col];
      if (factor.is_zero() && pivot == prev) continue;
      for (std::size_t j = col; j < unknowns; ++j)
        rows[r].a[j] = (pivot * rows[r].a[j] - factor * rows[next_row].a[j]) / prev;
      rows[r].rhs = (pivot * rows[r].rhs - factor * rows[next_row].rhs) / prev;
    }
    prev = pivot;
    pivot_col.push_back(col);
    ++next_row;
  }

  for (std::size_t r = next_row; r < rows.size(); ++r)
    if (!rows[r].rhs.is_zero())
      out.inconsistent_rows.push_back(rows[r].label + " reduces to 0 = " +
                                      to_plain(rows[r].rhs, table));
  if (!out.inconsistent_rows.empty()) {
    out.status = SolveStatus::Inconsistent;
    return out;
  }

  // Back substitution; free unknowns stay at zero.
  out.values.assign(unknowns, RationalFunction(nv));
  for (std::size_t k = next_row; k-- > 0;) {
    const std::size_t c = pivot_col[k];
    RationalFunction acc = rows[k].rhs;
    for (std::size_t j = c + 1; j < unknowns; ++j)
      if (!rows[k].a[j].is_zero()) acc = acc - rows[k].a[j] * out.values[j];
    out.values[c] = acc / rows[k].a[c];
  }
  out.status = out.free_columns.empty() ? SolveStatus::Unique : SolveStatus::Family;
  return out;
}

}  // namespace ncg
