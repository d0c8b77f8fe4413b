#include "ncg/metric.hpp"

#include <map>

#include "ncg/printer.hpp"
#include "ncg/linsolve.hpp"

namespace ncg {

namespace {

std::string idx2(std::size_t mu, std::size_t nu) {
  return "[" + std::to_string(mu) + "][" + std::to_string(nu) + "]";
}

// Laplace expansion along the first row; exact and fine at spacetime sizes.
RationalFunction determinant(const std::vector<std::vector<RationalFunction>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RationalFunction det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<RationalFunction>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(m[r][c]);
    RationalFunction term = m[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::vector<std::vector<RationalFunction>> order0_matrix(const ComponentArray& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g(i, j).order0();
  return m;
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  const Polynomial g = poly_gcd(a, b);
  auto q = b.divided_by(g);
  return a * *q;
}

}  // namespace

Metric::Metric(ComponentArray g) : g_(std::move(g)) {
  if (g_.rank() != 2) throw DimensionMismatch("metric: need a rank-2 component array");
  const std::size_t n = g_.dim();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      if (!g_(mu, nu).pure_order0())
        throw Error("metric: g" + idx2(mu, nu) + " carries a deformation term");
      if (!(g_(mu, nu) - g_(nu, mu)).is_zero())
        throw Error("metric: symmetry violated at g" + idx2(mu, nu));
    }
  det_ = determinant(order0_matrix(g_));
  if (det_.is_zero()) throw SingularMetric("metric: determinant is identically zero");
}

InverseMetric inverse_metric(const Metric& g) {
  const std::size_t n = g.dim();
  const auto m = order0_matrix(g.components());
  ComponentArray ginv(g.table(), 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction cof;
      if (n == 1) {
        cof = RationalFunction::constant(m[0][0].nvars(), 1);
      } else {
        std::vector<std::vector<RationalFunction>> minor(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == j) continue;  // adjugate: cofactor of the transposed slot
          for (std::size_t c = 0; c < n; ++c)
            if (c != i) minor[r < j ? r : r - 1].push_back(m[r][c]);
        }
        cof = determinant(minor);
        if ((i + j) % 2 != 0) cof = -cof;
      }
      ginv(i, j) = GradedExpr(g.table(), cof / g.det(), RationalFunction(g.table()->size()));
    }
  return InverseMetric(std::move(ginv));
}

ComponentArray centrality_residual(const Metric& g, const DTensor& d,
                                   const StructureConstants& c) {
  if (!g.table()->same_as(*d.table()) || !g.table()->same_as(*c.table()))
    throw DimensionMismatch("centrality_residual: mixed models");
  const std::size_t n = g.dim();
  ComponentArray e(g.table(), 3);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        GradedExpr acc = commutator_coord_fn(l, g.at(mu, nu), c);
        for (std::size_t a = 0; a < n; ++a) {
          acc -= d.at(a, l, mu) * g.at(a, nu);
          acc -= d.at(a, l, nu) * g.at(a, mu);
        }
        e(l, mu, nu) = acc;
      }
  return e;
}

SymmetricSolve solve_symmetric_part(const Metric& g, const StructureConstants& c) {
  const SymbolTablePtr& table = g.table();
  if (!table->same_as(*c.table()))
    throw DimensionMismatch("solve_symmetric_part: mixed models");
  const std::size_t n = g.dim();
  const std::size_t nv = table->size();

  // Independent unknowns S^{mu nu}_kappa with mu <= nu, enumerated in index
  // order; each stands for the rational coefficient of the deformation symbol.
  struct Slot {
    std::size_t mu, nu, kappa;
  };
  std::vector<Slot> slots;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa) slots.push_back({mu, nu, kappa});

  const ComponentArray e0 =
      centrality_residual(g, build_d(c, SymmetricPart(table)), c);

  // Column u: the S-contraction of the u-th basis element, so that the
  // system reads  sum_u s_u * col_u = e0  componentwise.
  std::vector<ComponentArray> cols;
  cols.reserve(slots.size());
  for (const Slot& s : slots) {
    SymmetricPart basis(table);
    basis.set(s.mu, s.nu, s.kappa, GradedExpr::deformation(table));
    ComponentArray col(table, 3);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = mu; nu < n; ++nu) {
          GradedExpr acc = GradedExpr::zero(table);
          for (std::size_t a = 0; a < n; ++a) {
            acc += basis.at(a, l, mu) * g.at(a, nu);
            acc += basis.at(a, l, nu) * g.at(a, mu);
          }
          col(l, mu, nu) = acc;
        }
    cols.push_back(std::move(col));
  }

  // Expand every tensor equation into scalar equations over the parameter
  // field, one per coordinate monomial after clearing denominators.
  std::vector<LinearRow> rows;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = mu; nu < n; ++nu) {
        const RationalFunction rhs = e0(l, mu, nu).order1();
        std::vector<RationalFunction> coeffs;
        coeffs.reserve(slots.size());
        Polynomial q = rhs.den();
        for (const ComponentArray& col : cols) {
          coeffs.push_back(col(l, mu, nu).order1());
          if (!coeffs.back().is_zero()) q = poly_lcm(q, coeffs.back().den());
        }
        if (rhs.is_zero() && [&] {
              for (const RationalFunction& f : coeffs)
                if (!f.is_zero()) return false;
              return true;
            }())
          continue;

        auto cleared = [&](const RationalFunction& f) {
          if (f.is_zero()) return Polynomial(nv);
          return f.num() * *q.divided_by(f.den());
        };
        const Polynomial rhs_p = cleared(rhs);
        std::vector<Polynomial> col_p;
        col_p.reserve(coeffs.size());
        for (const RationalFunction& f : coeffs) col_p.push_back(cleared(f));

        // Group by the coordinate part of each monomial.
        std::map<Monomial, LinearRow, MonomialDescending> grouped;
        auto scatter = [&](const Polynomial& p, std::size_t column, bool is_rhs) {
          for (const auto& [m, coeff] : p.terms()) {
            Monomial coord_key(nv), param_part(nv);
            for (std::size_t v = 0; v < nv; ++v)
              (table->is_coordinate(v) ? coord_key : param_part).exp(v) = m.exp(v);
            auto [it, inserted] = grouped.try_emplace(coord_key);
            LinearRow& row = it->second;
            if (inserted) {
              row.a.assign(slots.size(), RationalFunction(nv));
              row.rhs = RationalFunction(nv);
            }
            const RationalFunction add =
                RationalFunction::from_polynomial(Polynomial::from_monomial(param_part, coeff));
            if (is_rhs)
              row.rhs = row.rhs + add;
            else
              row.a[column] = row.a[column] + add;
          }
        };
        scatter(rhs_p, 0, true);
        for (std::size_t u = 0; u < col_p.size(); ++u) scatter(col_p[u], u, false);

        for (auto& [key, row] : grouped) {
          row.label = "E[" + std::to_string(l) + "][" + std::to_string(mu) + "][" +
                      std::to_string(nu) + "] (coefficient of " +
                      to_plain(Polynomial::from_monomial(key, 1), *table) + ")";
          rows.push_back(std::move(row));
        }
      }

  const LinearSolution sol = solve_linear(slots.size(), std::move(rows), *table);

  SymmetricSolve out;
  out.notes = sol.pivot_notes;
  switch (sol.status) {
    case SolveStatus::Inconsistent:
      out.status = SymmetricSolve::Status::NoSolution;
      out.inconsistent = sol.inconsistent_rows;
      return out;
    case SolveStatus::Family:
      out.status = SymmetricSolve::Status::Family;
      for (std::size_t col : sol.free_columns)
        out.free_entries.push_back("S[" + std::to_string(slots[col].mu) + "][" +
                                   std::to_string(slots[col].nu) + "][" +
                                   std::to_string(slots[col].kappa) + "]");
      break;
    case SolveStatus::Unique:
      out.status = SymmetricSolve::Status::Unique;
      break;
  }
  SymmetricPart s(table);
  for (std::size_t u = 0; u < slots.size(); ++u)
    if (!sol.values[u].is_zero())
      s.set(slots[u].mu, slots[u].nu, slots[u].kappa,
            GradedExpr::pure_order1(table, sol.values[u]));
  out.s = std::move(s);
  return out;
}

Connection classical_christoffel(const Metric& g) {
  const std::size_t n = g.dim();
  const InverseMetric ginv = inverse_metric(g);
  ComponentArray gamma(g.table(), 3);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        GradedExpr acc = GradedExpr::zero(g.table());
        for (std::size_t s = 0; s < n; ++s)
          acc += ginv.at(k, s) * (partial(g.at(nu, s), mu) + partial(g.at(mu, s), nu) -
                                  partial(g.at(mu, nu), s));
        gamma(k, mu, nu) = acc.scaled(Rational(1, 2));
      }
  return Connection::classical(std::move(gamma));
}

}  // namespace ncg
