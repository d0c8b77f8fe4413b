#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/connection.hpp"

namespace ncg {

class SingularMetric : public Error {
 public:
  using Error::Error;
};

// Symmetric invertible metric g_{mu nu}; purely order 0 (the deformation
// enters the geometry through the algebra, never through g itself).
class Metric {
 public:
  explicit Metric(ComponentArray g);

  const GradedExpr& at(std::size_t mu, std::size_t nu) const { return g_(mu, nu); }
  std::size_t dim() const { return g_.dim(); }
  const SymbolTablePtr& table() const { return g_.table(); }
  const ComponentArray& components() const { return g_; }

  // Determinant of the order-0 matrix (nonzero by the class invariant).
  const RationalFunction& det() const { return det_; }

  bool operator==(const Metric& o) const { return g_ == o.g_; }

 private:
  ComponentArray g_;
  RationalFunction det_;
};

// ginv^{mu nu} with  sum_kappa ginv^{mu kappa} g_{kappa nu} = delta^mu_nu
// exactly; order 0, symmetric (adjugate of a symmetric matrix).
class InverseMetric {
 public:
  const GradedExpr& at(std::size_t mu, std::size_t nu) const { return ginv_(mu, nu); }
  std::size_t dim() const { return ginv_.dim(); }
  const SymbolTablePtr& table() const { return ginv_.table(); }
  const ComponentArray& components() const { return ginv_; }

  friend InverseMetric inverse_metric(const Metric& g);

 private:
  explicit InverseMetric(ComponentArray ginv) : ginv_(std::move(ginv)) {}
  ComponentArray ginv_;
};

// Exact adjugate/determinant inverse of the order-0 matrix.
InverseMetric inverse_metric(const Metric& g);

// E^lambda_{mu nu} = [x^lambda, g_{mu nu}] - D^{alpha lambda}_mu g_{alpha nu}
//                                          - D^{alpha lambda}_nu g_{alpha mu};
// the metric is central iff every component is canonical zero.
ComponentArray centrality_residual(const Metric& g, const DTensor& d,
                                   const StructureConstants& c);

// Outcome of treating the centrality condition as a linear system in the
// independent unknowns S^{mu nu}_kappa (mu <= nu) over the parameter field.
struct SymmetricSolve {
  enum class Status { Unique, Family, NoSolution };
  Status status = Status::Unique;
  // Present for Unique and Family (particular solution, free entries zero).
  std::optional<SymmetricPart> s;
  std::vector<std::string> free_entries;   // Family: e.g. "S[0][1][1]"
  std::vector<std::string> inconsistent;   // NoSolution: offending equations
  std::vector<std::string> notes;          // pivot case-split assumptions
};

// Solves the centrality condition for S given g and C, expanding each tensor
// equation coordinate-monomial-wise into scalar equations over the parameter
// field and eliminating fraction-freely.
SymmetricSolve solve_symmetric_part(const Metric& g, const StructureConstants& c);

// Levi-Civita connection of the order-0 metric:
//   Gamma^kappa_{mu nu} = 1/2 ginv^{kappa sigma}
//       (d_mu g_{nu sigma} + d_nu g_{mu sigma} - d_sigma g_{mu nu}).
Connection classical_christoffel(const Metric& g);

}  // namespace ncg
