#pragma once

#include <string>
#include <vector>

#include "ncg/tensor.hpp"

namespace ncg {

// The noncommutative structure of the model and every ordering rule built on
// it.  A stored expression denotes the operator word with coordinate letters
// in ascending index order and all differentials to the right of all
// coordinates (left-module normal form); the operations here are the only
// place noncommutativity enters.
//
// Conventions, fixed throughout:
//   [x^mu, x^nu]  = C^{mu nu}_kappa x^kappa          (C antisymmetric, Jacobi)
//   [dx^mu, x^nu] = D^{mu nu}_kappa dx^kappa,  D = C/2 + S  (S symmetric)
//   [x^mu, f]     = sum_nu C^{mu nu}_kappa x^kappa d_nu f
//   [dx^sigma, f] = sum_nu D^{sigma nu}_kappa (d_nu f) dx^kappa

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// C^{mu nu}_kappa: entries are exact rational multiples of the deformation
// symbol (pure order 1, constant coefficient); antisymmetry in (mu, nu) is a
// hard invariant.  Jacobi is checked by validate_algebra (reported, not
// enforced here, so deliberately broken algebras can still be examined).
class StructureConstants {
 public:
  explicit StructureConstants(SymbolTablePtr table);
  StructureConstants(SymbolTablePtr table, ComponentArray entries);

  const GradedExpr& at(std::size_t mu, std::size_t nu, std::size_t kappa) const {
    return c_(mu, nu, kappa);
  }
  // Sets C^{mu nu}_kappa and its antisymmetric mirror.
  void set(std::size_t mu, std::size_t nu, std::size_t kappa, const GradedExpr& value);

  std::size_t dim() const { return c_.dim(); }
  const SymbolTablePtr& table() const { return c_.table(); }
  const ComponentArray& components() const { return c_; }
  // The rational coefficient of the deformation symbol.
  Rational coefficient(std::size_t mu, std::size_t nu, std::size_t kappa) const;

  bool is_zero() const { return c_.is_zero(); }

 private:
  void validate() const;
  ComponentArray c_;
};

// S^{mu nu}_kappa: pure order-1 entries, symmetric in (mu, nu), free of the
// coordinates (parameter dependence is allowed; parameters are constants).
class SymmetricPart {
 public:
  explicit SymmetricPart(SymbolTablePtr table);
  SymmetricPart(SymbolTablePtr table, ComponentArray entries);

  const GradedExpr& at(std::size_t mu, std::size_t nu, std::size_t kappa) const {
    return s_(mu, nu, kappa);
  }
  // Sets S^{mu nu}_kappa and its symmetric mirror.
  void set(std::size_t mu, std::size_t nu, std::size_t kappa, const GradedExpr& value);

  std::size_t dim() const { return s_.dim(); }
  const SymbolTablePtr& table() const { return s_.table(); }
  const ComponentArray& components() const { return s_; }

  bool is_zero() const { return s_.is_zero(); }

 private:
  void validate() const;
  ComponentArray s_;
};

// D^{mu nu}_kappa = C^{mu nu}_kappa / 2 + S^{mu nu}_kappa.
class DTensor {
 public:
  const GradedExpr& at(std::size_t mu, std::size_t nu, std::size_t kappa) const {
    return d_(mu, nu, kappa);
  }
  std::size_t dim() const { return d_.dim(); }
  const SymbolTablePtr& table() const { return d_.table(); }
  const ComponentArray& components() const { return d_; }
  bool is_zero() const { return d_.is_zero(); }

  friend DTensor build_d(const StructureConstants& c, const SymmetricPart& s);

 private:
  explicit DTensor(ComponentArray d) : d_(std::move(d)) {}
  ComponentArray d_;
};

// Builds D = C/2 + S and verifies D - D^T = C (transpose in the upper pair).
DTensor build_d(const StructureConstants& c, const SymmetricPart& s);

// Antisymmetry plus the Jacobi identity.  Jacobi is quadratic in C and
// therefore a statement about the rational lambda-coefficients (a graded
// product of two C entries would truncate to zero).
ValidationReport validate_algebra(const StructureConstants& c);

// [x^mu, f]: derivation extension of the coordinate bracket.
GradedExpr commutator_coord_fn(std::size_t mu, const GradedExpr& f,
                               const StructureConstants& c);

// [dx^sigma, f]: derivation extension of the bimodule bracket.
OneForm commutator_diff_fn(std::size_t sigma, const GradedExpr& f, const DTensor& d);

// [x^mu, f_{rho sigma} dx^rho (x) dx^sigma].
TwoTensor commutator_coord_tensor(std::size_t mu, const TwoTensor& t,
                                  const StructureConstants& c, const DTensor& d);

// Exterior derivative of a function in left-module normal form:
//   df = (d_nu f) dx^nu
//      + sum_{mu<nu} D^{mu nu}_kappa (d_mu d_nu f) dx^kappa
//      + 1/2 sum_mu D^{mu mu}_kappa (d_mu^2 f) dx^kappa,
// the order-1 corrections being exactly the cost of moving each Leibniz dx
// rightward through the remaining letters of the canonically ordered word.
// The closed form extends to Laurent/rational f (it is a second-order
// differential operator) and satisfies d(fg) = (df)g + f(dg) under the
// module's multiplication with re-normalization (product_ordered /
// oneform_times_fn below).
OneForm exterior_d(const GradedExpr& f, const DTensor& d);

// Induced derivative on one-forms (Leibniz + antisymmetrization); returns the
// components of the two-form d(omega) on the dx^kappa ^ dx^nu basis as an
// antisymmetric rank-2 array.  d(exterior_d(f)) == 0 identically.
ComponentArray exterior_d_oneform(const OneForm& omega, const DTensor& d);

// Operator product of two canonically ordered representatives: reordering the
// concatenated word costs sum_{nu>sigma} C^{nu sigma}_kappa (d_nu f)(d_sigma g)
// x^kappa at first order.
GradedExpr product_ordered(const GradedExpr& f, const GradedExpr& g,
                           const StructureConstants& c);

// (A_nu dx^nu) * g: moves g left through the basis, collecting D-corrections.
OneForm oneform_times_fn(const OneForm& omega, const GradedExpr& g,
                         const StructureConstants& c, const DTensor& d);

// f * (A_nu dx^nu): coefficients merge on the left, word reordering only.
OneForm fn_times_oneform(const GradedExpr& f, const OneForm& omega,
                         const StructureConstants& c);

}  // namespace ncg
