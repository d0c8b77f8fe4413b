#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/curvature.hpp"

namespace ncg {

// A complete problem statement: the algebra, optionally the symmetric part of
// the calculus (solvable from the metric when absent), and at least one of
// {metric, classical connection}.  When both are present they must agree
// through the Levi-Civita formula.
struct ModelSpec {
  std::string name;
  SymbolTablePtr table;
  StructureConstants c;
  std::optional<SymmetricPart> s;
  std::optional<Metric> metric;
  std::optional<Connection> classical_gamma;
  std::vector<std::string> provenance;
};

// Cross-field invariants; algebra warnings (Jacobi) are passed through.
ValidationReport validate_model(const ModelSpec& spec);

// Structural equality, ignoring name and provenance.
bool same_content(const ModelSpec& a, const ModelSpec& b);

// 2-dimensional model with [x, t] = lambda*x (coordinates t = x^0, x = x^1,
// classical parameter b), the calculus with D^{00}_0 = D^{01}_1 = -lambda,
// its reference classical connection, and a fixture metric consistent with
// that connection.
ModelSpec bicrossproduct_model();

// Commutative fixtures for the classical-limit property suite.
ModelSpec flat2d_model();   // diag(1, 1)
ModelSpec polar2d_model();  // diag(1, t^2): flat in polar form
ModelSpec polar3d_model();  // diag(1, t^2, 1)

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<std::string> failed;  // with component-level diffs
  bool ok() const { return failed.empty(); }
};

// End-to-end check of the bicrossproduct model against its reference values:
// the four coordinate/connection commutator identities, the corrected
// connection Gamma~^1 = 2b [[-x, t + lambda/2], [t + lambda/2,
// -x^-1 t (t + lambda)]], the order-0 decomposition, and the expansion of the
// central-variable form of the classical connection.
VerifyReport verify_bicrossproduct();

}  // namespace ncg
