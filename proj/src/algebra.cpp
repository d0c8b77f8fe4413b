#include "ncg/algebra.hpp"

namespace ncg {

namespace {

std::string idx3(std::size_t mu, std::size_t nu, std::size_t kappa) {
  return "[" + std::to_string(mu) + "][" + std::to_string(nu) + "][" +
         std::to_string(kappa) + "]";
}

bool coordinate_free(const RationalFunction& f, const SymbolTable& table) {
  for (std::size_t v = 0; v < table.dim(); ++v)
    if (f.depends_on(v)) return false;
  return true;
}

}  // namespace

StructureConstants::StructureConstants(SymbolTablePtr table)
    : c_(std::move(table), 3) {}

StructureConstants::StructureConstants(SymbolTablePtr table, ComponentArray entries)
    : c_(std::move(entries)) {
  if (c_.rank() != 3 || !c_.table()->same_as(*table))
    throw DimensionMismatch("structure constants: need a rank-3 array on the model table");
  validate();
}

void StructureConstants::set(std::size_t mu, std::size_t nu, std::size_t kappa,
                             const GradedExpr& value) {
  if (!value.pure_order1() || !value.order1().is_constant())
    throw Error("structure constants: C" + idx3(mu, nu, kappa) +
                " must be an exact rational multiple of the deformation symbol");
  if (mu == nu && !value.is_zero())
    throw Error("structure constants: diagonal entry C" + idx3(mu, nu, kappa) +
                " must vanish");
  c_(mu, nu, kappa) = value;
  c_(nu, mu, kappa) = -value;
}

Rational StructureConstants::coefficient(std::size_t mu, std::size_t nu,
                                         std::size_t kappa) const {
  return c_(mu, nu, kappa).order1().constant_value();
}

void StructureConstants::validate() const {
  const std::size_t n = dim();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa) {
        const GradedExpr& e = c_(mu, nu, kappa);
        if (!e.pure_order1() || !e.order1().is_constant())
          throw Error("structure constants: C" + idx3(mu, nu, kappa) +
                      " must be an exact rational multiple of the deformation symbol");
        if (!(e + c_(nu, mu, kappa)).is_zero())
          throw Error("structure constants: antisymmetry violated at C" +
                      idx3(mu, nu, kappa));
      }
}

SymmetricPart::SymmetricPart(SymbolTablePtr table) : s_(std::move(table), 3) {}

SymmetricPart::SymmetricPart(SymbolTablePtr table, ComponentArray entries)
    : s_(std::move(entries)) {
  if (s_.rank() != 3 || !s_.table()->same_as(*table))
    throw DimensionMismatch("symmetric part: need a rank-3 array on the model table");
  validate();
}

void SymmetricPart::set(std::size_t mu, std::size_t nu, std::size_t kappa,
                        const GradedExpr& value) {
  if (!value.pure_order1() || !coordinate_free(value.order1(), *s_.table()))
    throw Error("symmetric part: S" + idx3(mu, nu, kappa) +
                " must be pure order 1 and coordinate-free");
  s_(mu, nu, kappa) = value;
  s_(nu, mu, kappa) = value;
}

void SymmetricPart::validate() const {
  const std::size_t n = dim();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa) {
        const GradedExpr& e = s_(mu, nu, kappa);
        if (!e.pure_order1() || !coordinate_free(e.order1(), *s_.table()))
          throw Error("symmetric part: S" + idx3(mu, nu, kappa) +
                      " must be pure order 1 and coordinate-free");
        if (!(e - s_(nu, mu, kappa)).is_zero())
          throw Error("symmetric part: symmetry violated at S" + idx3(mu, nu, kappa));
      }
}

DTensor build_d(const StructureConstants& c, const SymmetricPart& s) {
  if (!c.table()->same_as(*s.table()))
    throw DimensionMismatch("build_d: C and S come from different models");
  const std::size_t n = c.dim();
  ComponentArray d(c.table(), 3);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa)
        d(mu, nu, kappa) =
            c.at(mu, nu, kappa).scaled(Rational(1, 2)) + s.at(mu, nu, kappa);

  // Consistency: the antisymmetric part of D must reproduce C exactly.
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa)
        if (!(d(mu, nu, kappa) - d(nu, mu, kappa) - c.at(mu, nu, kappa)).is_zero())
          throw Error("build_d: D - D^T != C at " + idx3(mu, nu, kappa));
  return DTensor(std::move(d));
}

ValidationReport validate_algebra(const StructureConstants& c) {
  ValidationReport report;
  const std::size_t n = c.dim();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa)
        if (!(c.at(mu, nu, kappa) + c.at(nu, mu, kappa)).is_zero())
          report.errors.push_back("antisymmetry violated at C" + idx3(mu, nu, kappa));

  // Jacobi on the rational coefficients: for all (mu, nu, rho, kappa)
  //   sum_sigma c^{mu nu}_s c^{s rho}_k + c^{nu rho}_s c^{s mu}_k
  //           + c^{rho mu}_s c^{s nu}_k = 0.
  if (report.errors.empty()) {
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t rho = 0; rho < n; ++rho)
          for (std::size_t kappa = 0; kappa < n; ++kappa) {
            Rational sum = 0;
            for (std::size_t s = 0; s < n; ++s)
              sum += c.coefficient(mu, nu, s) * c.coefficient(s, rho, kappa) +
                     c.coefficient(nu, rho, s) * c.coefficient(s, mu, kappa) +
                     c.coefficient(rho, mu, s) * c.coefficient(s, nu, kappa);
            if (sum != 0)
              report.warnings.push_back(
                  "Jacobi identity violated for (mu,nu,rho,kappa)=(" +
                  std::to_string(mu) + "," + std::to_string(nu) + "," +
                  std::to_string(rho) + "," + std::to_string(kappa) +
                  "), residue " + to_string(sum));
          }
  }
  return report;
}

GradedExpr commutator_coord_fn(std::size_t mu, const GradedExpr& f,
                               const StructureConstants& c) {
  const std::size_t n = c.dim();
  GradedExpr out = GradedExpr::zero(f.table());
  for (std::size_t nu = 0; nu < n; ++nu) {
    GradedExpr df = partial(f, nu);
    if (df.is_zero()) continue;
    for (std::size_t kappa = 0; kappa < n; ++kappa) {
      const GradedExpr& coeff = c.at(mu, nu, kappa);
      if (coeff.is_zero()) continue;
      out += coeff * GradedExpr::symbol(f.table(), kappa) * df;
    }
  }
  return out;
}

OneForm commutator_diff_fn(std::size_t sigma, const GradedExpr& f, const DTensor& d) {
  const std::size_t n = d.dim();
  OneForm out(f.table());
  for (std::size_t nu = 0; nu < n; ++nu) {
    GradedExpr df = partial(f, nu);
    if (df.is_zero()) continue;
    for (std::size_t kappa = 0; kappa < n; ++kappa) {
      const GradedExpr& coeff = d.at(sigma, nu, kappa);
      if (coeff.is_zero()) continue;
      out.at(kappa) += coeff * df;
    }
  }
  return out;
}

TwoTensor commutator_coord_tensor(std::size_t mu, const TwoTensor& t,
                                  const StructureConstants& c, const DTensor& d) {
  const std::size_t n = t.dim();
  TwoTensor out(t.table());
  for (std::size_t rho = 0; rho < n; ++rho)
    for (std::size_t sigma = 0; sigma < n; ++sigma)
      out.at(rho, sigma) = commutator_coord_fn(mu, t.at(rho, sigma), c);

  // [x^mu, dx^rho (x) dx^sigma] = -(D^{rho mu}_l dx^l (x) dx^sigma
  //                                 + D^{sigma mu}_l dx^rho (x) dx^l)
  for (std::size_t rho = 0; rho < n; ++rho)
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
      const GradedExpr& f = t.at(rho, sigma);
      if (f.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const GradedExpr& dr = d.at(rho, mu, l);
        if (!dr.is_zero()) out.at(l, sigma) -= f * dr;
        const GradedExpr& ds = d.at(sigma, mu, l);
        if (!ds.is_zero()) out.at(rho, l) -= f * ds;
      }
    }
  return out;
}

OneForm exterior_d(const GradedExpr& f, const DTensor& d) {
  const std::size_t n = d.dim();
  OneForm out(f.table());
  for (std::size_t nu = 0; nu < n; ++nu) out.at(nu) = partial(f, nu);

  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu) {
      GradedExpr ddf = partial(partial(f, mu), nu);
      if (ddf.is_zero()) continue;
      if (mu == nu) ddf = ddf.scaled(Rational(1, 2));
      for (std::size_t kappa = 0; kappa < n; ++kappa) {
        const GradedExpr& coeff = d.at(mu, nu, kappa);
        if (coeff.is_zero()) continue;
        out.at(kappa) += coeff * ddf;
      }
    }
  return out;
}

ComponentArray exterior_d_oneform(const OneForm& omega, const DTensor& d) {
  const std::size_t n = omega.dim();
  std::vector<OneForm> dA;
  dA.reserve(n);
  for (std::size_t nu = 0; nu < n; ++nu) dA.push_back(exterior_d(omega.at(nu), d));

  ComponentArray out(omega.table(), 2);
  for (std::size_t kappa = 0; kappa < n; ++kappa)
    for (std::size_t nu = 0; nu < n; ++nu)
      out(kappa, nu) = dA[nu].at(kappa) - dA[kappa].at(nu);
  return out;
}

GradedExpr product_ordered(const GradedExpr& f, const GradedExpr& g,
                           const StructureConstants& c) {
  const std::size_t n = c.dim();
  GradedExpr out = f * g;
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t sigma = 0; sigma < nu; ++sigma) {
      GradedExpr factor = partial(f, nu) * partial(g, sigma);
      if (factor.is_zero()) continue;
      for (std::size_t kappa = 0; kappa < n; ++kappa) {
        const GradedExpr& coeff = c.at(nu, sigma, kappa);
        if (coeff.is_zero()) continue;
        out += coeff * GradedExpr::symbol(f.table(), kappa) * factor;
      }
    }
  return out;
}

OneForm oneform_times_fn(const OneForm& omega, const GradedExpr& g,
                         const StructureConstants& c, const DTensor& d) {
  const std::size_t n = omega.dim();
  OneForm out(omega.table());
  for (std::size_t nu = 0; nu < n; ++nu) {
    const GradedExpr& a = omega.at(nu);
    if (a.is_zero()) continue;
    out.at(nu) += product_ordered(a, g, c);
    // dx^nu g = g dx^nu + D^{nu sigma}_l (d_sigma g) dx^l
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
      GradedExpr dg = partial(g, sigma);
      if (dg.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const GradedExpr& coeff = d.at(nu, sigma, l);
        if (coeff.is_zero()) continue;
        out.at(l) += a * coeff * dg;
      }
    }
  }
  return out;
}

OneForm fn_times_oneform(const GradedExpr& f, const OneForm& omega,
                         const StructureConstants& c) {
  OneForm out(omega.table());
  for (std::size_t nu = 0; nu < omega.dim(); ++nu)
    out.at(nu) = product_ordered(f, omega.at(nu), c);
  return out;
}

}  // namespace ncg
