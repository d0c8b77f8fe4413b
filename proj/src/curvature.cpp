#include "ncg/curvature.hpp"

#include "ncg/printer.hpp"

namespace ncg {

const char kConventionLedger[] =
    "coordinates x^0..x^{d-1} in table order define tensor indices and the canonical word order\n"
    "coordinate bracket [x^m, x^n] = C^{mn}_k x^k, C antisymmetric, rational multiples of the deformation symbol\n"
    "calculus bracket [dx^m, x^n] = D^{mn}_k dx^k with D = C/2 + S, S symmetric and coordinate-free\n"
    "derivation extensions [x^m, f] = C^{mn}_k x^k d_n f and [dx^s, f] = D^{sn}_k (d_n f) dx^k\n"
    "tensors are left-normalized: algebra coefficients left of all differentials\n"
    "connection Gamma^k_{mn}: upper index first, lower pair symmetric at order 0\n"
    "sigma 5-index reading: [dx^s, Gamma^m_{rn}] = Sigma^{sm}_{rnl} dx^l\n"
    "corrected connection: Gamma~^m_{rs} = Gamma^m_{rs} + 1/2 Gamma^m_{ab}(D^{lb}_r Gamma^a_{ls} + D^{lb}_s Gamma^a_{rl} - D^{ab}_l Gamma^l_{rs}) - 1/2 Gamma^m_{ab}[x^b, Gamma^a_{rs}]\n"
    "derivative components: d(Gamma~^k_{mn}) = Gamma~^k_{mnl} dx^l in left-normal form\n"
    "riemann R~^m_{sar} = Gamma~^m_{rsa} - Gamma~^m_{asr} + Gamma~^m_{al}Gamma~^l_{rs} - Gamma~^m_{rl}Gamma~^l_{as} + Gamma^m_{lb}(Sigma^{lb}_{rsa} - Sigma^{lb}_{asr})\n"
    "ricci R~_{sr} = R~^m_{smr} (trace over first and third)\n"
    "scalar R~ = ginv^{rs} R~_{sr}; einstein G~_{sr} = R~_{sr} - 1/2 R~ g_{sr}\n"
    "all arithmetic truncates after first order in the deformation symbol\n";

std::uint64_t convention_ledger_hash() {
  // FNV-1a, 64-bit.
  std::uint64_t h = 1469598103934665603ull;
  for (const char* p = kConventionLedger; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void require_classical(const Connection& gamma, const char* who) {
  if (!gamma.classical_only())
    throw Error(std::string(who) + ": needs the order-0 connection");
}

}  // namespace

ComponentArray sigma_tensor(const Connection& gamma, const DTensor& d) {
  require_classical(gamma, "sigma_tensor");
  if (!gamma.table()->same_as(*d.table()))
    throw DimensionMismatch("sigma_tensor: mixed models");
  const std::size_t n = gamma.dim();
  ComponentArray sigma(gamma.table(), 5);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t v = 0; v < n; ++v) {
          const OneForm w = commutator_diff_fn(s, gamma.at(m, r, v), d);
          for (std::size_t l = 0; l < n; ++l) sigma(s, m, r, v, l) = w.at(l);
        }
  return sigma;
}

Connection quantum_christoffel(const Connection& gamma, const DTensor& d,
                               const StructureConstants& c) {
  require_classical(gamma, "quantum_christoffel");
  const std::size_t n = gamma.dim();
  const SymbolTablePtr& table = gamma.table();
  ComponentArray out(table, 3);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        GradedExpr acc = gamma.at(m, r, s);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const GradedExpr& gab = gamma.at(m, a, b);
            if (gab.is_zero()) continue;
            GradedExpr bracket = GradedExpr::zero(table);
            for (std::size_t l = 0; l < n; ++l) {
              bracket += d.at(l, b, r) * gamma.at(a, l, s);
              bracket += d.at(l, b, s) * gamma.at(a, r, l);
              bracket -= d.at(a, b, l) * gamma.at(l, r, s);
            }
            bracket -= commutator_coord_fn(b, gamma.at(a, r, s), c);
            acc += (gab * bracket).scaled(Rational(1, 2));
          }
        out(m, r, s) = acc;
      }
  return Connection::corrected(std::move(out));
}

CentralityCheck connection_centrality_check(const Connection& gamma, const DTensor& d,
                                            const StructureConstants& c) {
  const std::size_t n = gamma.dim();
  CentralityCheck check{ComponentArray(gamma.table(), 4), {}};
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          GradedExpr acc = -commutator_coord_fn(m, gamma.at(v, r, s), c);
          for (std::size_t l = 0; l < n; ++l) {
            acc += d.at(l, m, r) * gamma.at(v, l, s);
            acc += d.at(l, m, s) * gamma.at(v, r, l);
          }
          if (!acc.is_zero())
            check.nonzero.push_back("K[" + std::to_string(m) + "][" + std::to_string(v) +
                                    "][" + std::to_string(r) + "][" + std::to_string(s) +
                                    "] = " + to_plain(acc));
          check.residual(m, v, r, s) = acc;
        }
  return check;
}

Connection quantum_christoffel_central(const Connection& gamma, const DTensor& d,
                                       const StructureConstants& c) {
  require_classical(gamma, "quantum_christoffel_central");
  const CentralityCheck check = connection_centrality_check(gamma, d, c);
  if (!check.central()) {
    std::string msg = "quantum_christoffel_central: connection is not central;";
    for (const std::string& line : check.nonzero) msg += "\n  " + line;
    throw CentralityViolation(msg);
  }
  const std::size_t n = gamma.dim();
  ComponentArray out(gamma.table(), 3);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        GradedExpr acc = gamma.at(m, r, s);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const GradedExpr& gab = gamma.at(m, a, b);
            if (gab.is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l)
              acc -= (d.at(a, b, l) * gab * gamma.at(l, r, s)).scaled(Rational(1, 2));
          }
        out(m, r, s) = acc;
      }
  return Connection::corrected(std::move(out));
}

ComponentArray christoffel_derivative(const Connection& gamma, const DTensor& d) {
  const std::size_t n = gamma.dim();
  ComponentArray out(gamma.table(), 4);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        const OneForm w = exterior_d(gamma.at(k, m, v), d);
        for (std::size_t l = 0; l < n; ++l) out(k, m, v, l) = w.at(l);
      }
  return out;
}

RiemannResult riemann(const Connection& corrected, const ComponentArray& sigma,
                      const Connection& classical, const DTensor& d) {
  require_classical(classical, "riemann");
  if (sigma.rank() != 5) throw DimensionMismatch("riemann: sigma must be rank 5");
  const std::size_t n = corrected.dim();
  const SymbolTablePtr& table = corrected.table();

  const ComponentArray dgamma = christoffel_derivative(corrected, d);

  RiemannResult res{ComponentArray(table, 4), ComponentArray(table, 4),
                    ComponentArray(table, 4)};

  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < n; ++r) {
          GradedExpr acc = dgamma(m, r, s, a) - dgamma(m, a, s, r);
          for (std::size_t l = 0; l < n; ++l) {
            acc += corrected.at(m, a, l) * corrected.at(l, r, s);
            acc -= corrected.at(m, r, l) * corrected.at(l, a, s);
            for (std::size_t b = 0; b < n; ++b) {
              const GradedExpr& glb = classical.at(m, l, b);
              if (glb.is_zero()) continue;
              acc += glb * (sigma(l, b, r, s, a) - sigma(l, b, a, s, r));
            }
          }
          res.riemann(m, s, a, r) = acc;
        }

  // Independent order-0 assembly: the same formula on the order-0 connection
  // alone, whose derivative components are plain partials.
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < n; ++r) {
          GradedExpr acc =
              partial(classical.at(m, r, s), a) - partial(classical.at(m, a, s), r);
          for (std::size_t l = 0; l < n; ++l) {
            acc += classical.at(m, a, l) * classical.at(l, r, s);
            acc -= classical.at(m, r, l) * classical.at(l, a, s);
          }
          res.classical(m, s, a, r) = acc;
        }

  // Independent order-1 assembly from the parts: derivative corrections,
  // mixed quadratic terms, and the sigma contraction.
  const ComponentArray qgamma = corrected.quantum_part();
  ComponentArray qd(table, 4);  // order-1 part of the derivative components
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t v = 0; v < n; ++v) {
        const OneForm w0 = exterior_d(classical.at(k, mu, v), d);
        const OneForm w1 = exterior_d(qgamma(k, mu, v), d);
        for (std::size_t l = 0; l < n; ++l)
          qd(k, mu, v, l) = (w0.at(l) - w0.at(l).classical_part()) + w1.at(l);
      }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < n; ++r) {
          GradedExpr acc = qd(m, r, s, a) - qd(m, a, s, r);
          for (std::size_t l = 0; l < n; ++l) {
            acc += classical.at(m, a, l) * qgamma(l, r, s);
            acc += qgamma(m, a, l) * classical.at(l, r, s);
            acc -= classical.at(m, r, l) * qgamma(l, a, s);
            acc -= qgamma(m, r, l) * classical.at(l, a, s);
            for (std::size_t b = 0; b < n; ++b) {
              const GradedExpr& glb = classical.at(m, l, b);
              if (glb.is_zero()) continue;
              acc += glb * (sigma(l, b, r, s, a) - sigma(l, b, a, s, r));
            }
          }
          res.quantum(m, s, a, r) = acc;
        }

  return res;
}

ComponentArray ricci(const ComponentArray& riemann) {
  if (riemann.rank() != 4) throw DimensionMismatch("ricci: need a rank-4 array");
  const std::size_t n = riemann.dim();
  ComponentArray out(riemann.table(), 2);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r) {
      GradedExpr acc = GradedExpr::zero(riemann.table());
      for (std::size_t m = 0; m < n; ++m) acc += riemann.at({m, s, m, r});
      out(s, r) = acc;
    }
  return out;
}

GradedExpr ricci_scalar(const ComponentArray& ricci, const InverseMetric& ginv) {
  if (ricci.rank() != 2) throw DimensionMismatch("ricci_scalar: need a rank-2 array");
  const std::size_t n = ricci.dim();
  GradedExpr acc = GradedExpr::zero(ricci.table());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) acc += ginv.at(r, s) * ricci.at({s, r});
  return acc;
}

ComponentArray einstein(const ComponentArray& ricci, const GradedExpr& scalar,
                        const Metric& g) {
  if (ricci.rank() != 2) throw DimensionMismatch("einstein: need a rank-2 array");
  const std::size_t n = ricci.dim();
  ComponentArray out(ricci.table(), 2);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t r = 0; r < n; ++r)
      out(s, r) = ricci.at({s, r}) - (scalar * g.at(s, r)).scaled(Rational(1, 2));
  return out;
}

}  // namespace ncg
