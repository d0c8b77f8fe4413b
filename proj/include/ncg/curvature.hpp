#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/connection.hpp"
#include "ncg/metric.hpp"

namespace ncg {

class CentralityViolation : public Error {
 public:
  using Error::Error;
};

// Every sign and index choice of this module, stated once.  Alternative
// conventions are diffed against this text, never silently switched; its
// hash travels in every report.
extern const char kConventionLedger[];
std::uint64_t convention_ledger_hash();

// sigma[s][m][r][n][l]: the dx^l component of [dx^s, Gamma^m_{rn}].  Only the
// order-0 connection enters (a correction here would be order >= 2 in every
// use); all components are pure order 1.
ComponentArray sigma_tensor(const Connection& gamma, const DTensor& d);

// First-order corrected connection:
//   Gamma~^m_{rs} = Gamma^m_{rs}
//     + 1/2 Gamma^m_{ab} (D^{lb}_r Gamma^a_{ls} + D^{lb}_s Gamma^a_{rl}
//                         - D^{ab}_l Gamma^l_{rs})
//     - 1/2 Gamma^m_{ab} [x^b, Gamma^a_{rs}].
Connection quantum_christoffel(const Connection& gamma, const DTensor& d,
                               const StructureConstants& c);

// Reduced form valid when the connection is central:
//   Gamma~^m_{rs} = Gamma^m_{rs} - 1/2 D^{ab}_l Gamma^m_{ab} Gamma^l_{rs}.
// Throws CentralityViolation (listing the nonzero components) otherwise.
Connection quantum_christoffel_central(const Connection& gamma, const DTensor& d,
                                       const StructureConstants& c);

// Residual of the centrality property of a connection:
//   K^{mn}_{rs} = D^{lm}_r Gamma^n_{ls} + D^{lm}_s Gamma^n_{rl}
//               - [x^m, Gamma^n_{rs}],
// zero for all indices iff the connection commutes with every coordinate.
struct CentralityCheck {
  ComponentArray residual;  // [m][n][r][s]
  std::vector<std::string> nonzero;
  bool central() const { return nonzero.empty(); }
};
CentralityCheck connection_centrality_check(const Connection& gamma, const DTensor& d,
                                            const StructureConstants& c);

// dgamma[k][m][n][l]: the dx^l component of d(Gamma~^k_{mn}) in left-normal
// form.  The order-0 part is the plain partial derivative; the order-1 part
// combines the derivative of the correction with the reordering cost of d on
// the order-0 component.
ComponentArray christoffel_derivative(const Connection& gamma, const DTensor& d);

// R~^m_{s a r} = Gamma~^m_{rsa} - Gamma~^m_{asr}
//              + Gamma~^m_{al} Gamma~^l_{rs} - Gamma~^m_{rl} Gamma~^l_{as}
//              + Gamma^m_{lb} (Sigma^{lb}_{rsa} - Sigma^{lb}_{asr}),
// with Gamma~^m_{rsa} the derivative components above and all products
// truncated at first order.  `classical` and `quantum` hold the two grades
// assembled independently from the parts (order-0 connection alone, and the
// seven first-order terms), so  riemann == classical + quantum  is a theorem
// the engine can check rather than a bookkeeping identity.
struct RiemannResult {
  ComponentArray riemann;    // [m][s][a][r]
  ComponentArray classical;  // order 0 only
  ComponentArray quantum;    // order 1 only
};
RiemannResult riemann(const Connection& corrected, const ComponentArray& sigma,
                      const Connection& classical, const DTensor& d);

// R~_{sr} = R~^m_{smr}: trace over the first and third indices.
ComponentArray ricci(const ComponentArray& riemann);

// R~ = ginv^{rs} R~_{sr}.
GradedExpr ricci_scalar(const ComponentArray& ricci, const InverseMetric& ginv);

// G~_{sr} = R~_{sr} - 1/2 R~ g_{sr}.
ComponentArray einstein(const ComponentArray& ricci, const GradedExpr& scalar,
                        const Metric& g);

}  // namespace ncg
