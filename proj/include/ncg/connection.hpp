#pragma once

#include <string>

#include "ncg/tensor.hpp"

namespace ncg {

// Gamma^kappa_{mu nu}, upper index first.  A classical-only connection has
// identically zero order-1 part; a corrected one carries qGamma in order 1.
// The order-0 part is always symmetric in the lower pair (Levi-Civita input
// assumption); the correction need not be.
class Connection {
 public:
  static Connection classical(ComponentArray gamma) {
    validate(gamma, /*require_order0=*/true);
    return Connection(std::move(gamma), true);
  }
  static Connection corrected(ComponentArray gamma) {
    validate(gamma, /*require_order0=*/false);
    return Connection(std::move(gamma), false);
  }

  const GradedExpr& at(std::size_t kappa, std::size_t mu, std::size_t nu) const {
    return gamma_(kappa, mu, nu);
  }
  std::size_t dim() const { return gamma_.dim(); }
  const SymbolTablePtr& table() const { return gamma_.table(); }
  const ComponentArray& components() const { return gamma_; }
  bool classical_only() const { return classical_only_; }
  bool is_zero() const { return gamma_.is_zero(); }

  // The order-0 truncation as a classical-only connection.
  Connection classical_part() const {
    return Connection(gamma_.classical_part(), true);
  }
  // qGamma: the order-1 content, kept at order 1.
  ComponentArray quantum_part() const { return gamma_ - gamma_.classical_part(); }

  bool operator==(const Connection& o) const { return gamma_ == o.gamma_; }

 private:
  Connection(ComponentArray gamma, bool classical_only)
      : gamma_(std::move(gamma)), classical_only_(classical_only) {}

  static void validate(const ComponentArray& gamma, bool require_order0) {
    if (gamma.rank() != 3)
      throw DimensionMismatch("connection: need a rank-3 component array");
    const std::size_t n = gamma.dim();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v) {
          const GradedExpr& e = gamma(k, m, v);
          if (require_order0 && !e.pure_order0())
            throw Error("connection: classical-only connection has an order-1 part at [" +
                        std::to_string(k) + "][" + std::to_string(m) + "][" +
                        std::to_string(v) + "]");
          if (!(e.classical_part() - gamma(k, v, m).classical_part()).is_zero())
            throw Error("connection: order-0 part not symmetric in the lower pair at [" +
                        std::to_string(k) + "][" + std::to_string(m) + "][" +
                        std::to_string(v) + "]");
        }
  }

  ComponentArray gamma_;
  bool classical_only_ = true;
};

}  // namespace ncg
