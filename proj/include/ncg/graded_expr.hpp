#pragma once

#include "ncg/rational_function.hpp"
#include "ncg/symbols.hpp"

namespace ncg {

// First-order deformation value: value = order0 + deformation * order1, with
// deformation^2 = 0 by construction.  Both parts are canonical rational
// functions over the shared symbol table, so a GradedExpr is itself canonical
// and equality is decidable structurally.
//
// A stored expression denotes the operator word with coordinate letters in
// ascending index order; noncommutativity enters only through the algebra
// operations, never through this arithmetic.
class GradedExpr {
 public:
  GradedExpr() = default;
  GradedExpr(SymbolTablePtr table, RationalFunction order0, RationalFunction order1);

  static GradedExpr zero(const SymbolTablePtr& table);
  static GradedExpr constant(const SymbolTablePtr& table, const Rational& c);
  // symbol^power; any integer power (Laurent powers fold into denominators).
  static GradedExpr symbol(const SymbolTablePtr& table, std::size_t var, int power = 1);
  static GradedExpr symbol(const SymbolTablePtr& table, std::string_view name,
                           int power = 1);
  // The deformation unit: (0, 1).
  static GradedExpr deformation(const SymbolTablePtr& table);
  static GradedExpr pure_order1(const SymbolTablePtr& table, RationalFunction o1);

  const SymbolTablePtr& table() const { return table_; }
  const RationalFunction& order0() const { return order0_; }
  const RationalFunction& order1() const { return order1_; }

  bool is_zero() const { return order0_.is_zero() && order1_.is_zero(); }
  bool pure_order0() const { return order1_.is_zero(); }
  bool pure_order1() const { return order0_.is_zero(); }
  // Truncates the value to its classical part.
  GradedExpr classical_part() const;
  // The order-1 part re-graded as an order-0 value (coefficient extraction).
  GradedExpr order1_as_order0() const;

  GradedExpr operator-() const;
  GradedExpr operator+(const GradedExpr& o) const;
  GradedExpr operator-(const GradedExpr& o) const;
  // (a0 + Lb a1)(b0 + Lb b1) = a0 b0 + Lb (a0 b1 + a1 b0); the Lb^2 term is
  // discarded by construction.
  GradedExpr operator*(const GradedExpr& o) const;
  // Requires an invertible order-0 part (grade -1 does not exist in the ring).
  GradedExpr operator/(const GradedExpr& o) const;
  GradedExpr& operator+=(const GradedExpr& o);
  GradedExpr& operator-=(const GradedExpr& o);

  GradedExpr scaled(const Rational& c) const;
  GradedExpr pow(int n) const;

  bool operator==(const GradedExpr& o) const;

  friend GradedExpr partial(const GradedExpr& f, std::size_t coordinate);

 private:
  void require_compatible(const GradedExpr& o) const;

  SymbolTablePtr table_;
  RationalFunction order0_;
  RationalFunction order1_;
};

// Coordinate derivative, applied to both grades.
GradedExpr partial(const GradedExpr& f, std::size_t coordinate);

// Re-normalization entry point.  Values are canonical by construction, so this
// is the identity on well-formed input; it exists so equality-by-subtraction
// has a named witness.
GradedExpr normalize(const GradedExpr& f);

// normalize(a - b) == 0, the decidable equality of the kernel.
bool equal(const GradedExpr& a, const GradedExpr& b);

}  // namespace ncg
