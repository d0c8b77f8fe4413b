#pragma once

#include "ncg/polynomial.hpp"

namespace ncg {

class DivisionByZeroExpr : public Error {
 public:
  using Error::Error;
};

// Exact quotient of expanded multivariate polynomials in canonical form:
//   * gcd(num, den) = 1 (multivariate gcd over Q),
//   * den is integer-primitive with positive leading coefficient,
//   * zero is uniquely 0/1.
// Negative (Laurent) powers of symbols are admitted at construction and fold
// into the denominator.  Equality of canonical forms is structural equality.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(std::size_t nvars, const Rational& c);
  // symbol^power with any integer power (negative folds into the denominator).
  static RationalFunction variable(std::size_t nvars, std::size_t var, int power = 1);
  static RationalFunction from_polynomial(Polynomial p);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const;

  bool depends_on(std::size_t var) const {
    return num_.depends_on(var) || den_.depends_on(var);
  }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  RationalFunction scaled(const Rational& c) const;
  RationalFunction pow(int n) const;
  RationalFunction derivative(std::size_t var) const;

  bool operator==(const RationalFunction& o) const = default;

 private:
  void normalize();

  // num_/den_ hold the canonical form; default-constructed value is 0/1 with
  // zero symbols (resized on first real use).
  Polynomial num_;
  Polynomial den_ = Polynomial::constant(0, 1);
};

}  // namespace ncg
