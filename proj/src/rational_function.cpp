#include "ncg/rational_function.hpp"

namespace ncg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars())
    throw DimensionMismatch("rational function: symbol tables differ");
  normalize();
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
  RationalFunction r(nvars);
  r.num_ = Polynomial::constant(nvars, c);
  return r;
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t var,
                                            int power) {
  RationalFunction r(nvars);
  if (power >= 0) {
    r.num_ = Polynomial::variable(nvars, var, power);
  } else {
    r.num_ = Polynomial::constant(nvars, 1);
    r.den_ = Polynomial::variable(nvars, var, -power);
  }
  return r;
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  RationalFunction r(p.nvars());
  r.num_ = std::move(p);
  return r;
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function: not a constant");
  return num_.constant_value();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZeroExpr("division by zero expression");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  if (!den_.is_one()) {
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divided_by(g);
      den_ = *den_.divided_by(g);
    }
  }
  // Canonical scale: denominator integer-primitive, positive leading coeff.
  Rational c = den_.rational_content();
  if (c != 1) {
    Polynomial cc = Polynomial::constant(num_.nvars(), c);
    num_ = *num_.divided_by(cc);
    den_ = *den_.divided_by(cc);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DivisionByZeroExpr("division by zero expression");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  if (c == 0) r.den_ = Polynomial::constant(num_.nvars(), 1);
  return r;
}

RationalFunction RationalFunction::pow(int n) const {
  std::size_t nv = nvars();
  RationalFunction r = RationalFunction::constant(nv, 1);
  if (n == 0) return r;
  if (n < 0) return RationalFunction::constant(nv, 1) / pow(-n);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  // (p/q)' = (p'q - pq')/q^2
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                          den_ * den_);
}

}  // namespace ncg
