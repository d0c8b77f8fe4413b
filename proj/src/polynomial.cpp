#include "ncg/polynomial.hpp"

#include <algorithm>

namespace ncg {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
  Monomial r = o;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var, int power) {
  if (power < 0) throw Error("polynomial: negative exponent outside rational function");
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars, var, power), 1);
  return p;
}

Polynomial Polynomial::from_monomial(Monomial m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second == 1;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial: not a constant");
  return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("polynomial: zero has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("polynomial: zero has no leading term");
  return terms_.begin()->second;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.nvars() != nvars_) throw DimensionMismatch("polynomial: monomial width mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::widened(std::size_t nvars) const {
  if (nvars_ != 0) throw DimensionMismatch("polynomial: cannot widen a nonempty table");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial(nvars), c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) {
    if (nvars_ == 0) return *this = widened(o.nvars_) += o;
    if (o.nvars_ == 0) return *this += o.widened(nvars_);
    throw DimensionMismatch("polynomial: symbol tables differ");
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) {
    if (nvars_ == 0) return *this = widened(o.nvars_) -= o;
    if (o.nvars_ == 0) return *this -= o.widened(nvars_);
    throw DimensionMismatch("polynomial: symbol tables differ");
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) {
    if (nvars_ == 0) return widened(o.nvars_) * o;
    if (o.nvars_ == 0) return *this * o.widened(nvars_);
    throw DimensionMismatch("polynomial: symbol tables differ");
  }
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = Polynomial::constant(nvars_, 1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp(var);
    if (e == 0) continue;
    Monomial d = m;
    d.exp(var) = e - 1;
    r.add_term(d, c * e);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial: division by zero polynomial");
  Polynomial quot(nvars_);
  Polynomial rem = *this;
  const Monomial& dlm = divisor.leading_monomial();
  const Rational& dlc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rlm = rem.leading_monomial();
    if (!dlm.divides(rlm)) return std::nullopt;
    Monomial qm = dlm.divided_into(rlm);
    Rational qc = rem.leading_coefficient() / dlc;
    Polynomial step = Polynomial::from_monomial(qm, qc);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

Rational Polynomial::rational_content() const {
  if (terms_.empty()) return Rational(0);
  BigInt g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    g = euclid_gcd(g, num(c));
    l = (l / euclid_gcd(l, den(c))) * den(c);
  }
  Rational content(g, l);
  if (leading_coefficient() < 0) content = -content;
  return content;
}

Polynomial Polynomial::coefficient_in(std::size_t var, int k) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp(var) != k) continue;
    Monomial stripped = m;
    stripped.exp(var) = 0;
    r.add_term(stripped, c);
  }
  return r;
}

Polynomial Polynomial::content_in(std::size_t var) const {
  Polynomial g(nvars_);
  for (int k = 0; k <= degree_in(var); ++k) {
    Polynomial c = coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    // A constant gcd can only be the canonical 1; no later coefficient changes it.
    if (g.is_constant()) return Polynomial::constant(nvars_, 1);
  }
  return g;
}

Polynomial Polynomial::primitive_part_in(std::size_t var) const {
  if (is_zero()) return *this;
  auto pp = divided_by(content_in(var));
  if (!pp) throw Error("polynomial: content does not divide (internal)");
  return *pp;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  int db = b.degree_in(var);
  if (db == 0) throw Error("pseudo_remainder: divisor free of the variable");
  Polynomial lb = b.coefficient_in(var, db);
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree_in(var) >= db) {
    int dr = rem.degree_in(var);
    Polynomial lr = rem.coefficient_in(var, dr);
    Polynomial shift = Polynomial::variable(a.nvars(), var, dr - db);
    rem = rem * lb - lr * shift * b;
  }
  return rem;
}

namespace {

// Canonical associate: integer-primitive with positive leading coefficient.
Polynomial make_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  auto r = p.divided_by(Polynomial::constant(p.nvars(), p.rational_content()));
  return *r;
}

// Pseudo-remainder scaled to exactly lc(b)^{delta+1} * a mod b, the
// normalization the subresultant recurrences assume.
Polynomial subresultant_prem(const Polynomial& a, const Polynomial& b,
                             std::size_t var, int delta) {
  const int db = b.degree_in(var);
  const Polynomial lb = b.coefficient_in(var, db);
  Polynomial rem = a;
  int steps = 0;
  while (!rem.is_zero() && rem.degree_in(var) >= db) {
    const int dr = rem.degree_in(var);
    Polynomial lr = rem.coefficient_in(var, dr);
    Polynomial shift = Polynomial::variable(a.nvars(), var, dr - db);
    rem = rem * lb - lr * shift * b;
    ++steps;
  }
  for (; steps <= delta; ++steps) rem = rem * lb;
  return rem;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.nvars(), 1);

  // Main variable: first symbol either polynomial depends on.
  std::size_t var = 0;
  while (var < a.nvars() && a.degree_in(var) == 0 && b.degree_in(var) == 0) ++var;

  if (a.degree_in(var) == 0) return poly_gcd(a, b.content_in(var));
  if (b.degree_in(var) == 0) return poly_gcd(a.content_in(var), b);

  Polynomial ca = a.content_in(var);
  Polynomial cb = b.content_in(var);
  Polynomial cont = poly_gcd(ca, cb);

  Polynomial pa = *a.divided_by(ca);
  Polynomial pb = *b.divided_by(cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  // Frequent easy case: the lower-degree primitive part divides the other.
  if (pa.divided_by(pb)) return make_primitive(cont * pb);

  // Subresultant PRS: each pseudo-remainder is divided by the predicted
  // factor g*h^delta, keeping coefficient growth polynomial without the
  // per-step content computations a primitive PRS would need.
  Polynomial g = Polynomial::constant(a.nvars(), 1);
  Polynomial h = g;
  while (true) {
    const int delta = pa.degree_in(var) - pb.degree_in(var);
    Polynomial r = subresultant_prem(pa, pb, var, delta);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      // Nonzero remainder free of the variable: primitive parts are coprime.
      pb = Polynomial::constant(a.nvars(), 1);
      break;
    }
    pa = pb;
    auto next = r.divided_by(g * h.pow(static_cast<unsigned>(delta)));
    if (!next) throw Error("polynomial gcd: inexact subresultant step");
    pb = *next;
    g = pa.coefficient_in(var, pa.degree_in(var));
    if (delta > 0) {
      auto hh = g.pow(static_cast<unsigned>(delta))
                    .divided_by(h.pow(static_cast<unsigned>(delta - 1)));
      if (!hh) throw Error("polynomial gcd: inexact subresultant step");
      h = *hh;
    }
  }
  return make_primitive(cont * pb.primitive_part_in(var));
}

}  // namespace ncg
