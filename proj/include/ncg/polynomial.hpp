#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncg/rational.hpp"
#include "ncg/symbols.hpp"

namespace ncg {

// Exponent vector over the symbol table (coordinates first, then parameters).
// Inside a Polynomial all exponents are >= 0; Laurent powers live one level
// up, folded into the denominator of a RationalFunction.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  static Monomial unit(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int exp(std::size_t var) const { return exps_.at(var); }
  int& exp(std::size_t var) { return exps_.at(var); }
  const std::vector<int>& exps() const { return exps_; }

  bool is_unit() const;  // all exponents zero
  int total_degree() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;          // this | o
  Monomial divided_into(const Monomial& o) const;  // o / this

  // Canonical order: lexicographic on the exponent vector, earlier symbols
  // more significant.  "Greater" monomials print first.
  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<int> exps_;
};

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

// Sparse multivariate polynomial over Q in canonical form: no zero
// coefficients, terms kept in descending monomial order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var, int power = 1);
  static Polynomial from_monomial(Monomial m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // A zero-symbol polynomial is a bare constant; binary operations widen it
  // to the other operand's symbol count so default-constructed accumulators
  // act as plain zeros.
  Polynomial widened(std::size_t nvars) const;
  bool is_one() const;
  // Constant value; throws unless is_constant().
  Rational constant_value() const;

  // Leading term w.r.t. the canonical descending order.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned n) const;
  Polynomial derivative(std::size_t var) const;

  // Exact division: returns nullopt when the divisor does not divide exactly.
  std::optional<Polynomial> divided_by(const Polynomial& divisor) const;

  bool operator==(const Polynomial& o) const = default;

  void add_term(const Monomial& m, const Rational& c);

  // Rational content: the unique c > 0 (times the sign of the leading
  // coefficient) such that *this / c has coprime integer coefficients with a
  // positive leading one.  Zero polynomial -> 0.
  Rational rational_content() const;

  // --- univariate view in one variable (coefficients in the other symbols) --
  // Coefficient of var^k, with var's exponent set to zero.
  Polynomial coefficient_in(std::size_t var, int k) const;
  // Content/primitive part w.r.t. one variable (gcd of the coefficient polys).
  Polynomial content_in(std::size_t var) const;
  Polynomial primitive_part_in(std::size_t var) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Multivariate gcd over Q (primitive pseudo-remainder sequences), returned in
// canonical associate form: integer-primitive, positive leading coefficient.
// gcd(0, 0) = 0; any constant argument (or coprime inputs) gives 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of a by b in variable var (b must depend on var).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

}  // namespace ncg
