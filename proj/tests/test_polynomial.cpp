#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/polynomial.hpp"
#include "ncg/printer.hpp"
#include "test_support.hpp"

using namespace ncg;
using ncg::testing::table2;

namespace {

// Symbols in table2: 0 = t, 1 = x, 2 = b.
Polynomial var(std::size_t v, int p = 1) { return Polynomial::variable(3, v, p); }
Polynomial konst(const Rational& c) { return Polynomial::constant(3, c); }

}  // namespace

TEST_CASE("arithmetic keeps terms in canonical descending order") {
  Polynomial p = var(1, 2) + var(0) * var(1) + konst(3);  // x^2 + t*x + 3
  CHECK(to_plain(p, *table2()) == "t*x + x^2 + 3");

  Polynomial q = p - p;
  CHECK(q.is_zero());
  CHECK(to_plain(q, *table2()) == "0");
}

TEST_CASE("zero coefficients are dropped eagerly") {
  Polynomial p = var(0) + var(1);
  p -= var(0);
  CHECK(p.term_count() == 1);
  p -= var(1);
  CHECK(p.is_zero());
  CHECK(p == Polynomial(3));
}

TEST_CASE("multiplication expands exactly") {
  Polynomial p = (var(1) - var(0)) * (var(1) + var(0));  // (x-t)(x+t)
  CHECK(p == var(1, 2) - var(0, 2));
}

TEST_CASE("derivative") {
  Polynomial p = var(0, 3) * var(2) + var(1);  // t^3 b + x
  CHECK(p.derivative(0) == var(0, 2).scaled(3) * var(2));
  CHECK(p.derivative(1) == konst(1));
}

TEST_CASE("exact division succeeds and fails correctly") {
  Polynomial a = var(1, 2) - var(0, 2);
  Polynomial d = var(1) - var(0);
  auto q = a.divided_by(d);
  REQUIRE(q.has_value());
  CHECK(*q == var(1) + var(0));
  CHECK_FALSE(a.divided_by(var(1) + konst(1)).has_value());
}

TEST_CASE("rational content normalizes sign and denominators") {
  Polynomial p = var(0).scaled(Rational(-2, 3)) + konst(Rational(-4, 9));
  Rational c = p.rational_content();
  CHECK(c == Rational(-2, 9));
  auto prim = p.divided_by(konst(c));
  REQUIRE(prim.has_value());
  CHECK(prim->leading_coefficient() > 0);
  CHECK(prim->rational_content() == 1);
}

TEST_CASE("gcd of univariate pair") {
  // gcd(x^2 - t^2, x - t) = x - t up to sign; the canonical associate has a
  // positive leading coefficient in the t-major term order.
  Polynomial a = var(1, 2) - var(0, 2);
  Polynomial b = var(1) - var(0);
  CHECK(poly_gcd(a, b) == var(0) - var(1));
}

TEST_CASE("gcd with parameter coefficients") {
  // gcd(b x^2 + b x, x^2 + 2x + 1) = x + 1
  Polynomial a = var(2) * var(1, 2) + var(2) * var(1);
  Polynomial b = var(1, 2) + var(1).scaled(2) + konst(1);
  CHECK(poly_gcd(a, b) == var(1) + konst(1));
}

TEST_CASE("gcd of coprime polynomials is one") {
  Polynomial a = var(1, 2) + konst(1);
  Polynomial b = var(0) + var(1);
  CHECK(poly_gcd(a, b).is_one());
}

TEST_CASE("gcd handles shared monomial factors across variables") {
  // gcd(t^2 x b, t x^2) = t x
  Polynomial a = var(0, 2) * var(1) * var(2);
  Polynomial b = var(0) * var(1, 2);
  CHECK(poly_gcd(a, b) == var(0) * var(1));
}

TEST_CASE("gcd is symmetric and associative on a random sample") {
  ncg::testing::Rng rng(0xabcdef12);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f(3), g(3), h(3);
    auto random_poly = [&](Polynomial& p) {
      int terms = rng.uniform(1, 3);
      for (int i = 0; i < terms; ++i) {
        Monomial m(3);
        for (std::size_t v = 0; v < 3; ++v) m.exp(v) = rng.uniform(0, 2);
        p.add_term(m, rng.nonzero_rational());
      }
    };
    random_poly(f);
    random_poly(g);
    random_poly(h);
    Polynomial common = poly_gcd(f * h, g * h);
    // h divides the gcd of (fh, gh).
    auto q = common.divided_by(poly_gcd(h, h));
    CHECK(q.has_value());
  }
}

TEST_CASE("pseudo remainder drops the main-variable degree") {
  Polynomial a = var(1, 3) + var(0) * var(1);
  Polynomial b = var(1, 2) + konst(1);
  Polynomial r = pseudo_remainder(a, b, 1);
  CHECK(r.degree_in(1) < 2);
}
