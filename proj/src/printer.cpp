#include "ncg/printer.hpp"

namespace ncg {

namespace {

std::string plain_monomial(const Monomial& m, const SymbolTable& table) {
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    int e = m.exp(v);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += table.name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// One term without any leading sign; the caller renders the sign.
std::string plain_term(const Monomial& m, const Rational& coeff_abs,
                       const SymbolTable& table) {
  if (m.is_unit()) return to_string(coeff_abs);
  std::string mono = plain_monomial(m, table);
  if (coeff_abs == 1) return mono;
  return to_string(coeff_abs) + "*" + mono;
}

std::string latex_name(const std::string& n) {
  if (n == "lambda") return "\\lambda";
  if (n.size() == 1) return n;
  return "\\mathrm{" + n + "}";
}

std::string latex_rational(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  std::string sign = q < 0 ? "-" : "";
  const BigInt mag = num(q) < 0 ? BigInt(-num(q)) : num(q);
  return sign + "\\frac{" + mag.str() + "}{" + den(q).str() + "}";
}

std::string latex_monomial(const Monomial& m, const SymbolTable& table) {
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    int e = m.exp(v);
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += latex_name(table.name(v));
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string latex_term(const Monomial& m, const Rational& coeff_abs,
                       const SymbolTable& table) {
  if (m.is_unit()) return latex_rational(coeff_abs);
  std::string mono = latex_monomial(m, table);
  if (coeff_abs == 1) return mono;
  return latex_rational(coeff_abs) + " " + mono;
}

template <typename TermRenderer>
std::string render_sum(const Polynomial& p, TermRenderer&& render_term) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      out += render_term(m, mag);
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      out += render_term(m, mag);
    }
  }
  return out;
}

// The denominator can stand bare after '/' only when it is a single positive
// coefficient-free power of one symbol; anything else needs parentheses.
bool den_needs_parens(const Polynomial& den) {
  if (den.term_count() != 1) return true;
  const auto& [m, c] = *den.terms().begin();
  if (c != 1) return true;
  int nonzero = 0;
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m.exp(v) != 0) ++nonzero;
  return nonzero != 1;
}

bool num_needs_parens(const Polynomial& num) { return num.term_count() > 1; }

}  // namespace

std::string to_plain(const Polynomial& p, const SymbolTable& table) {
  return render_sum(p, [&](const Monomial& m, const Rational& mag) {
    return plain_term(m, mag, table);
  });
}

std::string to_plain(const RationalFunction& f, const SymbolTable& table) {
  std::string num = to_plain(f.num(), table);
  if (f.is_polynomial()) return num;
  std::string den = to_plain(f.den(), table);
  if (num_needs_parens(f.num())) num = "(" + num + ")";
  if (den_needs_parens(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_plain(const GradedExpr& e) {
  const SymbolTable& table = *e.table();
  if (e.is_zero()) return "0";
  std::string o0 = to_plain(e.order0(), table);
  if (e.order1().is_zero()) return o0;
  std::string correction =
      table.deformation_symbol() + "*(" + to_plain(e.order1(), table) + ")";
  if (e.order0().is_zero()) return correction;
  return o0 + " + " + correction;
}

std::string to_latex(const Polynomial& p, const SymbolTable& table) {
  return render_sum(p, [&](const Monomial& m, const Rational& mag) {
    return latex_term(m, mag, table);
  });
}

std::string to_latex(const RationalFunction& f, const SymbolTable& table) {
  if (f.is_polynomial()) return to_latex(f.num(), table);
  return "\\frac{" + to_latex(f.num(), table) + "}{" + to_latex(f.den(), table) + "}";
}

std::string to_latex(const GradedExpr& e) {
  const SymbolTable& table = *e.table();
  if (e.is_zero()) return "0";
  std::string o0 = to_latex(e.order0(), table);
  if (e.order1().is_zero()) return o0;
  std::string correction = latex_name(table.deformation_symbol()) + "\\left(" +
                           to_latex(e.order1(), table) + "\\right)";
  if (e.order0().is_zero()) return correction;
  return o0 + " + " + correction;
}

}  // namespace ncg
