// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Every symbolic comparison is exact; nothing here is tolerance
// based.  The CLI-facing checks read NCG_CLI_BIN / NCG_MODEL_DIR from the
// environment (injected by the test harness).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "classical_oracle.hpp"
#include "ncg/model_file.hpp"
#include "ncg/models.hpp"
#include "test_support.hpp"

namespace {

using namespace ncg;
using testing::Matrix;
using testing::Rank4;
using testing::Rng;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

GradedExpr ex(const SymbolTablePtr& table, std::string_view text) {
  return parse_expression(text, table);
}

Metric diag_metric(const SymbolTablePtr& table, const std::vector<std::string>& diag) {
  ComponentArray m(table, 2);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = ex(table, diag[i]);
  return Metric(std::move(m));
}

Matrix order0_matrix(const Metric& g) {
  const std::size_t n = g.dim();
  Matrix out(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = g.at(i, j).order0();
  return out;
}

// Full first-order curvature chain for one model.
struct Chain {
  Connection gamma;
  DTensor d;
  Connection corrected;
  ComponentArray sigma;
  RiemannResult rr;
};

Chain make_chain(const Metric& g, const StructureConstants& c, const SymmetricPart& s) {
  Connection gamma = classical_christoffel(g);
  DTensor d = build_d(c, s);
  Connection corrected = quantum_christoffel(gamma, d, c);
  ComponentArray sigma = sigma_tensor(gamma, d);
  RiemannResult rr = riemann(corrected, sigma, gamma, d);
  return Chain{std::move(gamma), std::move(d), std::move(corrected), std::move(sigma),
               std::move(rr)};
}

Chain commutative_chain(const Metric& g) {
  const SymbolTablePtr& table = g.table();
  return make_chain(g, StructureConstants(table), SymmetricPart(table));
}

// The 3-dimensional calculus with [x^0, x^i] = -lambda x^i and the symmetric
// part that extends the 2-dimensional reference calculus.
struct Kappa3 {
  SymbolTablePtr table = testing::table3();
  StructureConstants c{table};
  SymmetricPart s{table};

  Kappa3() {
    const GradedExpr ml = GradedExpr::deformation(table).scaled(Rational(-1));
    c.set(0, 1, 1, ml);
    c.set(0, 2, 2, ml);
    s.set(0, 0, 0, ml);
    s.set(0, 1, 1, ml.scaled(Rational(1, 2)));
    s.set(0, 2, 2, ml.scaled(Rational(1, 2)));
  }
};

// Hand-solved connection for the reference calculus whose centrality residual
// vanishes identically (the reference Levi-Civita connection is not central).
Connection central_reference_connection(const SymbolTablePtr& table, const Rational& q) {
  ComponentArray gamma(table, 3);
  gamma(0, 0, 0) = ex(table, "x^2").scaled(q);
  gamma(0, 0, 1) = ex(table, "-t*x").scaled(q);
  gamma(0, 1, 0) = ex(table, "-t*x").scaled(q);
  gamma(0, 1, 1) = ex(table, "t^2").scaled(q);
  return Connection::classical(std::move(gamma));
}

Metric random_metric2(Rng& rng, const SymbolTablePtr& table) {
  for (;;) {
    const auto entry = [&] {
      GradedExpr e = GradedExpr::constant(table, rng.rational());
      e += GradedExpr::symbol(table, "t").scaled(rng.rational(-2, 2));
      e += GradedExpr::symbol(table, "x").scaled(rng.rational(-2, 2));
      return e;
    };
    ComponentArray m(table, 2);
    m(0, 0) = entry();
    m(1, 1) = entry();
    GradedExpr off = entry();
    m(0, 1) = off;
    m(1, 0) = off;
    try {
      return Metric(std::move(m));
    } catch (const SingularMetric&) {
      continue;
    }
  }
}

Metric random_constant_metric2(Rng& rng, const SymbolTablePtr& table) {
  for (;;) {
    ComponentArray m(table, 2);
    m(0, 0) = GradedExpr::constant(table, rng.nonzero_rational());
    m(1, 1) = GradedExpr::constant(table, rng.nonzero_rational());
    GradedExpr off = GradedExpr::constant(table, rng.rational());
    m(0, 1) = off;
    m(1, 0) = off;
    try {
      return Metric(std::move(m));
    } catch (const SingularMetric&) {
      continue;
    }
  }
}

// Draws for the randomized calculus suites: a bracket family known to satisfy
// the coefficient-level Jacobi identity, plus a free symmetric part.
StructureConstants random_c2(Rng& rng, const SymbolTablePtr& table) {
  StructureConstants c(table);
  c.set(0, 1, 1, GradedExpr::deformation(table).scaled(rng.nonzero_rational()));
  return c;
}

StructureConstants random_c3(Rng& rng, const SymbolTablePtr& table, bool cyclic) {
  StructureConstants c(table);
  if (cyclic) {
    // [x^i, x^j] = q lambda eps_{ijk} x^k: a rescaled rotation algebra.
    const GradedExpr q = GradedExpr::deformation(table).scaled(rng.nonzero_rational());
    c.set(0, 1, 2, q);
    c.set(1, 2, 0, q);
    c.set(2, 0, 1, q);
  } else {
    // [x^0, x^i] = q_i lambda x^i: coordinate scalings of the reference bracket.
    c.set(0, 1, 1, GradedExpr::deformation(table).scaled(rng.nonzero_rational()));
    c.set(0, 2, 2, GradedExpr::deformation(table).scaled(rng.nonzero_rational()));
  }
  return c;
}

SymmetricPart random_s(Rng& rng, const SymbolTablePtr& table) {
  const std::size_t n = table->dim();
  SymmetricPart s(table);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu)
      for (std::size_t kappa = 0; kappa < n; ++kappa)
        s.set(mu, nu, kappa, GradedExpr::deformation(table).scaled(rng.rational()));
  return s;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string run_capture(const std::string& cmd_tail) {
  const char* bin = std::getenv("NCG_CLI_BIN");
  require(bin != nullptr, "NCG_CLI_BIN is not set");
  const auto out = std::filesystem::temp_directory_path() / "ncg_acceptance_run.txt";
  const std::string cmd =
      std::string(bin) + " " + cmd_tail + " > " + out.string() + " 2> /dev/null";
  require(std::system(cmd.c_str()) == 0, "command failed: " + cmd_tail);
  std::string text = slurp(out);
  std::filesystem::remove(out);
  return text;
}

// --- criteria ----------------------------------------------------------------

// Corrected connection of the reference model against its published matrix
// form, through both the library verifier and a direct computation.
void criterion_corrected_connection() {
  require(verify_bicrossproduct().ok(), "built-in verification reports a failure");
  const ModelSpec m = bicrossproduct_model();
  const DTensor d = build_d(m.c, *m.s);
  const Connection corr = quantum_christoffel(*m.classical_gamma, d, m.c);
  // 2b [[-x, t + lambda/2], [t + lambda/2, -x^-1 t (t + lambda)]]
  require(corr.at(1, 0, 0) == ex(m.table, "-2*x*b"), "entry [1][0][0]");
  require(corr.at(1, 0, 1) == ex(m.table, "2*t*b + lambda*b"), "entry [1][0][1]");
  require(corr.at(1, 1, 0) == ex(m.table, "2*t*b + lambda*b"), "entry [1][1][0]");
  require(corr.at(1, 1, 1) == ex(m.table, "-2*t^2*b/x + lambda*(-2*t*b/x)"),
          "entry [1][1][1]");
}

// D tensor of the reference calculus: exactly two nonzero entries.
void criterion_d_tensor() {
  const ModelSpec m = bicrossproduct_model();
  const DTensor d = build_d(m.c, *m.s);
  const GradedExpr ml = ex(m.table, "lambda*(-1)");
  for (std::size_t mu = 0; mu < 2; ++mu)
    for (std::size_t nu = 0; nu < 2; ++nu)
      for (std::size_t k = 0; k < 2; ++k) {
        const bool named = (mu == 0 && nu == 0 && k == 0) || (mu == 0 && nu == 1 && k == 1);
        if (named)
          require(d.at(mu, nu, k) == ml, "named D entry is not -lambda");
        else
          require(d.at(mu, nu, k).is_zero(), "unexpected nonzero D entry");
      }
}

// Coordinate/connection commutator identities of the reference model:
//   [t, nabla0(dt)] = 2 lambda nabla0(dt)   [x, nabla0(dt)] = lambda nabla0(dx)
//   [t, nabla0(dx)] = lambda nabla0(dx)     [x, nabla0(dx)] = 0
void criterion_commutator_identities() {
  const ModelSpec m = bicrossproduct_model();
  const Connection& gamma = *m.classical_gamma;
  const DTensor d = build_d(m.c, *m.s);
  TwoTensor n0(m.table), n1(m.table);  // nabla0(dx^m) = -Gamma^m_{ab} dx^a (x) dx^b
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      n0.at(a, b) = -gamma.at(0, a, b);
      n1.at(a, b) = -gamma.at(1, a, b);
    }
  const TwoTensor k_t_n0 = commutator_coord_tensor(0, n0, m.c, d);
  const TwoTensor k_x_n0 = commutator_coord_tensor(1, n0, m.c, d);
  const TwoTensor k_t_n1 = commutator_coord_tensor(0, n1, m.c, d);
  const TwoTensor k_x_n1 = commutator_coord_tensor(1, n1, m.c, d);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const RationalFunction n0ab = n0.at(a, b).order0();
      const RationalFunction n1ab = n1.at(a, b).order0();
      require(k_t_n0.at(a, b).order0().is_zero() &&
                  k_t_n0.at(a, b).order1() == n0ab + n0ab,
              "[t, nabla0(dt)] != 2 lambda nabla0(dt)");
      require(k_x_n0.at(a, b).order0().is_zero() && k_x_n0.at(a, b).order1() == n1ab,
              "[x, nabla0(dt)] != lambda nabla0(dx)");
      require(k_t_n1.at(a, b).order0().is_zero() && k_t_n1.at(a, b).order1() == n1ab,
              "[t, nabla0(dx)] != lambda nabla0(dx)");
      require(k_x_n1.at(a, b).is_zero(), "[x, nabla0(dx)] != 0");
    }
}

// Expanding the central-variable form of the classical connection
//   nabla0(dx) = 2b x^-1 v (x) v,  nabla0(dt) = x^-2 (-v (x) dx + 2bt v (x) v
//   - dx (x) v),  v = x dt - t dx
// in the coordinate basis reproduces -Gamma^0 and -Gamma^1 at grade 0.
void criterion_central_variable_expansion() {
  const ModelSpec m = bicrossproduct_model();
  const Connection& gamma = *m.classical_gamma;
  const SymbolTablePtr& T = m.table;
  const GradedExpr v[2] = {ex(T, "x"), ex(T, "-t")};
  const GradedExpr dxv[2] = {GradedExpr::zero(T), GradedExpr::constant(T, 1)};
  const GradedExpr f1 = ex(T, "2*b/x");
  const GradedExpr f0 = ex(T, "1/x^2");
  const GradedExpr bt2 = ex(T, "2*b*t");
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const GradedExpr t1 = f1 * v[a] * v[b];
      const GradedExpr t0 = f0 * (-(v[a] * dxv[b]) + bt2 * v[a] * v[b] - dxv[a] * v[b]);
      require(t0 == -gamma.at(0, a, b), "dt expansion disagrees with -Gamma^0");
      require(t1 == -gamma.at(1, a, b), "dx expansion disagrees with -Gamma^1");
    }
}

// Classical-limit suite: the lambda = 0 pipeline equals the independent
// textbook oracle on flat, polar-form 2D, polar-form 3D, and a curved 3D
// metric; both polar forms have identically zero curvature.
void criterion_classical_limit() {
  struct Case {
    ModelSpec spec;
    bool expect_flat;
  };
  std::vector<Case> cases;
  cases.push_back({flat2d_model(), true});
  cases.push_back({polar2d_model(), true});
  cases.push_back({polar3d_model(), true});

  const std::size_t named = cases.size();
  for (std::size_t i = 0; i < named; ++i) {
    const Case& cs = cases[i];
    const Metric& g = *cs.spec.metric;
    const Chain ch = commutative_chain(g);
    const Matrix G = order0_matrix(g);
    const Rank4 orm = testing::oracle_riemann(testing::oracle_christoffel(G));
    const Matrix oric = testing::oracle_ricci(orm);
    const RationalFunction osc = testing::oracle_scalar(G, oric);
    const Matrix oein = testing::oracle_einstein(G, oric, osc);
    const std::size_t n = g.dim();
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t r = 0; r < n; ++r) {
            const GradedExpr& val = ch.rr.riemann(m, s, a, r);
            require(val.order1().is_zero(), "commutative model has a grade-1 term");
            require(val.order0() == orm[m][s][a][r], "riemann disagrees with oracle");
            if (cs.expect_flat) require(val.is_zero(), "polar-form model is not flat");
          }
    const ComponentArray ric = ricci(ch.rr.riemann);
    const GradedExpr sc = ricci_scalar(ric, inverse_metric(g));
    const ComponentArray ein = einstein(ric, sc, g);
    require(sc.order1().is_zero() && sc.order0() == osc, "scalar disagrees with oracle");
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < n; ++r) {
        require(ric(s, r).order0() == oric[s][r] && ric(s, r).order1().is_zero(),
                "ricci disagrees with oracle");
        require(ein(s, r).order0() == oein[s][r] && ein(s, r).order1().is_zero(),
                "einstein disagrees with oracle");
      }
  }

  // Curved 3D check with a nonzero classical Einstein tensor.
  const Metric g3 = diag_metric(testing::table3(), {"1", "t", "1"});
  const Chain ch3 = commutative_chain(g3);
  const Matrix G3 = order0_matrix(g3);
  const Rank4 orm3 = testing::oracle_riemann(testing::oracle_christoffel(G3));
  bool einstein_nonzero = false;
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t r = 0; r < 3; ++r)
          require(ch3.rr.riemann(m, s, a, r).order0() == orm3[m][s][a][r] &&
                      ch3.rr.riemann(m, s, a, r).order1().is_zero(),
                  "curved 3D riemann disagrees with oracle");
  const ComponentArray ric3 = ricci(ch3.rr.riemann);
  const ComponentArray ein3 =
      einstein(ric3, ricci_scalar(ric3, inverse_metric(g3)), g3);
  const Matrix oric3 = testing::oracle_ricci(orm3);
  const Matrix oein3 =
      testing::oracle_einstein(G3, oric3, testing::oracle_scalar(G3, oric3));
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t r = 0; r < 3; ++r) {
      require(ein3(s, r).order0() == oein3[s][r], "curved 3D einstein vs oracle");
      if (!ein3(s, r).is_zero()) einstein_nonzero = true;
    }
  require(einstein_nonzero, "curved 3D einstein unexpectedly vanishes");
}

// d^2 = 0 on randomized Laurent monomials for randomized valid calculi in
// dimensions 2 and 3.
void criterion_d_squared() {
  Rng rng(0x20260814u);
  int checked2 = 0, checked3 = 0;
  for (int draw = 0; draw < 6; ++draw) {
    const SymbolTablePtr& T = testing::table2();
    const StructureConstants c = random_c2(rng, T);
    const ValidationReport rep = validate_algebra(c);
    require(rep.ok() && rep.warnings.empty(), "random 2D calculus is invalid");
    const DTensor d = build_d(c, random_s(rng, T));
    for (int i = 0; i < 20; ++i) {
      const GradedExpr f = rng.laurent_monomial(T);
      const OneForm df = exterior_d(f, d);
      require(exterior_d_oneform(df, d).is_zero(), "d^2 != 0 in dimension 2");
      ++checked2;
    }
  }
  for (int draw = 0; draw < 6; ++draw) {
    const SymbolTablePtr& T = testing::table3();
    const StructureConstants c = random_c3(rng, T, draw % 2 == 0);
    const ValidationReport rep = validate_algebra(c);
    require(rep.ok() && rep.warnings.empty(), "random 3D calculus is invalid");
    const DTensor d = build_d(c, random_s(rng, T));
    for (int i = 0; i < 20; ++i) {
      const GradedExpr f = rng.laurent_monomial(T);
      const OneForm df = exterior_d(f, d);
      require(exterior_d_oneform(df, d).is_zero(), "d^2 != 0 in dimension 3");
      ++checked3;
    }
  }
  require(checked2 >= 100 && checked3 >= 100, "randomized coverage too small");
}

// d applied to a coordinate bracket reproduces the structure constants:
// d[x^mu, x^nu] = C^{mu nu}_kappa dx^kappa on randomized models.
void criterion_d_of_brackets() {
  Rng rng(0x51e57ab1u);
  for (int draw = 0; draw < 5; ++draw) {
    for (int dim = 2; dim <= 3; ++dim) {
      const SymbolTablePtr& T = dim == 2 ? testing::table2() : testing::table3();
      const StructureConstants c =
          dim == 2 ? random_c2(rng, T) : random_c3(rng, T, draw % 2 == 0);
      const DTensor d = build_d(c, random_s(rng, T));
      const std::size_t n = T->dim();
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
          const GradedExpr xm = GradedExpr::symbol(T, mu);
          const GradedExpr xn = GradedExpr::symbol(T, nu);
          const GradedExpr bracket =
              product_ordered(xm, xn, c) - product_ordered(xn, xm, c);
          const OneForm w = exterior_d(bracket, d);
          for (std::size_t k = 0; k < n; ++k)
            require(w.at(k) == c.at(mu, nu, k), "d[x^mu, x^nu] != C^{mu nu}_k dx^k");
        }
    }
  }
}

// Whenever the symmetric part can be solved from (g, C), the resulting
// centrality residual vanishes identically; for C = 0 and constant metrics
// the unique solution is S = 0.
void criterion_centrality_round_trip() {
  Rng rng(0xc0ffee11u);
  const SymbolTablePtr& T = testing::table2();
  int solved = 0;
  const ModelSpec m = bicrossproduct_model();
  for (int draw = 0; draw < 14; ++draw) {
    Metric g = draw == 0   ? Metric(m.metric->components())
               : draw == 1 ? diag_metric(T, {"1", "1"})
                           : random_metric2(rng, T);
    const StructureConstants c =
        draw == 0 ? StructureConstants(m.c) : random_c2(rng, T);
    if (!g.table()->same_as(*c.table())) continue;
    const SymmetricSolve res = solve_symmetric_part(g, c);
    if (res.status == SymmetricSolve::Status::NoSolution) continue;
    const DTensor d = build_d(c, *res.s);
    require(centrality_residual(g, d, c).is_zero(),
            "solved symmetric part leaves a nonzero residual");
    ++solved;
  }
  require(solved >= 2, "no solvable draws reached the round trip");

  for (int draw = 0; draw < 4; ++draw) {
    const Metric g = random_constant_metric2(rng, T);
    const SymmetricSolve res = solve_symmetric_part(g, StructureConstants(T));
    require(res.status == SymmetricSolve::Status::Unique,
            "constant metric with C = 0 is not uniquely solvable");
    require(res.s->is_zero(), "constant metric with C = 0 needs a nonzero S");
  }
}

// On connections passing the centrality check, the general corrected-connection
// formula and its central-connection reduction agree exactly.
void criterion_central_reduction() {
  const ModelSpec m = bicrossproduct_model();
  const DTensor d = build_d(m.c, *m.s);

  // The reference Levi-Civita connection is not central: the reduced formula
  // must refuse it.
  bool threw = false;
  try {
    quantum_christoffel_central(*m.classical_gamma, d, m.c);
  } catch (const CentralityViolation&) {
    threw = true;
  }
  require(threw, "non-central connection was accepted by the reduced formula");

  Rng rng(0xace0fba5u);
  for (int draw = 0; draw < 8; ++draw) {
    const Rational q = draw == 0 ? Rational(0) : rng.nonzero_rational();
    const Connection conn = central_reference_connection(m.table, q);
    require(connection_centrality_check(conn, d, m.c).central(),
            "scaled central connection failed the centrality check");
    const Connection a = quantum_christoffel(conn, d, m.c);
    const Connection b = quantum_christoffel_central(conn, d, m.c);
    require(a.components() == b.components(),
            "general and reduced corrections disagree on a central connection");
  }

  // Dimension 3: the zero connection is central for any calculus.
  Kappa3 k3;
  const DTensor d3 = build_d(k3.c, k3.s);
  const Connection zero3 = Connection::classical(ComponentArray(k3.table, 3));
  require(connection_centrality_check(zero3, d3, k3.c).central(),
          "zero connection failed the centrality check");
  require(quantum_christoffel(zero3, d3, k3.c).components() ==
              quantum_christoffel_central(zero3, d3, k3.c).components(),
          "general and reduced corrections disagree on the zero connection");
}

// Riemann antisymmetry in the last index pair, both grades, on every computed
// model.
void criterion_riemann_antisymmetry() {
  std::vector<ComponentArray> computed;

  const ModelSpec m = bicrossproduct_model();
  computed.push_back(
      make_chain(*m.metric, m.c, *m.s).rr.riemann);

  Kappa3 k3;
  computed.push_back(
      make_chain(diag_metric(k3.table, {"1", "t", "1"}), k3.c, k3.s).rr.riemann);

  computed.push_back(commutative_chain(*flat2d_model().metric).rr.riemann);
  computed.push_back(commutative_chain(*polar2d_model().metric).rr.riemann);
  computed.push_back(commutative_chain(*polar3d_model().metric).rr.riemann);
  computed.push_back(
      commutative_chain(diag_metric(testing::table2(), {"1", "t"})).rr.riemann);

  // Central-connection variant of the reference calculus.
  {
    const DTensor d = build_d(m.c, *m.s);
    const Connection conn = central_reference_connection(m.table, Rational(1));
    const Connection corr = quantum_christoffel(conn, d, m.c);
    computed.push_back(riemann(corr, sigma_tensor(conn, d), conn, d).riemann);
  }

  for (const ComponentArray& R : computed) {
    const std::size_t n = R.dim();
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t r = 0; r < n; ++r)
            require((R.at({mu, s, a, r}) + R.at({mu, s, r, a})).is_zero(),
                    "riemann is not antisymmetric in the last index pair");
  }
}

// Grade-0 Einstein tensor vanishes identically for every 2-dimensional model.
void criterion_2d_einstein_degeneracy() {
  std::vector<std::pair<Metric, Chain>> cases;
  const ModelSpec m = bicrossproduct_model();
  cases.emplace_back(Metric(m.metric->components()), make_chain(*m.metric, m.c, *m.s));
  cases.emplace_back(Metric(flat2d_model().metric->components()),
                     commutative_chain(*flat2d_model().metric));
  cases.emplace_back(Metric(polar2d_model().metric->components()),
                     commutative_chain(*polar2d_model().metric));
  const Metric gt = diag_metric(testing::table2(), {"1", "t"});
  cases.emplace_back(Metric(gt.components()), commutative_chain(gt));
  Rng rng(0xdeadf00du);
  for (int draw = 0; draw < 2; ++draw) {
    const Metric g = random_metric2(rng, testing::table2());
    cases.emplace_back(Metric(g.components()), commutative_chain(g));
  }

  for (const auto& [g, ch] : cases) {
    const ComponentArray ric = ricci(ch.rr.riemann);
    const GradedExpr sc = ricci_scalar(ric, inverse_metric(g));
    const ComponentArray ein = einstein(ric, sc, g);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t r = 0; r < 2; ++r)
        require(ein(s, r).order0().is_zero(),
                "2D einstein tensor has a grade-0 component");
  }
}

// The Riemann output equals an independently assembled classical part (from
// the textbook oracle) plus the seven quantum terms: two derivative
// corrections, four mixed quadratic terms, and the sigma contraction.
void criterion_riemann_decomposition() {
  struct Input {
    Metric g;
    StructureConstants c;
    SymmetricPart s;
  };
  const ModelSpec m = bicrossproduct_model();
  Kappa3 k3;
  std::vector<Input> inputs;
  inputs.push_back({Metric(m.metric->components()), m.c, *m.s});
  inputs.push_back({diag_metric(k3.table, {"1", "t", "1"}), k3.c, k3.s});

  for (const Input& in : inputs) {
    const SymbolTablePtr& T = in.g.table();
    const std::size_t n = in.g.dim();
    const Chain ch = make_chain(in.g, in.c, in.s);
    const ComponentArray qgamma = ch.corrected.quantum_part();
    const Rank4 orm =
        testing::oracle_riemann(testing::oracle_christoffel(order0_matrix(in.g)));

    // Grade-1 derivative components of the corrected connection (includes the
    // left-normalization cost of differentiating the grade-0 part).
    ComponentArray qd(T, 4);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t v = 0; v < n; ++v) {
          const OneForm w = exterior_d(ch.corrected.at(k, mu, v), ch.d);
          for (std::size_t l = 0; l < n; ++l)
            qd(k, mu, v, l) = GradedExpr::pure_order1(T, w.at(l).order1());
        }

    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t r = 0; r < n; ++r) {
            RationalFunction o1 =
                qd(mu, r, s, a).order1() - qd(mu, a, s, r).order1();
            for (std::size_t l = 0; l < n; ++l) {
              o1 = o1 + ch.gamma.at(mu, a, l).order0() * qgamma(l, r, s).order1();
              o1 = o1 + qgamma(mu, a, l).order1() * ch.gamma.at(l, r, s).order0();
              o1 = o1 - ch.gamma.at(mu, r, l).order0() * qgamma(l, a, s).order1();
              o1 = o1 - qgamma(mu, r, l).order1() * ch.gamma.at(l, a, s).order0();
              for (std::size_t b = 0; b < n; ++b)
                o1 = o1 + ch.gamma.at(mu, l, b).order0() *
                              (ch.sigma(l, b, r, s, a).order1() -
                               ch.sigma(l, b, a, s, r).order1());
            }
            const GradedExpr expected(T, orm[mu][s][a][r], o1);
            require(ch.rr.riemann(mu, s, a, r) == expected,
                    "riemann disagrees with the assembled decomposition");
          }
  }
}

// Parse -> render -> parse fixpoint on the shipped model files, and
// byte-identical reports across repeated runs of the binary.
void criterion_parser_determinism() {
  const char* dir = std::getenv("NCG_MODEL_DIR");
  require(dir != nullptr, "NCG_MODEL_DIR is not set");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".model") files.push_back(entry.path());
  require(!files.empty(), "no model files found");
  for (const auto& file : files) {
    const ModelParseResult first = parse_model(slurp(file));
    require(first.ok(), "shipped model fails to parse: " + file.string());
    const std::string rendered = render_model(*first.spec);
    const ModelParseResult second = parse_model(rendered);
    require(second.ok(), "rendered model fails to parse: " + file.string());
    require(render_model(*second.spec) == rendered,
            "render is not a fixpoint: " + file.string());
    require(same_content(*first.spec, *second.spec),
            "round trip changes the model: " + file.string());
  }

  const std::string model = std::string(dir) + "/bicrossproduct.model";
  for (const std::string& args :
       {"einstein " + model + " --format json", "riemann " + model}) {
    const std::string a = run_capture(args);
    const std::string b = run_capture(args);
    require(!a.empty() && a == b, "repeated runs differ: " + args);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"corrected connection of the reference model matches its matrix form",
       criterion_corrected_connection},
      {"reference calculus D tensor has exactly the two named entries",
       criterion_d_tensor},
      {"coordinate/connection commutator identities hold exactly",
       criterion_commutator_identities},
      {"central-variable expansion reproduces the classical connection",
       criterion_central_variable_expansion},
      {"classical limit matches the independent oracle; polar forms are flat",
       criterion_classical_limit},
      {"d^2 = 0 on randomized Laurent monomials in dimensions 2 and 3",
       criterion_d_squared},
      {"d of a coordinate bracket reproduces the structure constants",
       criterion_d_of_brackets},
      {"centrality solve round trip leaves a zero residual; C = 0 gives S = 0",
       criterion_centrality_round_trip},
      {"central-connection reduction agrees with the general formula",
       criterion_central_reduction},
      {"riemann antisymmetry in the last index pair on all computed models",
       criterion_riemann_antisymmetry},
      {"grade-0 einstein tensor vanishes for every 2D model",
       criterion_2d_einstein_degeneracy},
      {"riemann equals the assembled classical-plus-quantum decomposition",
       criterion_riemann_decomposition},
      {"parse/render fixpoint and byte-identical repeated reports",
       criterion_parser_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].body();
      std::printf("PASS: criterion %2zu: %s\n", i + 1, criteria[i].label);
    } catch (const std::exception& e) {
      std::printf("FAIL: criterion %2zu: %s (%s)\n", i + 1, criteria[i].label, e.what());
      ++failures;
    }
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
