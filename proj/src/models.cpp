#include "ncg/models.hpp"

#include "ncg/printer.hpp"

namespace ncg {

namespace {

SymbolTablePtr bicross_table() {
  return SymbolTable::make(CoordinateSystem{{"t", "x"}}, ParameterTable{{"b"}, "lambda"});
}

std::string idx3(std::size_t a, std::size_t b, std::size_t c) {
  return "[" + std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(c) +
         "]";
}

Metric diagonal_metric(const SymbolTablePtr& table,
                       const std::vector<GradedExpr>& diag) {
  ComponentArray g(table, 2);
  for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
  return Metric(std::move(g));
}

}  // namespace

ValidationReport validate_model(const ModelSpec& spec) {
  ValidationReport rep = validate_algebra(spec.c);
  if (spec.s && !spec.s->table()->same_as(*spec.table))
    rep.errors.push_back("symmetric part belongs to a different symbol table");
  if (!spec.metric && !spec.classical_gamma)
    rep.errors.push_back("model provides neither a metric nor a classical connection");
  if (spec.metric && spec.classical_gamma) {
    const Connection derived = classical_christoffel(*spec.metric);
    if (!(derived == *spec.classical_gamma)) {
      std::string msg =
          "christoffel entries disagree with the Levi-Civita connection of the metric:";
      const std::size_t n = derived.dim();
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t v = 0; v < n; ++v)
            if (!(derived.at(k, m, v) == spec.classical_gamma->at(k, m, v)))
              msg += " " + idx3(k, m, v) + " given " +
                     to_plain(spec.classical_gamma->at(k, m, v)) + ", derived " +
                     to_plain(derived.at(k, m, v)) + ";";
      rep.errors.push_back(msg);
    }
  }
  return rep;
}

bool same_content(const ModelSpec& a, const ModelSpec& b) {
  if (!a.table->same_as(*b.table)) return false;
  if (!(a.c.components() == b.c.components())) return false;
  if (a.s.has_value() != b.s.has_value()) return false;
  if (a.s && !(a.s->components() == b.s->components())) return false;
  if (a.metric.has_value() != b.metric.has_value()) return false;
  if (a.metric && !(*a.metric == *b.metric)) return false;
  if (a.classical_gamma.has_value() != b.classical_gamma.has_value()) return false;
  if (a.classical_gamma && !(*a.classical_gamma == *b.classical_gamma)) return false;
  return true;
}

ModelSpec bicrossproduct_model() {
  const SymbolTablePtr table = bicross_table();
  const GradedExpr t = GradedExpr::symbol(table, "t");
  const GradedExpr x = GradedExpr::symbol(table, "x");
  const GradedExpr xinv = GradedExpr::symbol(table, "x", -1);
  const GradedExpr xinv2 = GradedExpr::symbol(table, "x", -2);
  const GradedExpr b = GradedExpr::symbol(table, "b");
  const GradedExpr one = GradedExpr::constant(table, 1);
  const GradedExpr lam = GradedExpr::deformation(table);

  StructureConstants c(table);
  c.set(1, 0, 1, lam);  // [x, t] = lambda * x

  SymmetricPart s(table);
  s.set(0, 0, 0, -lam);
  s.set(0, 1, 1, lam.scaled(Rational(-1, 2)));

  ComponentArray g(table, 2);
  g(0, 0) = b * x * x;
  g(0, 1) = g(1, 0) = -(b * t * x);
  g(1, 1) = one + b * t * t;

  ComponentArray gamma(table, 3);
  gamma(0, 0, 0) = (b * t).scaled(-2);
  gamma(0, 0, 1) = gamma(0, 1, 0) = xinv * (one + (b * t * t).scaled(2));
  gamma(0, 1, 1) = (t * xinv2 * (one + b * t * t)).scaled(-2);
  gamma(1, 0, 0) = (b * x).scaled(-2);
  gamma(1, 0, 1) = gamma(1, 1, 0) = (b * t).scaled(2);
  gamma(1, 1, 1) = (b * t * t * xinv).scaled(-2);

  return ModelSpec{
      "bicrossproduct",
      table,
      std::move(c),
      std::move(s),
      Metric(std::move(g)),
      Connection::classical(std::move(gamma)),
      {"algebra: [x, t] = lambda*x; calculus fixed by D[0][0][0] = D[0][1][1] = -lambda",
       "christoffel: reference classical connection of the model",
       "metric: fixture consistent with the reference connection; the corrected-connection "
       "reference values do not depend on it"}};
}

namespace {

ModelSpec commutative_model(std::string name, const SymbolTablePtr& table,
                            const std::vector<GradedExpr>& diag) {
  StructureConstants c(table);
  return ModelSpec{std::move(name),
                   table,
                   std::move(c),
                   std::nullopt,
                   diagonal_metric(table, diag),
                   std::nullopt,
                   {"commutative fixture: C = 0, S left to the solver (unique zero)"}};
}

}  // namespace

ModelSpec flat2d_model() {
  const SymbolTablePtr table =
      SymbolTable::make(CoordinateSystem{{"t", "x"}}, ParameterTable{{}, "lambda"});
  const GradedExpr one = GradedExpr::constant(table, 1);
  return commutative_model("flat2d", table, {one, one});
}

ModelSpec polar2d_model() {
  const SymbolTablePtr table =
      SymbolTable::make(CoordinateSystem{{"t", "x"}}, ParameterTable{{}, "lambda"});
  const GradedExpr one = GradedExpr::constant(table, 1);
  const GradedExpr t = GradedExpr::symbol(table, "t");
  return commutative_model("polar2d", table, {one, t * t});
}

ModelSpec polar3d_model() {
  const SymbolTablePtr table =
      SymbolTable::make(CoordinateSystem{{"t", "x", "z"}}, ParameterTable{{}, "lambda"});
  const GradedExpr one = GradedExpr::constant(table, 1);
  const GradedExpr t = GradedExpr::symbol(table, "t");
  return commutative_model("polar3d", table, {one, t * t, one});
}

namespace {

std::string tensor_diff(const TwoTensor& got, const TwoTensor& want) {
  std::string out;
  for (std::size_t r = 0; r < got.dim(); ++r)
    for (std::size_t s = 0; s < got.dim(); ++s)
      if (!(got.at(r, s) == want.at(r, s)))
        out += " (" + std::to_string(r) + "," + std::to_string(s) + "): got " +
               to_plain(got.at(r, s)) + ", want " + to_plain(want.at(r, s)) + ";";
  return out;
}

}  // namespace

VerifyReport verify_bicrossproduct() {
  VerifyReport rep;
  const ModelSpec model = bicrossproduct_model();
  const SymbolTablePtr& table = model.table;
  const StructureConstants& c = model.c;
  const DTensor d = build_d(c, *model.s);
  const Connection& gamma = *model.classical_gamma;

  const GradedExpr t = GradedExpr::symbol(table, "t");
  const GradedExpr x = GradedExpr::symbol(table, "x");
  const GradedExpr xinv = GradedExpr::symbol(table, "x", -1);
  const GradedExpr b = GradedExpr::symbol(table, "b");
  const GradedExpr lam = GradedExpr::deformation(table);

  // nabla0(dx^m) = -Gamma^m_{rs} dx^r (x) dx^s.
  auto nabla0 = [&](std::size_t m) {
    TwoTensor out(table);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) out.at(r, s) = -gamma.at(m, r, s);
    return out;
  };
  const TwoTensor n0dt = nabla0(0);
  const TwoTensor n0dx = nabla0(1);

  auto check2 = [&](const std::string& name, const TwoTensor& got,
                    const TwoTensor& want) {
    if (got == want)
      rep.passed.push_back(name);
    else
      rep.failed.push_back(name + ":" + tensor_diff(got, want));
  };

  check2("[t, nabla0(dt)] = 2*lambda*nabla0(dt)", commutator_coord_tensor(0, n0dt, c, d),
         n0dt.scaled_by(lam.scaled(2)));
  check2("[x, nabla0(dt)] = lambda*nabla0(dx)", commutator_coord_tensor(1, n0dt, c, d),
         n0dx.scaled_by(lam));
  check2("[t, nabla0(dx)] = lambda*nabla0(dx)", commutator_coord_tensor(0, n0dx, c, d),
         n0dx.scaled_by(lam));
  check2("[x, nabla0(dx)] = 0", commutator_coord_tensor(1, n0dx, c, d), TwoTensor(table));

  // Corrected connection against the reference matrix
  //   Gamma~^1 = 2b [[-x, t + lambda/2], [t + lambda/2, -x^-1 t (t + lambda)]].
  const Connection tilde = quantum_christoffel(gamma, d, c);
  const GradedExpr two_b = b.scaled(2);
  ComponentArray want1(table, 2);
  want1(0, 0) = two_b * (-x);
  want1(0, 1) = want1(1, 0) = two_b * (t + lam.scaled(Rational(1, 2)));
  want1(1, 1) = two_b * (-(xinv * t * (t + lam)));
  {
    TwoTensor got(table), want(table);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) {
        got.at(r, s) = tilde.at(1, r, s);
        want.at(r, s) = want1(r, s);
      }
    check2("Gamma~^1 = 2b [[-x, t + lambda/2], [t + lambda/2, -x^-1*t*(t + lambda)]]",
           got, want);
  }

  // Order-0 decomposition: the classical part of Gamma~ is Gamma exactly.
  if (tilde.classical_part() == gamma)
    rep.passed.push_back("order-0 part of Gamma~ equals the classical connection");
  else
    rep.failed.push_back("order-0 part of Gamma~ differs from the classical connection");

  // Central-variable form of the classical connection, expanded at order 0:
  // with v = x dt - t dx,
  //   nabla0(dt) = x^-2 (-v (x) dx + 2bt v (x) v - dx (x) v),
  //   nabla0(dx) = 2b x^-1 v (x) v.
  const GradedExpr v0 = x, v1 = -t;  // components of v
  auto vv = [&](const GradedExpr& scale) {
    TwoTensor out(table);
    const GradedExpr comps[2] = {v0, v1};
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) out.at(r, s) = scale * comps[r] * comps[s];
    return out;
  };
  {
    const GradedExpr xinv2 = GradedExpr::symbol(table, "x", -2);
    TwoTensor expanded = vv(xinv2 * (b * t).scaled(2));  // 2bt v (x) v / x^2
    expanded.at(0, 1) += -(xinv2 * v0);                  // -v (x) dx / x^2
    expanded.at(1, 1) += -(xinv2 * v1);
    expanded.at(1, 0) += -(xinv2 * v0);                  // -dx (x) v / x^2
    expanded.at(1, 1) += -(xinv2 * v1);
    check2("central-variable expansion reproduces nabla0(dt)", expanded, n0dt);
    check2("central-variable expansion reproduces nabla0(dx)", vv(b.scaled(2) * xinv),
           n0dx);
  }

  return rep;
}

}  // namespace ncg
