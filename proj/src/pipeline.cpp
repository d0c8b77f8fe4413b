#include "ncg/pipeline.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace ncg {

namespace {

std::string hash_hex() {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << convention_ledger_hash();
  return out.str();
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Collects the nonzero components in ascending index order.
TensorSection section_from(std::string name, std::string latex, std::size_t upper,
                           const ComponentArray& arr) {
  TensorSection t;
  t.name = std::move(name);
  t.latex_symbol = std::move(latex);
  t.upper_count = upper;
  t.rank = arr.rank();
  t.dim = arr.dim();
  std::vector<std::size_t> idx(arr.rank(), 0);
  while (true) {
    if (!arr.at(idx).is_zero()) t.nonzero.push_back({idx, arr.at(idx)});
    std::size_t p = idx.size();
    while (p > 0 && ++idx[p - 1] == arr.dim()) idx[--p] = 0;
    if (p == 0) break;
  }
  return t;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

const Metric& require_metric(const ModelSpec& spec, const char* what) {
  if (!spec.metric) throw Error(std::string(what) + " requires a metric section");
  return *spec.metric;
}

// The symmetric calculus part: explicit when given, otherwise solved from the
// metric centrality condition.
SymmetricPart resolve_s(const ModelSpec& spec, TensorReport& report) {
  if (spec.s) return *spec.s;
  if (!spec.metric)
    throw Error(
        "the model gives no symmetric calculus part and no metric to solve it from");
  const SymmetricSolve res = solve_symmetric_part(*spec.metric, spec.c);
  if (res.status == SymmetricSolve::Status::NoSolution)
    throw Error("no symmetric calculus part is compatible with the metric: " +
                join(res.inconsistent, "; "));
  report.notes.push_back("symmetric part solved from the metric centrality condition");
  for (const std::string& n : res.notes) report.notes.push_back(n);
  if (res.status == SymmetricSolve::Status::Family)
    report.notes.push_back("solution family; free entries set to zero: " +
                           join(res.free_entries, ", "));
  return *res.s;
}

// The classical connection: explicit when given, otherwise Levi-Civita of the
// metric.
Connection resolve_gamma(const ModelSpec& spec, TensorReport& report) {
  if (spec.classical_gamma) return *spec.classical_gamma;
  if (!spec.metric)
    throw Error("the model gives neither a classical connection nor a metric");
  report.notes.push_back("classical connection derived from the metric");
  return classical_christoffel(*spec.metric);
}

std::string target_name(Target t) {
  switch (t) {
    case Target::Validate:
      return "validate";
    case Target::Centrality:
      return "centrality";
    case Target::SolveS:
      return "solve-s";
    case Target::Christoffel:
      return "christoffel";
    case Target::Riemann:
      return "riemann";
    case Target::Ricci:
      return "ricci";
    case Target::Einstein:
      return "einstein";
  }
  return "?";
}

void run_validate(const ModelSpec& spec, const ValidationReport& rep,
                  const PipelineOptions& options, PipelineRun& run) {
  TensorReport& r = run.report;
  const SymbolTable& tab = *spec.table;
  std::vector<std::string> coords, params;
  for (std::size_t i = 0; i < tab.dim(); ++i) coords.push_back(tab.name(i));
  for (std::size_t i = tab.dim(); i < tab.size(); ++i) params.push_back(tab.name(i));
  const bool strict_fail = options.strict && !rep.warnings.empty();
  r.facts.emplace_back("status", strict_fail ? "error" : "ok");
  r.facts.emplace_back("dimension", std::to_string(tab.dim()));
  r.facts.emplace_back("coordinates", join(coords, " "));
  r.facts.emplace_back("parameters", params.empty() ? "(none)" : join(params, " "));
  r.facts.emplace_back("deformation_symbol", tab.deformation_symbol());
  r.facts.emplace_back("symmetric_part", spec.s ? "given" : "absent");
  r.facts.emplace_back("metric", spec.metric ? "given" : "absent");
  r.facts.emplace_back("classical_connection", spec.classical_gamma ? "given" : "absent");
  if (strict_fail) {
    r.notes.push_back("strict mode: warnings are treated as errors");
    run.success = false;
  }
  for (const std::string& p : spec.provenance) r.notes.push_back(p);
  if (spec.s) {
    const DTensor d = build_d(spec.c, *spec.s);
    r.tensors.push_back(section_from("D", "D", 2, d.components()));
  }
}

void run_centrality(const ModelSpec& spec, PipelineRun& run) {
  TensorReport& r = run.report;
  const Metric& g = require_metric(spec, "the centrality condition");
  std::optional<SymmetricPart> s;
  if (spec.s) {
    s = *spec.s;
  } else {
    const SymmetricSolve res = solve_symmetric_part(g, spec.c);
    if (res.status == SymmetricSolve::Status::NoSolution) {
      r.facts.emplace_back("central", "no");
      r.notes.push_back(
          "no symmetric calculus part satisfies the centrality condition:");
      for (const std::string& line : res.inconsistent) r.notes.push_back(line);
      run.success = false;
      return;
    }
    s = *res.s;
    r.notes.push_back(
        "symmetric part solved from the metric; the residual vanishes by construction");
    for (const std::string& n : res.notes) r.notes.push_back(n);
  }
  const DTensor d = build_d(spec.c, *s);
  const ComponentArray residual = centrality_residual(g, d, spec.c);
  TensorSection section = section_from("centrality_residual", "E", 1, residual);
  const bool central = section.zero();
  r.facts.emplace_back("central", central ? "yes" : "no");
  r.tensors.push_back(std::move(section));
  run.success = central;
}

void run_solve_s(const ModelSpec& spec, PipelineRun& run) {
  TensorReport& r = run.report;
  const Metric& g = require_metric(spec, "solving for the symmetric part");
  const SymmetricSolve res = solve_symmetric_part(g, spec.c);
  switch (res.status) {
    case SymmetricSolve::Status::Unique:
      r.facts.emplace_back("status", "unique");
      break;
    case SymmetricSolve::Status::Family:
      r.facts.emplace_back("status", "family");
      break;
    case SymmetricSolve::Status::NoSolution:
      r.facts.emplace_back("status", "no-solution");
      break;
  }
  for (const std::string& n : res.notes) r.notes.push_back(n);
  if (res.status == SymmetricSolve::Status::NoSolution) {
    for (const std::string& line : res.inconsistent) r.notes.push_back(line);
    run.success = false;
    return;
  }
  if (res.status == SymmetricSolve::Status::Family)
    r.notes.push_back("free entries set to zero: " + join(res.free_entries, ", "));
  const DTensor d = build_d(spec.c, *res.s);
  const ComponentArray residual = centrality_residual(g, d, spec.c);
  if (!section_from("", "", 0, residual).zero())
    throw Error("internal check failed: solved symmetric part leaves a nonzero residual");
  r.notes.push_back("residual check: zero");
  r.tensors.push_back(section_from("S", "S", 2, res.s->components()));
}

void run_christoffel(const ModelSpec& spec, const PipelineOptions& options,
                     PipelineRun& run) {
  TensorReport& r = run.report;
  const Connection gamma = resolve_gamma(spec, r);
  r.facts.emplace_back("order", std::to_string(options.christoffel_order));
  if (options.christoffel_order == 0) {
    r.tensors.push_back(
        section_from("christoffel", "\\Gamma", 1, gamma.components()));
    return;
  }
  const SymmetricPart s = resolve_s(spec, r);
  const DTensor d = build_d(spec.c, s);
  const Connection corrected = quantum_christoffel(gamma, d, spec.c);
  r.tensors.push_back(
      section_from("christoffel", "\\tilde{\\Gamma}", 1, corrected.components()));
}

RiemannResult compute_riemann(const ModelSpec& spec, TensorReport& r) {
  const Connection gamma = resolve_gamma(spec, r);
  const SymmetricPart s = resolve_s(spec, r);
  const DTensor d = build_d(spec.c, s);
  const Connection corrected = quantum_christoffel(gamma, d, spec.c);
  const ComponentArray sigma = sigma_tensor(gamma, d);
  return riemann(corrected, sigma, gamma, d);
}

void run_riemann(const ModelSpec& spec, PipelineRun& run) {
  const RiemannResult rr = compute_riemann(spec, run.report);
  run.report.tensors.push_back(section_from("riemann", "R", 1, rr.riemann));
}

void run_ricci(const ModelSpec& spec, PipelineRun& run) {
  TensorReport& r = run.report;
  const RiemannResult rr = compute_riemann(spec, r);
  const ComponentArray ric = ricci(rr.riemann);
  r.tensors.push_back(section_from("ricci", "\\mathrm{Ric}", 0, ric));
  if (spec.metric) {
    const GradedExpr scalar = ricci_scalar(ric, inverse_metric(*spec.metric));
    r.scalars.push_back({"scalar_curvature", "R", scalar});
  } else {
    r.notes.push_back("scalar curvature omitted: no metric given");
  }
}

void run_einstein(const ModelSpec& spec, PipelineRun& run) {
  TensorReport& r = run.report;
  const Metric& g = require_metric(spec, "the einstein tensor");
  const RiemannResult rr = compute_riemann(spec, r);
  const ComponentArray ric = ricci(rr.riemann);
  const GradedExpr scalar = ricci_scalar(ric, inverse_metric(g));
  r.tensors.push_back(section_from("einstein", "G", 0, einstein(ric, scalar, g)));
  r.scalars.push_back({"scalar_curvature", "R", scalar});
}

}  // namespace

PipelineRun run_pipeline(const ModelSpec& spec, Target target,
                         const PipelineOptions& options) {
  PipelineRun run;
  run.report.model = spec.name;
  run.report.target = target_name(target);
  run.report.convention_hash = hash_hex();

  Stopwatch validate_watch;
  const ValidationReport rep = validate_model(spec);
  run.timings_ms.emplace_back("validate", validate_watch.ms());
  if (!rep.ok()) throw Error("invalid model: " + join(rep.errors, "; "));
  for (const std::string& w : rep.warnings)
    run.report.notes.push_back("warning: " + w);
  if (options.strict && target != Target::Validate && !rep.warnings.empty())
    throw Error("strict mode: " + join(rep.warnings, "; "));

  Stopwatch target_watch;
  switch (target) {
    case Target::Validate:
      run_validate(spec, rep, options, run);
      break;
    case Target::Centrality:
      run_centrality(spec, run);
      break;
    case Target::SolveS:
      run_solve_s(spec, run);
      break;
    case Target::Christoffel:
      run_christoffel(spec, options, run);
      break;
    case Target::Riemann:
      run_riemann(spec, run);
      break;
    case Target::Ricci:
      run_ricci(spec, run);
      break;
    case Target::Einstein:
      run_einstein(spec, run);
      break;
  }
  run.timings_ms.emplace_back(run.report.target, target_watch.ms());
  return run;
}

}  // namespace ncg
