#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncg/model_file.hpp"
#include "ncg/pipeline.hpp"

namespace {

struct SubState {
  CLI::App* sub = nullptr;
  ncg::Target target = ncg::Target::Validate;
  bool is_verify = false;
  std::string file;
  std::string format = "plain";
  std::string out;
  bool strict = false;
  int order = 1;
  bool timings = false;
};

std::string stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base.erase(dot);
  return base;
}

std::string hash_hex() {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16)
      << ncg::convention_ledger_hash();
  return out.str();
}

void print_error(const std::string& kind, const std::string& message,
                 const std::vector<ncg::ModelDiagnostic>& diagnostics = {}) {
  nlohmann::ordered_json err;
  err["error"]["kind"] = kind;
  err["error"]["message"] = message;
  if (!diagnostics.empty()) {
    err["error"]["diagnostics"] = nlohmann::ordered_json::array();
    for (const ncg::ModelDiagnostic& d : diagnostics)
      err["error"]["diagnostics"].push_back(
          {{"line", d.line}, {"column", d.column}, {"message", d.message}});
  }
  std::cerr << err.dump(2) << "\n";
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    print_error("io", "cannot open output file: " + out_path);
    return 1;
  }
  out << text;
  return 0;
}

int run_verify(const SubState& st, ncg::Format fmt) {
  const ncg::VerifyReport vr = ncg::verify_bicrossproduct();
  ncg::TensorReport r;
  r.model = "bicrossproduct";
  r.target = "verify-bicrossproduct";
  r.convention_hash = hash_hex();
  r.facts.emplace_back("status", vr.ok() ? "ok" : "fail");
  r.facts.emplace_back("passed", std::to_string(vr.passed.size()));
  r.facts.emplace_back("failed", std::to_string(vr.failed.size()));
  for (const std::string& p : vr.passed) r.notes.push_back("pass: " + p);
  for (const std::string& f : vr.failed) r.notes.push_back("fail: " + f);
  if (int rc = emit(ncg::render(r, fmt), st.out)) return rc;
  return vr.ok() ? 0 : 1;
}

int run_subcommand(const SubState& st) {
  const ncg::Format fmt = *ncg::parse_format(st.format);
  if (st.is_verify) return run_verify(st, fmt);

  std::ifstream in(st.file, std::ios::binary);
  if (!in) {
    print_error("io", "cannot read model file: " + st.file);
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  ncg::ModelParseResult parsed = ncg::parse_model(buffer.str());
  for (const std::string& n : parsed.notices) std::cerr << "notice: " << n << "\n";
  if (!parsed.ok()) {
    std::ostringstream msg;
    msg << st.file << ": " << parsed.errors.size()
        << (parsed.errors.size() == 1 ? " error" : " errors");
    print_error("model", msg.str(), parsed.errors);
    return 1;
  }
  parsed.spec->name = stem(st.file);

  ncg::PipelineOptions options;
  options.strict = st.strict;
  options.christoffel_order = st.order;
  try {
    const ncg::PipelineRun run = ncg::run_pipeline(*parsed.spec, st.target, options);
    if (st.timings)
      for (const auto& [stage, ms] : run.timings_ms)
        std::cerr << "timing: " << stage << ": " << ms << " ms\n";
    if (int rc = emit(ncg::render(run.report, fmt), st.out)) return rc;
    return run.success ? 0 : 1;
  } catch (const ncg::Error& e) {
    print_error("computation", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact first-order curvature engine for Lie-algebraic noncommutative "
      "differential calculi"};
  app.require_subcommand(1);

  struct Verb {
    const char* name;
    const char* help;
    ncg::Target target;
    bool has_order;
  };
  const std::vector<Verb> verbs = {
      {"validate", "check a model file and summarize its contents",
       ncg::Target::Validate, false},
      {"centrality", "residual of the metric centrality condition",
       ncg::Target::Centrality, false},
      {"solve-s", "solve the centrality condition for the symmetric part S",
       ncg::Target::SolveS, false},
      {"christoffel", "corrected connection (or classical with --order 0)",
       ncg::Target::Christoffel, true},
      {"riemann", "first-order corrected Riemann tensor", ncg::Target::Riemann, false},
      {"ricci", "Ricci tensor and, given a metric, the curvature scalar",
       ncg::Target::Ricci, false},
      {"einstein", "first-order corrected Einstein tensor", ncg::Target::Einstein,
       false},
  };

  std::vector<std::unique_ptr<SubState>> states;
  auto add_common = [](SubState& st) {
    st.sub->add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}))
        ->capture_default_str();
    st.sub->add_option("--out", st.out, "write the report to a file instead of stdout");
  };

  for (const Verb& v : verbs) {
    auto st = std::make_unique<SubState>();
    st->sub = app.add_subcommand(v.name, v.help);
    st->target = v.target;
    st->sub->add_option("file", st->file, "model file")
        ->required()
        ->check(CLI::ExistingFile);
    add_common(*st);
    st->sub->add_flag("--strict", st->strict, "treat algebra warnings as errors");
    st->sub->add_flag("--timings", st->timings, "print stage timings to stderr");
    if (v.has_order)
      st->sub->add_option("--order", st->order, "deformation order of the connection")
          ->check(CLI::Range(0, 1))
          ->capture_default_str();
    states.push_back(std::move(st));
  }
  {
    auto st = std::make_unique<SubState>();
    st->sub = app.add_subcommand("verify-bicrossproduct",
                                 "check the built-in bicrossproduct model against its "
                                 "reference values");
    st->is_verify = true;
    add_common(*st);
    states.push_back(std::move(st));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  for (const auto& st : states)
    if (st->sub->parsed()) return run_subcommand(*st);
  return 2;
}
