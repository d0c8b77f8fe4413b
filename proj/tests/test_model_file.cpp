#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "ncg/model_file.hpp"
#include "ncg/printer.hpp"
#include "test_support.hpp"

using namespace ncg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string model_dir() {
  if (const char* env = std::getenv("NCG_MODEL_DIR")) return env;
  return "models";
}

bool mentions(const std::vector<ModelDiagnostic>& diags, std::string_view needle) {
  for (const ModelDiagnostic& d : diags)
    if (d.message.find(needle) != std::string::npos) return true;
  return false;
}

const std::string kMinimal =
    "dimension: 2\n"
    "coordinates: t x\n"
    "parameters:\n"
    "deformation_symbol: lambda\n"
    "metric: 0 0 = 1\n"
    "metric: 1 1 = 1\n";

}  // namespace

TEST_CASE("builtin models survive the render/parse round trip") {
  for (ModelSpec m :
       {bicrossproduct_model(), flat2d_model(), polar2d_model(), polar3d_model()}) {
    std::string text = render_model(m);
    ModelParseResult back = parse_model(text);
    REQUIRE(back.ok());
    CHECK(same_content(*back.spec, m));
    // Canonical text is a fixpoint of parse-then-render.
    CHECK(render_model(*back.spec) == text);
  }
}

TEST_CASE("shipped model files are canonical renderings of the builtins") {
  CHECK(slurp(model_dir() + "/bicrossproduct.model") ==
        render_model(bicrossproduct_model()));
  CHECK(slurp(model_dir() + "/flat2d.model") == render_model(flat2d_model()));
  CHECK(slurp(model_dir() + "/polar2d.model") == render_model(polar2d_model()));
  CHECK(slurp(model_dir() + "/polar3d.model") == render_model(polar3d_model()));
}

TEST_CASE("comments, blank lines, and mirror entries parse with notices") {
  std::string text =
      "# a free-form comment\n"
      "dimension: 2\n"
      "\n"
      "coordinates: t x   # trailing comment\n"
      "parameters: b\n"
      "deformation_symbol: lambda\n"
      "C: 0 1 1 = lambda*(-1)\n"
      "metric: 0 0 = b*x^2\n"
      "metric: 1 0 = -t*x*b\n"
      "metric: 1 1 = b*t^2 + 1\n";
  ModelParseResult r = parse_model(text);
  REQUIRE(r.ok());
  CHECK(r.spec->table->dim() == 2);
  CHECK(equal(r.spec->c.at(1, 0, 1), parse_expression("lambda", r.spec->table)));
  REQUIRE(!r.notices.empty());
  bool noticed = false;
  for (const std::string& n : r.notices)
    if (n.find("metric[0][1] mirrored from the entry at line 9") != std::string::npos)
      noticed = true;
  CHECK(noticed);
  // S was not given: the field is absent, to be solved downstream.
  CHECK(!r.spec->s.has_value());
}

TEST_CASE("zero markers keep a present-but-zero section round-trippable") {
  std::string text = kMinimal + "S: 0 0 0 = 0\n";
  ModelParseResult r = parse_model(text);
  REQUIRE(r.ok());
  REQUIRE(r.spec->s.has_value());
  CHECK(r.spec->s->is_zero());
  // Rendering keeps the marker so parse(render(spec)) preserves presence.
  std::string rendered = render_model(*r.spec);
  CHECK(rendered.find("S: 0 0 0 = 0") != std::string::npos);
  ModelParseResult back = parse_model(rendered);
  REQUIRE(back.ok());
  CHECK(back.spec->s.has_value());
}

TEST_CASE("conflicting symmetric mirrors are reported with both lines") {
  std::string text = kMinimal +
                     "S: 0 1 1 = lambda*(-1/2)\n"
                     "S: 1 0 1 = lambda*(1/2)\n";
  ModelParseResult r = parse_model(text);
  CHECK(!r.ok());
  CHECK(mentions(r.errors, "symmetry requires S"));
  CHECK(mentions(r.errors, "conflicts with line"));

  std::string ctext = kMinimal +
                      "C: 0 1 1 = lambda*(-1)\n"
                      "C: 1 0 1 = lambda*(-1)\n";
  ModelParseResult cr = parse_model(ctext);
  CHECK(!cr.ok());
  CHECK(mentions(cr.errors, "antisymmetry requires C"));
}

TEST_CASE("expression errors carry line and column positions") {
  std::string text =
      "dimension: 2\n"
      "coordinates: t x\n"
      "parameters:\n"
      "deformation_symbol: lambda\n"
      "metric: 0 0 = 1 +\n"
      "metric: 1 1 = 1\n";
  ModelParseResult r = parse_model(text);
  CHECK(!r.ok());
  REQUIRE(!r.errors.empty());
  CHECK(r.errors[0].line == 5);
  CHECK(r.errors[0].column > 14);
}

TEST_CASE("structural problems are named precisely") {
  CHECK(mentions(parse_model("coordinates: t x\n").errors, "missing 'dimension'"));
  CHECK(mentions(parse_model("dimension: 0\ncoordinates:\n").errors,
                 "dimension must be a positive integer"));
  CHECK(mentions(parse_model("dimension: 2\ncoordinates: t\n").errors,
                 "coordinate names"));
  CHECK(mentions(parse_model(kMinimal + "metric: 0 2 = 1\n").errors, "range"));
  CHECK(mentions(parse_model(kMinimal + "metric: 0 = 1\n").errors, "indices"));
  CHECK(mentions(parse_model(kMinimal + "orbit: 0 0 = 1\n").errors,
                 "unknown section 'orbit'"));
  CHECK(mentions(parse_model(kMinimal + "metric: 0 0 = 2\n").errors,
                 "already given at line 5"));
  CHECK(mentions(parse_model("dimension: 2\ndimension: 2\n").errors,
                 "duplicate 'dimension' section (first at line 1)"));
  // Deformed entries must stay in their grade.
  CHECK(mentions(parse_model(kMinimal + "C: 0 1 1 = t\n").errors,
                 "rational multiple of the deformation symbol"));
  CHECK(mentions(parse_model(kMinimal + "metric: 0 1 = lambda\n").errors,
                 "must not carry the deformation symbol"));
}

TEST_CASE("cross-field validation surfaces as whole-file diagnostics") {
  std::string text = kMinimal + "christoffel: 0 0 0 = t\n";
  ModelParseResult r = parse_model(text);
  CHECK(!r.ok());
  CHECK(mentions(r.errors, "Levi-Civita"));
  REQUIRE(!r.errors.empty());
  // Whole-file diagnostics carry line 0.
  bool wholefile = false;
  for (const ModelDiagnostic& d : r.errors)
    if (d.line == 0 && d.message.find("Levi-Civita") != std::string::npos)
      wholefile = true;
  CHECK(wholefile);
}

TEST_CASE("a deformed model without metric but with connection parses") {
  std::string text =
      "dimension: 2\n"
      "coordinates: t x\n"
      "parameters:\n"
      "deformation_symbol: lambda\n"
      "C: 0 1 1 = lambda*(-1)\n"
      "christoffel: 0 1 1 = t\n";
  ModelParseResult r = parse_model(text);
  REQUIRE(r.ok());
  CHECK(!r.spec->metric.has_value());
  REQUIRE(r.spec->classical_gamma.has_value());
  CHECK(equal(r.spec->classical_gamma->at(0, 1, 1),
              parse_expression("t", r.spec->table)));
  // Round trip keeps the connection and the absence of the metric.
  ModelParseResult back = parse_model(render_model(*r.spec));
  REQUIRE(back.ok());
  CHECK(same_content(*back.spec, *r.spec));
}

TEST_CASE("renderer emits one representative per symmetry orbit") {
  ModelSpec m = bicrossproduct_model();
  std::string text = render_model(m);
  CHECK(text.find("C: 0 1 1 = lambda*(-1)") != std::string::npos);
  CHECK(text.find("C: 1 0") == std::string::npos);
  CHECK(text.find("metric: 0 1 = -t*x*b") != std::string::npos);
  CHECK(text.find("metric: 1 0") == std::string::npos);
  CHECK(text.find("S: 0 1 1 = lambda*(-1/2)") != std::string::npos);
  CHECK(text.find("S: 1 0") == std::string::npos);
}
