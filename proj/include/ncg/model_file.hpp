#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/models.hpp"

namespace ncg {

// Line-oriented model description.  Sections, one per line, '#' comments:
//   dimension: 2
//   coordinates: t x
//   parameters: b
//   deformation_symbol: lambda
//   C: mu nu kappa = <expr>           (antisymmetric mirror implied)
//   S: mu nu kappa = <expr>           (optional; symmetric mirror implied)
//   metric: mu nu = <expr>            (optional; mirrored with a notice)
//   christoffel: kappa mu nu = <expr> (optional; mirrored with a notice)
// Unspecified tensor entries are zero.  An absent C section means C = 0; an
// absent S/metric/christoffel section means the field is absent (S is then
// solved from the metric downstream).  Expressions use the engine grammar.

struct ModelDiagnostic {
  std::size_t line = 0;  // 1-based; 0 for whole-file diagnostics
  std::size_t column = 0;
  std::string message;
};

struct ModelParseResult {
  std::optional<ModelSpec> spec;
  std::vector<ModelDiagnostic> errors;
  std::vector<std::string> notices;

  bool ok() const { return spec.has_value() && errors.empty(); }
};

ModelParseResult parse_model(const std::string& text);

// Canonical form: fixed section order, ascending indices, one representative
// per symmetry orbit, canonical expression strings.  parse_model of the
// result reproduces the spec exactly (fixpoint).
std::string render_model(const ModelSpec& spec);

}  // namespace ncg
