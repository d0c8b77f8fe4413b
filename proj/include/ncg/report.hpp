#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncg/graded_expr.hpp"

namespace ncg {

enum class Format { Plain, Latex, Json };

// Accepts "plain", "latex", "json"; anything else yields nullopt.
std::optional<Format> parse_format(std::string_view name);

struct IndexedValue {
  std::vector<std::size_t> indices;
  GradedExpr value;
};

// One named tensor in a report.  Only nonzero components are stored, in
// ascending index order; `upper_count` leading indices are typeset as
// superscripts in the LaTeX form.
struct TensorSection {
  std::string name;
  std::string latex_symbol;
  std::size_t upper_count = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::vector<IndexedValue> nonzero;

  bool zero() const { return nonzero.empty(); }
};

struct ScalarSection {
  std::string name;
  std::string latex_symbol;
  GradedExpr value;
};

// A complete computation result: provenance header (model name, target verb,
// convention-ledger hash), free-form notes, ordered key/value facts, and the
// tensor/scalar payload.  Rendering is deterministic in every format.
struct TensorReport {
  std::string model;
  std::string target;
  std::string convention_hash;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<TensorSection> tensors;
  std::vector<ScalarSection> scalars;
};

// Plain: one grammar-compatible line per nonzero component
// ("name[i][j] = expr"); LaTeX: bmatrix display for rank-2 tensors and for
// rank-3 tensors sliced along one upper index, component display otherwise;
// JSON: versioned schema with separate order-0/order-1 strings per component
// and zero components elided.
std::string render(const TensorReport& report, Format format);

}  // namespace ncg
