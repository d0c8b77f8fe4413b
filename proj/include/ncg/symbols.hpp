#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

// Base class for every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Coordinate generators x^0 .. x^{d-1}, in the order that defines both tensor
// indices and the canonical word order (lower index = further left).
struct CoordinateSystem {
  std::vector<std::string> names;

  std::size_t dim() const { return names.size(); }
};

// Commuting constant symbols (moduli of the model) plus the deformation
// symbol.  The deformation symbol is *not* an ordinary symbol: it is the
// grading unit and never appears inside polynomial data.
struct ParameterTable {
  std::vector<std::string> names;
  std::string deformation_symbol = "lambda";
};

// Immutable symbol universe shared by every expression of one model:
// coordinates first (indices 0..dim-1), parameters after.  Expressions store
// exponent vectors indexed against this table.
class SymbolTable {
 public:
  static std::shared_ptr<const SymbolTable> make(CoordinateSystem coords,
                                                 ParameterTable params);

  std::size_t size() const { return names_.size(); }
  std::size_t dim() const { return coord_count_; }
  bool is_coordinate(std::size_t i) const { return i < coord_count_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& deformation_symbol() const { return deformation_symbol_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  // Tables from independent constructions compare by content.
  bool same_as(const SymbolTable& other) const;

  static bool valid_identifier(std::string_view s);

 private:
  std::vector<std::string> names_;
  std::size_t coord_count_ = 0;
  std::string deformation_symbol_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace ncg
