#include "ncg/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ncg {

bool SymbolTable::valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::shared_ptr<const SymbolTable> SymbolTable::make(CoordinateSystem coords,
                                                     ParameterTable params) {
  if (coords.dim() == 0) throw Error("symbol table: at least one coordinate required");
  auto table = std::make_shared<SymbolTable>();
  table->coord_count_ = coords.dim();
  table->names_ = std::move(coords.names);
  table->names_.insert(table->names_.end(), params.names.begin(), params.names.end());
  table->deformation_symbol_ = std::move(params.deformation_symbol);

  std::set<std::string> seen;
  for (const auto& n : table->names_) {
    if (!valid_identifier(n)) throw Error("symbol table: invalid identifier '" + n + "'");
    if (!seen.insert(n).second)
      throw Error("symbol table: duplicate symbol '" + n + "'");
  }
  if (!valid_identifier(table->deformation_symbol_))
    throw Error("symbol table: invalid deformation symbol '" + table->deformation_symbol_ + "'");
  if (seen.count(table->deformation_symbol_))
    throw Error("symbol table: deformation symbol '" + table->deformation_symbol_ +
                "' collides with an ordinary symbol");
  return table;
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool SymbolTable::same_as(const SymbolTable& other) const {
  return coord_count_ == other.coord_count_ && names_ == other.names_ &&
         deformation_symbol_ == other.deformation_symbol_;
}

}  // namespace ncg
