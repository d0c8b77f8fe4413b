#include "ncg/model_file.hpp"

#include <cctype>
#include <charconv>
#include <initializer_list>
#include <map>
#include <sstream>
#include <tuple>

#include "ncg/expr_parser.hpp"
#include "ncg/printer.hpp"

namespace ncg {

namespace {

constexpr std::size_t npos = std::string::npos;

struct Word {
  std::string text;
  std::size_t col;  // 1-based column in the source line
};

std::vector<Word> split_words(const std::string& s, std::size_t col0) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), col0 + i});
    i = j;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct Entry {
  std::vector<std::size_t> idx;
  GradedExpr value;
  std::size_t line = 0;
};

std::string idx_key(const std::vector<std::size_t>& idx) {
  std::string k;
  for (std::size_t i : idx) k += std::to_string(i) + " ";
  return k;
}

std::string idx_pretty(const std::vector<std::size_t>& idx) {
  std::string k;
  for (std::size_t i : idx) k += "[" + std::to_string(i) + "]";
  return k;
}

}  // namespace

ModelParseResult parse_model(const std::string& text) {
  ModelParseResult res;
  auto error = [&](std::size_t line, std::size_t col, std::string msg) {
    res.errors.push_back({line, col, std::move(msg)});
  };

  struct Pending {
    std::string section;
    std::string line_text;
    std::size_t line = 0;
    std::size_t payload_col = 0;  // 1-based column where the payload starts
  };

  std::optional<long long> dimension;
  std::optional<std::vector<std::string>> coordinates;
  std::vector<std::string> parameters;
  std::optional<std::string> deformation;
  std::size_t dim_line = 0, coord_line = 0, param_line = 0, defo_line = 0;
  std::vector<Pending> pending;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::size_t pos = line.find('#'); pos != npos) line.erase(pos);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size()) continue;
    const std::size_t colon = line.find(':', first);
    if (colon == npos) {
      error(lineno, first + 1, "expected 'section: payload'");
      continue;
    }
    const std::string key = trim(line.substr(first, colon - first));
    const std::string payload = line.substr(colon + 1);
    const std::size_t payload_col = colon + 2;

    if (key == "dimension") {
      if (dimension) {
        error(lineno, first + 1,
              "duplicate 'dimension' section (first at line " + std::to_string(dim_line) +
                  ")");
        continue;
      }
      dim_line = lineno;
      const std::string v = trim(payload);
      long long d = 0;
      auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
      if (ec != std::errc() || p != v.data() + v.size() || d < 1)
        error(lineno, payload_col, "dimension must be a positive integer");
      else
        dimension = d;
    } else if (key == "coordinates") {
      if (coordinates) {
        error(lineno, first + 1, "duplicate 'coordinates' section (first at line " +
                                     std::to_string(coord_line) + ")");
        continue;
      }
      coord_line = lineno;
      coordinates = std::vector<std::string>();
      for (const Word& w : split_words(payload, payload_col))
        coordinates->push_back(w.text);
    } else if (key == "parameters") {
      if (param_line) {
        error(lineno, first + 1, "duplicate 'parameters' section (first at line " +
                                     std::to_string(param_line) + ")");
        continue;
      }
      param_line = lineno;
      for (const Word& w : split_words(payload, payload_col)) parameters.push_back(w.text);
    } else if (key == "deformation_symbol") {
      if (deformation) {
        error(lineno, first + 1, "duplicate 'deformation_symbol' section (first at line " +
                                     std::to_string(defo_line) + ")");
        continue;
      }
      defo_line = lineno;
      deformation = trim(payload);
    } else if (key == "C" || key == "S" || key == "metric" || key == "christoffel") {
      pending.push_back({key, line, lineno, payload_col});
    } else {
      error(lineno, first + 1, "unknown section '" + key +
                                   "' (expected dimension, coordinates, parameters, "
                                   "deformation_symbol, C, S, metric, christoffel)");
    }
  }

  if (!dimension) error(0, 0, "missing 'dimension' section");
  if (!coordinates) error(0, 0, "missing 'coordinates' section");
  if (!res.errors.empty() && (!dimension || !coordinates)) return res;
  if (coordinates->size() != static_cast<std::size_t>(*dimension)) {
    error(coord_line, 1,
          "expected " + std::to_string(*dimension) + " coordinate names, got " +
              std::to_string(coordinates->size()));
    return res;
  }

  SymbolTablePtr table;
  try {
    table = SymbolTable::make(CoordinateSystem{*coordinates},
                              ParameterTable{parameters, deformation.value_or("lambda")});
  } catch (const Error& e) {
    error(coord_line ? coord_line : 1, 1, e.what());
    return res;
  }
  const std::size_t dim = table->dim();

  // Parse the stashed tensor entries now that the symbol table exists.
  std::map<std::string, std::map<std::string, Entry>> sections;
  for (const Pending& p : pending) {
    const std::size_t want = (p.section == "metric") ? 2 : 3;
    const std::size_t colon = p.line_text.find(':');
    const std::size_t eq = p.line_text.find('=', colon);
    if (eq == npos) {
      error(p.line, p.payload_col, p.section + " entry needs 'indices = expression'");
      continue;
    }
    const std::string index_part = p.line_text.substr(colon + 1, eq - colon - 1);
    const std::vector<Word> words = split_words(index_part, p.payload_col);
    if (words.size() != want) {
      error(p.line, p.payload_col,
            p.section + " entry needs " + std::to_string(want) + " indices, got " +
                std::to_string(words.size()));
      continue;
    }
    Entry entry;
    entry.line = p.line;
    bool bad = false;
    for (const Word& w : words) {
      unsigned long long v = 0;
      auto [q, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
      if (ec != std::errc() || q != w.text.data() + w.text.size()) {
        error(p.line, w.col, "index must be a nonnegative integer, got '" + w.text + "'");
        bad = true;
        break;
      }
      if (v >= dim) {
        error(p.line, w.col,
              "index " + std::to_string(v) + " out of range for dimension " +
                  std::to_string(dim));
        bad = true;
        break;
      }
      entry.idx.push_back(static_cast<std::size_t>(v));
    }
    if (bad) continue;
    try {
      entry.value = parse_expression(p.line_text.substr(eq + 1), table,
                                     static_cast<int>(p.line), static_cast<int>(eq + 2));
    } catch (const ExprParseError& e) {
      error(static_cast<std::size_t>(e.line), static_cast<std::size_t>(e.col), e.reason);
      continue;
    }
    auto& section = sections[p.section];
    const std::string key = idx_key(entry.idx);
    if (auto it = section.find(key); it != section.end()) {
      error(p.line, p.payload_col,
            p.section + " entry " + idx_pretty(entry.idx) + " already given at line " +
                std::to_string(it->second.line));
      continue;
    }
    section.emplace(key, std::move(entry));
  }

  // C: antisymmetric closure with conflict detection.
  StructureConstants c(table);
  for (const auto& [key, e] : sections["C"]) {
    const auto [m, n, k] = std::tuple(e.idx[0], e.idx[1], e.idx[2]);
    if (!e.value.pure_order1() || !e.value.order1().is_constant()) {
      error(e.line, 1,
            "C" + idx_pretty(e.idx) +
                " must be an exact rational multiple of the deformation symbol");
      continue;
    }
    if (m == n && !e.value.is_zero()) {
      error(e.line, 1, "C" + idx_pretty(e.idx) + " is diagonal and must vanish");
      continue;
    }
    if (auto it = sections["C"].find(idx_key({n, m, k}));
        it != sections["C"].end() && key != it->first) {
      if (!(e.value + it->second.value).is_zero()) {
        error(e.line, 1,
              "C" + idx_pretty(e.idx) + " conflicts with line " +
                  std::to_string(it->second.line) + ": antisymmetry requires C" +
                  idx_pretty({n, m, k}) + " = -(C" + idx_pretty(e.idx) + ")");
        continue;
      }
      if (m > n) continue;  // the mirror entry already set both slots
    }
    if (!e.value.is_zero()) c.set(m, n, k, e.value);
  }

  // S: symmetric closure with conflict detection.
  std::optional<SymmetricPart> s;
  if (sections.count("S")) {
    s.emplace(table);
    for (const auto& [key, e] : sections["S"]) {
      const auto [m, n, k] = std::tuple(e.idx[0], e.idx[1], e.idx[2]);
      if (!e.value.pure_order1()) {
        error(e.line, 1,
              "S" + idx_pretty(e.idx) +
                  " must be a pure first-order value (a multiple of the deformation "
                  "symbol)");
        continue;
      }
      bool coordinate_dep = false;
      for (std::size_t v = 0; v < dim; ++v)
        if (e.value.order1().depends_on(v)) coordinate_dep = true;
      if (coordinate_dep) {
        error(e.line, 1, "S" + idx_pretty(e.idx) + " must be coordinate-free");
        continue;
      }
      if (auto it = sections["S"].find(idx_key({n, m, k}));
          it != sections["S"].end() && key != it->first) {
        if (!(e.value - it->second.value).is_zero()) {
          error(e.line, 1,
                "S" + idx_pretty(e.idx) + " conflicts with line " +
                    std::to_string(it->second.line) + ": symmetry requires S" +
                    idx_pretty({n, m, k}) + " = S" + idx_pretty(e.idx));
          continue;
        }
        if (m > n) continue;
      }
      if (!e.value.is_zero()) s->set(m, n, k, e.value);
    }
  }

  // metric: symmetric closure, missing mirror filled with a notice.
  std::optional<Metric> metric;
  if (sections.count("metric")) {
    ComponentArray g(table, 2);
    bool bad = false;
    for (const auto& [key, e] : sections["metric"]) {
      const auto [m, n] = std::tuple(e.idx[0], e.idx[1]);
      if (!e.value.pure_order0()) {
        error(e.line, 1, "metric" + idx_pretty(e.idx) +
                             " must not carry the deformation symbol");
        bad = true;
        continue;
      }
      if (auto it = sections["metric"].find(idx_key({n, m}));
          it != sections["metric"].end() && key != it->first) {
        if (!(e.value - it->second.value).is_zero()) {
          error(e.line, 1,
                "metric" + idx_pretty(e.idx) + " conflicts with line " +
                    std::to_string(it->second.line) + ": symmetry requires metric" +
                    idx_pretty({n, m}) + " = metric" + idx_pretty(e.idx));
          bad = true;
          continue;
        }
      } else if (m != n) {
        res.notices.push_back("metric" + idx_pretty({n, m}) +
                              " mirrored from the entry at line " +
                              std::to_string(e.line));
      }
      g(m, n) = e.value;
      g(n, m) = e.value;
    }
    if (!bad) {
      try {
        metric.emplace(std::move(g));
      } catch (const Error& e) {
        error(0, 0, e.what());
      }
    }
  }

  // christoffel: symmetric in the lower pair, mirrored with a notice.
  std::optional<Connection> gamma;
  if (sections.count("christoffel")) {
    ComponentArray arr(table, 3);
    bool bad = false;
    for (const auto& [key, e] : sections["christoffel"]) {
      const auto [k, m, n] = std::tuple(e.idx[0], e.idx[1], e.idx[2]);
      if (!e.value.pure_order0()) {
        error(e.line, 1, "christoffel" + idx_pretty(e.idx) +
                             " must not carry the deformation symbol (the correction is "
                             "computed, not given)");
        bad = true;
        continue;
      }
      if (auto it = sections["christoffel"].find(idx_key({k, n, m}));
          it != sections["christoffel"].end() && key != it->first) {
        if (!(e.value - it->second.value).is_zero()) {
          error(e.line, 1,
                "christoffel" + idx_pretty(e.idx) + " conflicts with line " +
                    std::to_string(it->second.line) +
                    ": the lower pair is symmetric, christoffel" + idx_pretty({k, n, m}) +
                    " = christoffel" + idx_pretty(e.idx));
          bad = true;
          continue;
        }
      } else if (m != n) {
        res.notices.push_back("christoffel" + idx_pretty({k, n, m}) +
                              " mirrored from the entry at line " +
                              std::to_string(e.line));
      }
      arr(k, m, n) = e.value;
      arr(k, n, m) = e.value;
    }
    if (!bad) {
      try {
        gamma = Connection::classical(std::move(arr));
      } catch (const Error& e) {
        error(0, 0, e.what());
      }
    }
  }

  if (!res.errors.empty()) return res;

  ModelSpec spec{"",         table,     std::move(c), std::move(s), std::move(metric),
                 std::move(gamma), {}};
  const ValidationReport rep = validate_model(spec);
  for (const std::string& e : rep.errors) error(0, 0, e);
  for (const std::string& w : rep.warnings) res.notices.push_back("warning: " + w);
  if (!res.errors.empty()) return res;
  res.spec = std::move(spec);
  return res;
}

std::string render_model(const ModelSpec& spec) {
  const SymbolTable& tab = *spec.table;
  const std::size_t n = tab.dim();
  std::ostringstream out;
  out << "dimension: " << n << "\n";
  out << "coordinates:";
  for (std::size_t i = 0; i < n; ++i) out << " " << tab.name(i);
  out << "\n";
  out << "parameters:";
  for (std::size_t i = n; i < tab.size(); ++i) out << " " << tab.name(i);
  out << "\n";
  out << "deformation_symbol: " << tab.deformation_symbol() << "\n";

  auto entry = [&](const char* section, std::initializer_list<std::size_t> idx,
                   const GradedExpr& value) {
    out << section << ":";
    for (std::size_t i : idx) out << " " << i;
    out << " = " << to_plain(value) << "\n";
  };

  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = m + 1; v < n; ++v)
      for (std::size_t k = 0; k < n; ++k)
        if (!spec.c.at(m, v, k).is_zero()) entry("C", {m, v, k}, spec.c.at(m, v, k));

  if (spec.s) {
    bool any = false;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = m; v < n; ++v)
        for (std::size_t k = 0; k < n; ++k)
          if (!spec.s->at(m, v, k).is_zero()) {
            entry("S", {m, v, k}, spec.s->at(m, v, k));
            any = true;
          }
    if (!any) entry("S", {0, 0, 0}, GradedExpr::zero(spec.table));
  }

  if (spec.metric)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = m; v < n; ++v)
        if (!spec.metric->at(m, v).is_zero())
          entry("metric", {m, v}, spec.metric->at(m, v));

  if (spec.classical_gamma) {
    bool any = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = m; v < n; ++v)
          if (!spec.classical_gamma->at(k, m, v).is_zero()) {
            entry("christoffel", {k, m, v}, spec.classical_gamma->at(k, m, v));
            any = true;
          }
    if (!any) entry("christoffel", {0, 0, 0}, GradedExpr::zero(spec.table));
  }

  return out.str();
}

}  // namespace ncg
