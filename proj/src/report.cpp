#include "ncg/report.hpp"

#include <sstream>

#include <json.hpp>

#include "ncg/printer.hpp"

namespace ncg {

namespace {

std::string bracket_indices(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) out += "[" + std::to_string(i) + "]";
  return out;
}

std::string space_indices(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += " ";
    out += std::to_string(i);
  }
  return out;
}

// "X^{a b}{}_{c d}" with the section's upper/lower split; all-lower tensors
// render as "X_{c d}".
std::string latex_indexed_symbol(const TensorSection& t,
                                 const std::vector<std::size_t>& idx) {
  std::string up, down;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::string& side = i < t.upper_count ? up : down;
    if (!side.empty()) side += " ";
    side += std::to_string(idx[i]);
  }
  std::string out = t.latex_symbol;
  if (!up.empty()) out += "^{" + up + "}";
  if (!down.empty()) {
    if (!up.empty()) out += "{}";
    out += "_{" + down + "}";
  }
  return out;
}

const GradedExpr* lookup(const TensorSection& t, const std::vector<std::size_t>& idx) {
  for (const IndexedValue& v : t.nonzero)
    if (v.indices == idx) return &v.value;
  return nullptr;
}

std::string latex_component(const TensorSection& t, const std::vector<std::size_t>& idx) {
  const GradedExpr* e = lookup(t, idx);
  return e ? to_latex(*e) : "0";
}

std::string render_plain(const TensorReport& r) {
  std::ostringstream out;
  out << "model: " << r.model << "\n";
  out << "target: " << r.target << "\n";
  out << "conventions: " << r.convention_hash << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  for (const auto& [k, v] : r.facts) out << k << ": " << v << "\n";
  for (const TensorSection& t : r.tensors) {
    out << "\n";
    if (t.zero()) {
      out << t.name << ": (all components zero)\n";
      continue;
    }
    for (const IndexedValue& v : t.nonzero)
      out << t.name << bracket_indices(v.indices) << " = " << to_plain(v.value) << "\n";
  }
  if (!r.scalars.empty()) out << "\n";
  for (const ScalarSection& s : r.scalars)
    out << s.name << " = " << to_plain(s.value) << "\n";
  return out.str();
}

std::string render_latex(const TensorReport& r) {
  std::ostringstream out;
  out << "% model: " << r.model << "\n";
  out << "% target: " << r.target << "\n";
  out << "% conventions: " << r.convention_hash << "\n";
  for (const std::string& n : r.notes) out << "% note: " << n << "\n";
  for (const auto& [k, v] : r.facts) out << "% " << k << ": " << v << "\n";
  for (const TensorSection& t : r.tensors) {
    if (t.zero()) {
      out << "\\[ " << t.latex_symbol << " = 0 \\]\n";
      continue;
    }
    if (t.rank == 2 && t.upper_count == 0) {
      out << "\\[ " << t.latex_symbol << " = \\begin{bmatrix} ";
      for (std::size_t i = 0; i < t.dim; ++i) {
        if (i) out << " \\\\ ";
        for (std::size_t j = 0; j < t.dim; ++j) {
          if (j) out << " & ";
          out << latex_component(t, {i, j});
        }
      }
      out << " \\end{bmatrix} \\]\n";
    } else if (t.rank == 3 && t.upper_count == 1) {
      for (std::size_t k = 0; k < t.dim; ++k) {
        out << "\\[ " << t.latex_symbol << "^{" << k << "} = \\begin{bmatrix} ";
        for (std::size_t i = 0; i < t.dim; ++i) {
          if (i) out << " \\\\ ";
          for (std::size_t j = 0; j < t.dim; ++j) {
            if (j) out << " & ";
            out << latex_component(t, {k, i, j});
          }
        }
        out << " \\end{bmatrix} \\]\n";
      }
    } else {
      for (const IndexedValue& v : t.nonzero)
        out << "\\[ " << latex_indexed_symbol(t, v.indices) << " = " << to_latex(v.value)
            << " \\]\n";
    }
  }
  for (const ScalarSection& s : r.scalars)
    out << "\\[ " << s.latex_symbol << " = " << to_latex(s.value) << " \\]\n";
  return out.str();
}

std::string render_json(const TensorReport& r) {
  nlohmann::ordered_json doc;
  doc["schema"] = "ncg-report/1";
  doc["model"] = r.model;
  doc["target"] = r.target;
  doc["conventions"] = r.convention_hash;
  doc["notes"] = r.notes;
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  doc["facts"] = std::move(facts);
  doc["tensors"] = nlohmann::ordered_json::array();
  for (const TensorSection& t : r.tensors) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["rank"] = t.rank;
    jt["dimension"] = t.dim;
    jt["upper_indices"] = t.upper_count;
    jt["zero"] = t.zero();
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (const IndexedValue& v : t.nonzero) {
      const SymbolTable& tab = *v.value.table();
      comps[space_indices(v.indices)] = {
          {"order0", to_plain(v.value.order0(), tab)},
          {"order1", to_plain(v.value.order1(), tab)},
      };
    }
    jt["components"] = std::move(comps);
    doc["tensors"].push_back(std::move(jt));
  }
  doc["scalars"] = nlohmann::ordered_json::array();
  for (const ScalarSection& s : r.scalars) {
    const SymbolTable& tab = *s.value.table();
    doc["scalars"].push_back({
        {"name", s.name},
        {"zero", s.value.is_zero()},
        {"order0", to_plain(s.value.order0(), tab)},
        {"order1", to_plain(s.value.order1(), tab)},
    });
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string render(const TensorReport& report, Format format) {
  switch (format) {
    case Format::Plain:
      return render_plain(report);
    case Format::Latex:
      return render_latex(report);
    case Format::Json:
      return render_json(report);
  }
  return {};
}

}  // namespace ncg
