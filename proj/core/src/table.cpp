#include "spin9/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

namespace spin9 {

std::string default_table_path() {
  if (const char* env = std::getenv("SPIN9_TABLE")) return env;
  return SPIN9_DEFAULT_TABLE_PATH;
}

KForm reference_table_half(const std::string& path) {
  std::string p = path.empty() ? default_table_path() : path;
  std::ifstream in(p);
  if (!in) throw Error("cannot open table file: " + p);
  nlohmann::json j;
  in >> j;
  KForm out(16, 8);
  for (const auto& entry : j) {
    std::uint32_t bits = 0;
    for (int i : entry.at("blade").get<std::vector<int>>()) {
      if (i < 1 || i > 16) throw BadIndexSet("table index out of range");
      bits |= 1u << (i - 1);
    }
    out.add_term(bits, Scalar(entry.at("coeff").get<long>()));
  }
  return out;
}

KForm reference_table(const std::string& path) {
  KForm half = reference_table_half(path);
  return half + hodge_star(half);
}

std::string TableDiff::str() const {
  if (blades.empty()) return "(empty diff)";
  std::string s;
  for (const Blade& b : blades) {
    if (!s.empty()) s += ' ';
    s += b.str();
  }
  return s;
}

TableDiff table_diff(const KForm& computed, const std::string& path) {
  TableDiff d;
  d.blades = computed.diff(reference_table(path));
  std::sort(d.blades.begin(), d.blades.end());
  return d;
}

std::string render_table(const KForm& form, TableFormat format) {
  std::vector<std::uint32_t> order;
  order.reserve(form.terms().size());
  for (const auto& [bits, c] : form.terms()) order.push_back(bits);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return Blade(form.dim(), x).indices() < Blade(form.dim(), y).indices();
  });

  if (format == TableFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (std::uint32_t bits : order) {
      nlohmann::json entry;
      entry["blade"] = Blade(form.dim(), bits).indices();
      const Scalar& c = form.terms().at(bits);
      if (c.get_den() == 1)
        entry["coeff"] = std::stoll(c.get_str());
      else
        entry["coeff"] = c.get_str();
      j.push_back(entry);
    }
    return j.dump(2) + "\n";
  }

  std::string s;
  if (format == TableFormat::Csv) s += "blade,coeff\n";
  for (std::uint32_t bits : order) {
    const Scalar& c = form.terms().at(bits);
    Blade b(form.dim(), bits);
    if (format == TableFormat::Csv) {
      s += b.str().substr(1);  // drop the leading 'd'
      s += ',';
      s += c.get_str();
    } else {
      std::string coeff = c.get_str();
      if (coeff[0] != '-') s += '+';
      s += coeff;
      s += ' ';
      s += b.str();
    }
    s += '\n';
  }
  return s;
}

}  // namespace spin9
