#include "ga/cli/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace ga::cli {

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_multivector(const Multivector &m) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term &t : m.terms()) {
    const bool negative = std::signbit(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const double mag = std::abs(t.coeff);
    if (t.blade.is_scalar()) {
      out += format_number(mag);
    } else if (mag == 1.0) {
      out += blade_name(t.blade);
    } else {
      out += format_number(mag) + "*" + blade_name(t.blade);
    }
  }
  return out;
}

nlohmann::json to_json(const Multivector &m) {
  nlohmann::json terms = nlohmann::json::object();
  for (const Term &t : m.terms()) terms[blade_name(t.blade)] = t.coeff;
  return {{"signature", {m.signature().p(), m.signature().q()}}, {"terms", terms}};
}

std::string format_signed_blade(const SignedBlade &entry) {
  if (entry.sign == 0) return "0";
  return (entry.sign < 0 ? "-" : "") + blade_name(entry.blade);
}

std::string emit_cayley(const Signature &sig, TableFormat format) {
  const CayleyTable table = cayley_table(sig);
  const std::size_t n = table.size();

  if (format == TableFormat::json) {
    nlohmann::json blades = nlohmann::json::array();
    for (Blade b : table.order) blades.push_back(blade_name(b));
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(format_signed_blade(table.at(i, j)));
      rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"signature", {sig.p(), sig.q()}}, {"blades", blades}, {"table", rows}};
    return doc.dump(2) + "\n";
  }

  std::size_t width = 1;
  for (Blade b : table.order) width = std::max(width, blade_name(b).size() + 1);
  const auto cell = [width](const std::string &s) {
    return s + std::string(width + 1 - s.size(), ' ');
  };
  std::string out = cell("");
  for (Blade b : table.order) out += cell(blade_name(b));
  out.erase(out.find_last_not_of(' ') + 1);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    std::string line = cell(blade_name(table.order[i]));
    for (std::size_t j = 0; j < n; ++j) line += cell(format_signed_blade(table.at(i, j)));
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

} // namespace ga::cli
