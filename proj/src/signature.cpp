#include "ga/signature.hpp"

#include "ga/error.hpp"

namespace ga {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_signature: return "invalid signature";
  case Errc::signature_mismatch: return "signature mismatch";
  case Errc::grade: return "grade error";
  case Errc::singular_vector: return "singular vector";
  case Errc::not_invertible: return "not invertible";
  case Errc::non_blade: return "non-blade";
  case Errc::non_unit: return "non-unit";
  case Errc::table_too_large: return "table too large";
  case Errc::antipodal: return "antipodal";
  case Errc::pole_singularity: return "pole singularity";
  case Errc::antipode_at_infinity: return "antipode at infinity";
  case Errc::collinear: return "collinear";
  case Errc::lexical: return "lexical error";
  case Errc::parse: return "parse error";
  case Errc::evaluation: return "evaluation error";
  case Errc::io: return "I/O error";
  }
  return "unknown error";
}

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > max_dimension) {
    throw Error(Errc::invalid_signature,
                "signature (" + std::to_string(p) + "," + std::to_string(q) +
                    ") must satisfy p,q >= 0 and 1 <= p+q <= " +
                    std::to_string(max_dimension));
  }
}

char index_symbol(int index) {
  // index is 1-based
  if (index >= 1 && index <= 9) return static_cast<char>('0' + index);
  if (index >= 10 && index <= 12) return static_cast<char>('A' + index - 10);
  return '?';
}

std::optional<int> symbol_index(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'C') return c - 'A' + 10;
  return std::nullopt;
}

std::string blade_name(Blade b) {
  if (b.is_scalar()) return "1";
  std::string name = "e";
  for (int i = 0; i < max_dimension; ++i) {
    if (b.bits & (1u << i)) name.push_back(index_symbol(i + 1));
  }
  return name;
}

std::optional<Blade> parse_blade_name(std::string_view name) {
  if (name.size() < 2 || name.front() != 'e') return std::nullopt;
  Blade out;
  int previous = 0;
  for (char c : name.substr(1)) {
    const auto index = symbol_index(c);
    if (!index || *index <= previous) return std::nullopt;
    out.bits |= 1u << (*index - 1);
    previous = *index;
  }
  return out;
}

} // namespace ga
