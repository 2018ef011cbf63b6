#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ga {

enum class Errc {
  invalid_signature,
  signature_mismatch,
  grade,
  singular_vector,
  not_invertible,
  non_blade,
  non_unit,
  table_too_large,
  antipodal,
  pole_singularity,
  antipode_at_infinity,
  collinear,
  lexical,
  parse,
  evaluation,
  io,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the kernel and the calculator carries one of the
// codes above so callers can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace ga
