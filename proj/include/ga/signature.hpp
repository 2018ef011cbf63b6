#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ga {

inline constexpr int max_dimension = 12;

// Metric (p, q): basis vectors e1..ep square to +1, e(p+1)..e(p+q) to -1.
class Signature {
public:
  Signature(int p, int q);

  static Signature euclidean(int n) { return Signature(n, 0); }

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int dim() const noexcept { return p_ + q_; }
  std::uint32_t blade_count() const noexcept { return 1u << dim(); }

  // Square of basis vector e_{index+1} (0-based index).
  int metric_square(int index) const noexcept { return index < p_ ? 1 : -1; }

  bool is_g3() const noexcept { return p_ == 3 && q_ == 0; }

  friend bool operator==(const Signature &, const Signature &) = default;

private:
  int p_;
  int q_;
};

// Basis blade as a bitset: bit i set <=> e_{i+1} is a factor. Factors are
// always understood in ascending order, so bits 0b101 is e13.
struct Blade {
  std::uint32_t bits = 0;

  constexpr int grade() const noexcept { return std::popcount(bits); }
  constexpr bool is_scalar() const noexcept { return bits == 0; }

  friend constexpr bool operator==(Blade, Blade) = default;
};

// Canonical ordering: grade first, then bit pattern.
constexpr bool canonical_less(Blade a, Blade b) noexcept {
  const int ga = a.grade();
  const int gb = b.grade();
  return ga != gb ? ga < gb : a.bits < b.bits;
}

constexpr Blade basis_vector(int index) noexcept {
  return Blade{1u << index};
}

// Symbols for basis indices 1..12: digits 1-9, then A, B, C.
char index_symbol(int index);
std::optional<int> symbol_index(char c);

// "1" for the scalar blade, otherwise "e" followed by ascending symbols.
std::string blade_name(Blade b);

// Inverse of blade_name for names of the form e<symbols>; nullopt unless the
// symbols are valid and strictly ascending. Does not check any dimension.
std::optional<Blade> parse_blade_name(std::string_view name);

} // namespace ga
