#pragma once

#include <vector>

#include "ga/multivector.hpp"

namespace ga {

struct SignedBlade {
  int sign = 1; // -1, 0 or +1
  Blade blade;

  friend bool operator==(const SignedBlade &, const SignedBlade &) = default;
};

// Product of two basis blades. The result blade is the symmetric difference
// of the bitsets; the sign collects the parity of the transpositions needed
// to sort the concatenated factors plus the metric square of every shared
// factor.
SignedBlade blade_product(const Signature &sig, Blade a, Blade b) noexcept;

// (-1)^{k(k-1)/2}
constexpr int reverse_sign(int grade) noexcept {
  return ((grade * (grade - 1) / 2) % 2 == 0) ? 1 : -1;
}

Multivector geometric_product(const Multivector &a, const Multivector &b);
Multivector operator*(const Multivector &a, const Multivector &b);

// Sum over grade parts of <A_r B_s>_{r+s}.
Multivector outer_product(const Multivector &a, const Multivector &b);

// Sum over grade parts of <A_r B_s>_{|r-s|}. When exactly one of r, s is 0 the
// term contributes nothing; scalar . scalar is the ordinary product.
Multivector inner_product(const Multivector &a, const Multivector &b);

// a . b = (ab + ba) / 2 for grade-1 arguments.
double dot_vectors(const Multivector &a, const Multivector &b);

// a . B = (aB - Ba) / 2 for a vector and a bivector.
Multivector inner_mixed(const Multivector &a, const Multivector &bivector);

Multivector grade_part(const Multivector &a, int k);
Multivector reverse(const Multivector &a);

// a / (a . a). Throws singular_vector when |a . a| <= 1e-300.
Multivector vector_inverse(const Multivector &a);

// Scalars invert directly; otherwise A~ / <A A~> when A A~ is a nonzero
// scalar (vectors, blades, versors). Anything else is not_invertible.
Multivector inverse(const Multivector &a, const Tolerance &tol = {});

// sqrt(|<A A~>_0|)
double norm(const Multivector &a);

Multivector pseudoscalar(const Signature &sig);

// I A with I = e123; G(3,0) only.
Multivector dual_g3(const Multivector &a);

Multivector cross_product(const Multivector &a, const Multivector &b);

// Exponential of a 2-blade. B^2 must be scalar within tol, otherwise
// non_blade. Elliptic, hyperbolic and null planes are all handled.
Multivector exp_bivector(const Multivector &bivector, const Tolerance &tol = {});

inline constexpr int max_table_dimension = 6;

// Full multiplication table over the canonical (grade, then bits) blade order.
struct CayleyTable {
  Signature sig;
  std::vector<Blade> order;
  std::vector<SignedBlade> entries; // row-major, order.size()^2

  std::size_t size() const noexcept { return order.size(); }
  const SignedBlade &at(std::size_t row, std::size_t col) const {
    return entries[row * order.size() + col];
  }
};

std::vector<Blade> canonical_blades(const Signature &sig);

// Rows are filled in parallel; identical to serial::cayley_table.
CayleyTable cayley_table(const Signature &sig);

namespace serial {
CayleyTable cayley_table(const Signature &sig);
} // namespace serial

} // namespace ga
