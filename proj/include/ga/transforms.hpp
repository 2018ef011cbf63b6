#pragma once

#include "ga/algebra.hpp"

namespace ga {

// Unit even multivector with grades {0, 2}, applied as R x R~.
class Rotor {
public:
  static Rotor identity(const Signature &sig);

  // Validates the grades and that R R~ = 1 within tol.
  static Rotor from_multivector(const Multivector &value, const Tolerance &tol = {});

  const Multivector &multivector() const noexcept { return value_; }
  const Signature &signature() const noexcept { return value_.signature(); }
  Rotor reversed() const { return Rotor(reverse(value_)); }

  friend bool operator==(const Rotor &, const Rotor &) = default;

private:
  explicit Rotor(Multivector value) : value_(std::move(value)) {}

  // Normalizes value to unit norm without validating it.
  static Rotor normalized(const Multivector &value);

  friend Rotor rotor_between(const Multivector &, const Multivector &, const Tolerance &);
  friend Rotor compose_rotors(const Rotor &, const Rotor &);
  friend Rotor rotor_from_reflections(const Multivector &, const Multivector &,
                                      const Tolerance &);

  Multivector value_;
};

// (x . a) a^{-1}: component of x along a.
Multivector project(const Multivector &x, const Multivector &a);

// (x ^ a) a^{-1}: component of x perpendicular to a.
Multivector reject(const Multivector &x, const Multivector &a);

// B x B for a unit 2-blade B (B^2 = -1). Keeps the part of x in the plane
// and negates the part perpendicular to it. Works in any dimension.
Multivector reflect_in_plane(const Multivector &x, const Multivector &plane,
                             const Tolerance &tol = {});

// -n x n in G(3,0); the mirror is the plane with unit normal n.
Multivector reflect_normal(const Multivector &x, const Multivector &normal,
                           const Tolerance &tol = {});

// Normalized 1 + b a; rotates a onto b in the plane a ^ b.
// Throws antipodal when b = -a since the plane is undetermined.
Rotor rotor_between(const Multivector &a, const Multivector &b, const Tolerance &tol = {});

// R x R~, returned as a pure vector.
Multivector rotate(const Multivector &x, const Rotor &r);

// n2 n1: reflecting in n1 then in n2 rotates by twice the angle between them.
Rotor rotor_from_reflections(const Multivector &n1, const Multivector &n2,
                             const Tolerance &tol = {});

// Apply r1 then r2; renormalized.
Rotor compose_rotors(const Rotor &r1, const Rotor &r2);

} // namespace ga
