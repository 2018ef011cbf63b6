#pragma once

#include "ga/transforms.hpp"

namespace ga {

// Stereographic projection from the south pole -e3 of the unit sphere in
// G(3,0) onto the e12 plane through the origin.

// Unit vector of G(3,0).
class SpherePoint {
public:
  explicit SpherePoint(Multivector v, double tol = 1e-12);
  const Multivector &vector() const noexcept { return v_; }

private:
  Multivector v_;
};

// Vector of G(3,0) with x . e3 = 0.
class PlanePoint {
public:
  explicit PlanePoint(Multivector v, double tol = 1e-12);
  const Multivector &vector() const noexcept { return v_; }

private:
  Multivector v_;
};

// Vector of G(3,0) with m . e3 = 1, i.e. a plane point lifted by e3.
class MPoint {
public:
  explicit MPoint(Multivector v, double tol = 1e-12);
  const Multivector &vector() const noexcept { return v_; }

private:
  Multivector v_;
};

// Poles closer than this, measured as (a + e3)^2, are singular.
inline constexpr double pole_threshold = 1e-24;

// x = 2 / (a + e3) - e3. Throws pole_singularity at a = -e3.
PlanePoint stereo_project(const SpherePoint &a);

// m = (a + e3) / (1 + a . e3).
MPoint to_m(const SpherePoint &a);

// a = m^ e3 m^ with m = x + e3.
SpherePoint stereo_unproject(const PlanePoint &x);

// -I m^, whose sandwich takes e3 to stereo_unproject(x).
Rotor rotation_form(const PlanePoint &x);

// 1/2 (1 + a . b), clamped to [0, 1].
double prob_plus(const SpherePoint &a, const SpherePoint &b);
// 1 - prob_plus(a, b), so the two always sum to exactly 1.
double prob_minus(const SpherePoint &a, const SpherePoint &b);

// The same probabilities through the distance of the lifted plane points:
// (m_a - m_b)^2 / (m_a^2 m_b^2). Both throw pole_singularity at -e3.
double prob_plus_mform(const SpherePoint &a, const SpherePoint &b);
double prob_minus_mform(const SpherePoint &a, const SpherePoint &b);

// m of the antipode of stereo_unproject(x): -x / |x|^2 + e3.
// Throws antipode_at_infinity for x = 0.
MPoint antipodal_m(const PlanePoint &x);

} // namespace ga
