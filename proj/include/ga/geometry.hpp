#pragma once

#include "ga/algebra.hpp"

namespace ga {

// Points x with (x - origin) ^ direction = 0.
class Line {
public:
  Line(Multivector origin, Multivector direction);

  const Multivector &origin() const noexcept { return origin_; }
  const Multivector &direction() const noexcept { return direction_; }

private:
  Multivector origin_;
  Multivector direction_;
};

// Points x with (x - origin) ^ B = 0 for a 2-blade B.
class Plane {
public:
  Plane(Multivector origin, Multivector bivector, const Tolerance &tol = {});

  const Multivector &origin() const noexcept { return origin_; }
  const Multivector &bivector() const noexcept { return bivector_; }

private:
  Multivector origin_;
  Multivector bivector_;
};

// Side vectors with a + b = c; c is always computed from a and b so the
// relation holds exactly.
class Triangle {
public:
  static Triangle from_sides(Multivector a, Multivector b);
  // Sides a = q - p, b = r - q, c = a + b.
  static Triangle from_vertices(const Multivector &p, const Multivector &q,
                                const Multivector &r);

  const Multivector &a() const noexcept { return a_; }
  const Multivector &b() const noexcept { return b_; }
  const Multivector &c() const noexcept { return c_; }

private:
  Triangle(Multivector a, Multivector b, Multivector c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Multivector a_;
  Multivector b_;
  Multivector c_;
};

// Containment thresholds are relative: tol * |direction| * max(1, |x - x0|),
// never below 1e-12.
inline constexpr double containment_floor = 1e-12;

bool line_contains(const Line &line, const Multivector &x, double tol = 1e-12);
Multivector closest_point_on_line(const Line &line, const Multivector &p);
double distance_to_line(const Line &line, const Multivector &p);

bool plane_contains(const Plane &plane, const Multivector &x, double tol = 1e-12);

// -I B, so that B = I n. G(3,0) only.
Multivector plane_normal(const Plane &plane);

// | |a|^2 + 2 a.b + |b|^2 - |c|^2 |
double triangle_check_cosine_law(const Triangle &t);

struct SineLawRatios {
  double a; // sin A / |a|, sin A = |c^ ^ b^|
  double b; // sin B / |b|, sin B = |a^ ^ c^|
  double c; // sin C / |c|, sin C = |a^ ^ b^|
};

inline constexpr double collinear_threshold = 1e-10;

// Throws collinear when |a^ ^ b^| <= 1e-10.
SineLawRatios sine_law_ratios(const Triangle &t);

// Largest pairwise difference among the three sine-law ratios.
double triangle_check_sine_law(const Triangle &t);

double triangle_area(const Triangle &t);

} // namespace ga
