#include "ga/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "ga/error.hpp"

namespace ga {

namespace {

double threshold(double tol, double scale, double offset) {
  return std::max(containment_floor, tol * scale * std::max(1.0, offset));
}

Multivector unit(const Multivector &v) { return v / norm(v); }

} // namespace

Line::Line(Multivector origin, Multivector direction)
    : origin_(std::move(origin)), direction_(std::move(direction)) {
  require_same_signature(origin_, direction_);
  require_grade(origin_, 1, "line origin");
  require_grade(direction_, 1, "line direction");
  if (!(dot_vectors(direction_, direction_) > 0.0)) {
    throw Error(Errc::singular_vector, "line direction must satisfy a.a > 0");
  }
}

Plane::Plane(Multivector origin, Multivector bivector, const Tolerance &tol)
    : origin_(std::move(origin)), bivector_(std::move(bivector)) {
  require_same_signature(origin_, bivector_);
  require_grade(origin_, 1, "plane origin");
  require_grade(bivector_, 2, "plane direction");
  if (bivector_.is_zero()) {
    throw Error(Errc::non_blade, "plane direction must be a nonzero 2-blade");
  }
  const Multivector sq = bivector_ * bivector_;
  const double s = sq.scalar_part();
  if (coefficient_distance(sq, grade_part(sq, 0)) > tol.abs + tol.rel * std::abs(s)) {
    throw Error(Errc::non_blade, "plane direction must be a 2-blade");
  }
}

Triangle Triangle::from_sides(Multivector a, Multivector b) {
  require_same_signature(a, b);
  require_grade(a, 1, "triangle side");
  require_grade(b, 1, "triangle side");
  Multivector c = a + b;
  return Triangle(std::move(a), std::move(b), std::move(c));
}

Triangle Triangle::from_vertices(const Multivector &p, const Multivector &q,
                                 const Multivector &r) {
  return from_sides(q - p, r - q);
}

bool line_contains(const Line &line, const Multivector &x, double tol) {
  const Multivector d = x - line.origin();
  const double residual = norm(outer_product(d, line.direction()));
  return residual <= threshold(tol, norm(line.direction()), norm(d));
}

Multivector closest_point_on_line(const Line &line, const Multivector &p) {
  const Multivector &a = line.direction();
  const double t = dot_vectors(p - line.origin(), a) / dot_vectors(a, a);
  return line.origin() + t * a;
}

double distance_to_line(const Line &line, const Multivector &p) {
  const Multivector d = line.origin() - p;
  const Multivector a_hat = unit(line.direction());
  const double along = dot_vectors(d, a_hat);
  return std::sqrt(std::max(0.0, dot_vectors(d, d) - along * along));
}

bool plane_contains(const Plane &plane, const Multivector &x, double tol) {
  const Multivector d = x - plane.origin();
  const double residual = norm(outer_product(d, plane.bivector()));
  return residual <= threshold(tol, norm(plane.bivector()), norm(d));
}

Multivector plane_normal(const Plane &plane) {
  // B = I n  =>  n = I^{-1} B = -I B
  return grade_part(-dual_g3(plane.bivector()), 1);
}

double triangle_check_cosine_law(const Triangle &t) {
  const double aa = dot_vectors(t.a(), t.a());
  const double bb = dot_vectors(t.b(), t.b());
  const double cc = dot_vectors(t.c(), t.c());
  return std::abs(aa + 2.0 * dot_vectors(t.a(), t.b()) + bb - cc);
}

SineLawRatios sine_law_ratios(const Triangle &t) {
  const Multivector a_hat = unit(t.a());
  const Multivector b_hat = unit(t.b());
  const Multivector c_hat = unit(t.c());
  const double sin_c = norm(outer_product(a_hat, b_hat));
  if (!(sin_c > collinear_threshold)) {
    throw Error(Errc::collinear, "triangle is degenerate (collinear sides)");
  }
  const double sin_a = norm(outer_product(c_hat, b_hat));
  const double sin_b = norm(outer_product(a_hat, c_hat));
  return {sin_a / norm(t.a()), sin_b / norm(t.b()), sin_c / norm(t.c())};
}

double triangle_check_sine_law(const Triangle &t) {
  const SineLawRatios r = sine_law_ratios(t);
  return std::max({std::abs(r.a - r.b), std::abs(r.b - r.c), std::abs(r.a - r.c)});
}

double triangle_area(const Triangle &t) {
  return 0.5 * norm(outer_product(t.a(), t.b()));
}

} // namespace ga
