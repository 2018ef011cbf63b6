#include "ga/transforms.hpp"

#include <cmath>

#include "ga/error.hpp"

namespace ga {

namespace {

void require_unit_vector(const Multivector &v, const Tolerance &tol, const char *what) {
  require_grade(v, 1, what);
  if (!tol.close(dot_vectors(v, v), 1.0)) {
    throw Error(Errc::non_unit, std::string(what) + " must be a unit vector");
  }
}

bool has_grade_outside(const Multivector &m, int a, int b) {
  for (const Term &t : m.terms()) {
    const int g = t.blade.grade();
    if (g != a && g != b) return true;
  }
  return false;
}

} // namespace

Rotor Rotor::identity(const Signature &sig) {
  return Rotor(Multivector::scalar(sig, 1.0));
}

Rotor Rotor::from_multivector(const Multivector &value, const Tolerance &tol) {
  if (has_grade_outside(value, 0, 2)) {
    throw Error(Errc::grade, "a rotor may only contain grades 0 and 2");
  }
  const Multivector rr = value * reverse(value);
  const Multivector one = Multivector::scalar(value.signature(), 1.0);
  if (coefficient_distance(rr, one) > tol.abs) {
    throw Error(Errc::non_unit, "rotor must satisfy R R~ = 1");
  }
  return Rotor(value);
}

Rotor Rotor::normalized(const Multivector &value) {
  return Rotor(value / norm(value));
}

Multivector project(const Multivector &x, const Multivector &a) {
  require_grade(x, 1, "projected vector");
  const Multivector a_inv = vector_inverse(a);
  return dot_vectors(x, a) * a_inv;
}

Multivector reject(const Multivector &x, const Multivector &a) {
  require_grade(x, 1, "rejected vector");
  const Multivector a_inv = vector_inverse(a);
  return grade_part(outer_product(x, a) * a_inv, 1);
}

Multivector reflect_in_plane(const Multivector &x, const Multivector &plane,
                             const Tolerance &tol) {
  require_grade(x, 1, "reflected vector");
  require_grade(plane, 2, "mirror plane");
  const Multivector sq = plane * plane;
  const Multivector minus_one = Multivector::scalar(plane.signature(), -1.0);
  if (coefficient_distance(sq, minus_one) > tol.abs) {
    throw Error(Errc::non_unit, "mirror plane must be a unit 2-blade (B^2 = -1)");
  }
  return grade_part(plane * x * plane, 1);
}

Multivector reflect_normal(const Multivector &x, const Multivector &normal,
                           const Tolerance &tol) {
  if (!normal.signature().is_g3()) {
    throw Error(Errc::signature_mismatch, "reflection about a normal is defined in G(3,0) only");
  }
  require_grade(x, 1, "reflected vector");
  require_unit_vector(normal, tol, "mirror normal");
  return grade_part(-(normal * x * normal), 1);
}

Rotor rotor_between(const Multivector &a, const Multivector &b, const Tolerance &tol) {
  require_same_signature(a, b);
  require_unit_vector(a, tol, "rotor_between source");
  require_unit_vector(b, tol, "rotor_between target");
  if (1.0 + dot_vectors(a, b) <= tol.abs) {
    throw Error(Errc::antipodal,
                "rotation between antipodal vectors has no determined plane");
  }
  return Rotor::normalized(Multivector::scalar(a.signature(), 1.0) + b * a);
}

Multivector rotate(const Multivector &x, const Rotor &r) {
  require_grade(x, 1, "rotated vector");
  const Multivector &rv = r.multivector();
  return grade_part(rv * x * reverse(rv), 1);
}

Rotor rotor_from_reflections(const Multivector &n1, const Multivector &n2,
                             const Tolerance &tol) {
  require_same_signature(n1, n2);
  require_unit_vector(n1, tol, "first mirror normal");
  require_unit_vector(n2, tol, "second mirror normal");
  return Rotor(n2 * n1);
}

Rotor compose_rotors(const Rotor &r1, const Rotor &r2) {
  return Rotor::normalized(r2.multivector() * r1.multivector());
}

} // namespace ga
