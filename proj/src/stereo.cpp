#include "ga/stereo.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "ga/error.hpp"

namespace ga {

namespace {

const Signature g3 = Signature::euclidean(3);

Multivector e3() { return Multivector::basis(g3, 3); }

void require_g3_vector(const Multivector &v, const char *what) {
  if (!v.signature().is_g3()) {
    throw Error(Errc::signature_mismatch, std::string(what) + " must live in G(3,0)");
  }
  require_grade(v, 1, what);
}

double e3_component(const Multivector &v) { return v.coefficient(basis_vector(2)); }

double clamp_probability(double p) {
  const double clamped = std::clamp(p, 0.0, 1.0);
  if (std::abs(clamped - p) > 1e-12) {
    std::clog << "ga: probability " << p << " clamped to [0,1]\n";
  }
  return clamped;
}

// (a + e3) with the pole guard shared by every m-form computation.
Multivector shifted(const SpherePoint &a) {
  Multivector s = a.vector() + e3();
  if (dot_vectors(s, s) < pole_threshold) {
    throw Error(Errc::pole_singularity,
                "the south pole -e3 has no stereographic image");
  }
  return s;
}

double mform_minus(const SpherePoint &a, const SpherePoint &b) {
  const Multivector ma = to_m(a).vector();
  const Multivector mb = to_m(b).vector();
  const Multivector d = ma - mb;
  return dot_vectors(d, d) / (dot_vectors(ma, ma) * dot_vectors(mb, mb));
}

} // namespace

SpherePoint::SpherePoint(Multivector v, double tol) : v_(std::move(v)) {
  require_g3_vector(v_, "sphere point");
  if (std::abs(dot_vectors(v_, v_) - 1.0) > tol) {
    throw Error(Errc::non_unit, "sphere point must be a unit vector");
  }
}

PlanePoint::PlanePoint(Multivector v, double tol) : v_(std::move(v)) {
  require_g3_vector(v_, "plane point");
  if (std::abs(e3_component(v_)) > tol) {
    throw Error(Errc::grade, "plane point must satisfy x . e3 = 0");
  }
}

MPoint::MPoint(Multivector v, double tol) : v_(std::move(v)) {
  require_g3_vector(v_, "m point");
  if (std::abs(e3_component(v_) - 1.0) > tol) {
    throw Error(Errc::grade, "m point must satisfy m . e3 = 1");
  }
}

PlanePoint stereo_project(const SpherePoint &a) {
  const Multivector s = shifted(a);
  const Multivector x = 2.0 * s / dot_vectors(s, s) - e3();
  // The e3 component vanishes analytically; drop its rounding residue.
  return PlanePoint(x - e3_component(x) * e3());
}

MPoint to_m(const SpherePoint &a) {
  const Multivector s = shifted(a);
  return MPoint(s / (1.0 + dot_vectors(a.vector(), e3())));
}

SpherePoint stereo_unproject(const PlanePoint &x) {
  const Multivector m = x.vector() + e3();
  const Multivector m_hat = m / norm(m);
  return SpherePoint(grade_part(m_hat * e3() * m_hat, 1));
}

Rotor rotation_form(const PlanePoint &x) {
  const Multivector m = x.vector() + e3();
  const Multivector m_hat = m / norm(m);
  return Rotor::from_multivector(-(pseudoscalar(g3) * m_hat));
}

double prob_plus(const SpherePoint &a, const SpherePoint &b) {
  return clamp_probability(0.5 * (1.0 + dot_vectors(a.vector(), b.vector())));
}

double prob_minus(const SpherePoint &a, const SpherePoint &b) {
  return 1.0 - prob_plus(a, b);
}

double prob_plus_mform(const SpherePoint &a, const SpherePoint &b) {
  return 1.0 - mform_minus(a, b);
}

double prob_minus_mform(const SpherePoint &a, const SpherePoint &b) {
  return mform_minus(a, b);
}

MPoint antipodal_m(const PlanePoint &x) {
  const double sq = dot_vectors(x.vector(), x.vector());
  if (sq <= 1e-300) {
    throw Error(Errc::antipode_at_infinity,
                "the antipode of the north pole is the projection pole");
  }
  return MPoint(-(x.vector() / sq) + e3());
}

} // namespace ga
