#include "ga/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "ga/error.hpp"

namespace ga {

namespace {

int reordering_sign(std::uint32_t a, std::uint32_t b) noexcept {
  // For every factor of a, count the factors of b that must hop over it.
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Bilinear extension of blade_product restricted to the blade pairs accepted
// by keep(grade_a, grade_b, grade_out).
template <typename Keep>
Multivector product(const Multivector &a, const Multivector &b, Keep keep) {
  require_same_signature(a, b);
  const Signature &sig = a.signature();
  std::vector<double> acc(sig.blade_count(), 0.0);
  for (const Term &ta : a.terms()) {
    const int ra = ta.blade.grade();
    for (const Term &tb : b.terms()) {
      const SignedBlade p = blade_product(sig, ta.blade, tb.blade);
      if (p.sign == 0 || !keep(ra, tb.blade.grade(), p.blade.grade())) continue;
      acc[p.blade.bits] += p.sign * ta.coeff * tb.coeff;
    }
  }
  return Multivector::from_dense(sig, acc);
}

void require_g3(const Multivector &a, const char *what) {
  if (!a.signature().is_g3()) {
    throw Error(Errc::signature_mismatch, std::string(what) + " is defined in G(3,0) only");
  }
}

void fill_rows(const Signature &sig, const std::vector<Blade> &order,
               std::vector<SignedBlade> &entries, std::size_t row) {
  const std::size_t n = order.size();
  for (std::size_t col = 0; col < n; ++col) {
    entries[row * n + col] = blade_product(sig, order[row], order[col]);
  }
}

void require_table_size(const Signature &sig) {
  if (sig.dim() > max_table_dimension) {
    throw Error(Errc::table_too_large,
                "Cayley tables are emitted for dimension <= " +
                    std::to_string(max_table_dimension) + ", got " +
                    std::to_string(sig.dim()));
  }
}

} // namespace

SignedBlade blade_product(const Signature &sig, Blade a, Blade b) noexcept {
  int sign = reordering_sign(a.bits, b.bits);
  std::uint32_t shared = a.bits & b.bits;
  while (shared != 0) {
    const int i = std::countr_zero(shared);
    sign *= sig.metric_square(i);
    shared &= shared - 1;
  }
  return {sign, Blade{a.bits ^ b.bits}};
}

Multivector geometric_product(const Multivector &a, const Multivector &b) {
  return product(a, b, [](int, int, int) { return true; });
}

Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}

Multivector outer_product(const Multivector &a, const Multivector &b) {
  return product(a, b, [](int r, int s, int out) { return out == r + s; });
}

Multivector inner_product(const Multivector &a, const Multivector &b) {
  return product(a, b, [](int r, int s, int out) {
    if (r == 0 && s == 0) return true;
    if (r == 0 || s == 0) return false;
    return out == std::abs(r - s);
  });
}

double dot_vectors(const Multivector &a, const Multivector &b) {
  require_grade(a, 1, "dot product operand");
  require_grade(b, 1, "dot product operand");
  return 0.5 * (a * b + b * a).scalar_part();
}

Multivector inner_mixed(const Multivector &a, const Multivector &bivector) {
  require_grade(a, 1, "left operand of a.(b^c)");
  require_grade(bivector, 2, "right operand of a.(b^c)");
  return grade_part(0.5 * (a * bivector - bivector * a), 1);
}

Multivector grade_part(const Multivector &a, int k) {
  std::vector<Term> out;
  for (const Term &t : a.terms()) {
    if (t.blade.grade() == k) out.push_back(t);
  }
  return Multivector::from_terms(a.signature(), std::move(out));
}

Multivector reverse(const Multivector &a) {
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  for (Term &t : out) t.coeff *= reverse_sign(t.blade.grade());
  return Multivector::from_terms(a.signature(), std::move(out));
}

Multivector vector_inverse(const Multivector &a) {
  require_grade(a, 1, "vector_inverse operand");
  const double sq = dot_vectors(a, a);
  if (std::abs(sq) <= 1e-300) {
    throw Error(Errc::singular_vector,
                "the inverse of a vector is only defined for nonzero (non-null) vectors");
  }
  return a / sq;
}

Multivector inverse(const Multivector &a, const Tolerance &tol) {
  if (a.is_homogeneous(0)) {
    const double s = a.scalar_part();
    if (s == 0.0) throw Error(Errc::not_invertible, "division by zero");
    return Multivector::scalar(a.signature(), 1.0 / s);
  }
  if (a.is_homogeneous(1)) return vector_inverse(a);
  const Multivector rev = reverse(a);
  const Multivector sq = a * rev;
  const double s = sq.scalar_part();
  const double rest = coefficient_distance(sq, grade_part(sq, 0));
  if (std::abs(s) <= 1e-300 || rest > tol.abs + tol.rel * std::abs(s)) {
    throw Error(Errc::not_invertible,
                "multivector is not invertible (A A~ is not a nonzero scalar)");
  }
  return rev / s;
}

double norm(const Multivector &a) {
  // <A A~>_0 only receives contributions from each blade times itself.
  const Signature &sig = a.signature();
  double sum = 0.0;
  for (const Term &t : a.terms()) {
    const int s = blade_product(sig, t.blade, t.blade).sign * reverse_sign(t.blade.grade());
    sum += s * t.coeff * t.coeff;
  }
  return std::sqrt(std::abs(sum));
}

Multivector pseudoscalar(const Signature &sig) {
  return Multivector::blade(sig, Blade{sig.blade_count() - 1});
}

Multivector dual_g3(const Multivector &a) {
  require_g3(a, "dual");
  return pseudoscalar(a.signature()) * a;
}

Multivector cross_product(const Multivector &a, const Multivector &b) {
  require_g3(a, "cross product");
  require_same_signature(a, b);
  require_grade(a, 1, "cross product operand");
  require_grade(b, 1, "cross product operand");
  const auto u = a.vector_components();
  const auto v = b.vector_components();
  return Multivector::vector(a.signature(), {u[1] * v[2] - u[2] * v[1],
                                             u[2] * v[0] - u[0] * v[2],
                                             u[0] * v[1] - u[1] * v[0]});
}

Multivector exp_bivector(const Multivector &bivector, const Tolerance &tol) {
  require_grade(bivector, 2, "exp argument");
  const Signature &sig = bivector.signature();
  if (bivector.is_zero()) return Multivector::scalar(sig, 1.0);

  const Multivector sq = bivector * bivector;
  const double s = sq.scalar_part();
  const double rest = coefficient_distance(sq, grade_part(sq, 0));
  if (rest > tol.abs + tol.rel * std::abs(s)) {
    throw Error(Errc::non_blade, "exp requires a bivector whose square is a scalar");
  }
  const Multivector one = Multivector::scalar(sig, 1.0);
  if (s < 0.0) {
    const double theta = std::sqrt(-s);
    return std::cos(theta) * one + (std::sin(theta) / theta) * bivector;
  }
  if (s > 0.0) {
    const double phi = std::sqrt(s);
    return std::cosh(phi) * one + (std::sinh(phi) / phi) * bivector;
  }
  return one + bivector;
}

std::vector<Blade> canonical_blades(const Signature &sig) {
  std::vector<Blade> order;
  order.reserve(sig.blade_count());
  for (std::uint32_t bits = 0; bits < sig.blade_count(); ++bits) order.push_back(Blade{bits});
  std::sort(order.begin(), order.end(), canonical_less);
  return order;
}

CayleyTable cayley_table(const Signature &sig) {
  require_table_size(sig);
  CayleyTable table{sig, canonical_blades(sig), {}};
  const std::size_t n = table.order.size();
  table.entries.resize(n * n);
  const auto rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long row = 0; row < rows; ++row) {
    fill_rows(sig, table.order, table.entries, static_cast<std::size_t>(row));
  }
  return table;
}

namespace serial {

CayleyTable cayley_table(const Signature &sig) {
  require_table_size(sig);
  CayleyTable table{sig, canonical_blades(sig), {}};
  const std::size_t n = table.order.size();
  table.entries.resize(n * n);
  for (std::size_t row = 0; row < n; ++row) fill_rows(sig, table.order, table.entries, row);
  return table;
}

} // namespace serial

} // namespace ga
