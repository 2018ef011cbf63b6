#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ga/signature.hpp"

namespace ga {

struct Term {
  Blade blade;
  double coeff = 0.0;

  friend bool operator==(const Term &, const Term &) = default;
};

// Sparse multivector. Terms are kept in canonical blade order and no term
// ever holds an exact zero coefficient, so structural equality is value
// equality. Instances are immutable once built.
class Multivector {
public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, Blade b, double coeff = 1.0);
  static Multivector basis(Signature sig, int index_1based, double coeff = 1.0);
  // Grade-1 element with the given components along e1, e2, ...
  static Multivector vector(Signature sig, std::span<const double> components);
  static Multivector vector(Signature sig, std::initializer_list<double> components);
  // Duplicates are summed, zeros dropped.
  static Multivector from_terms(Signature sig, std::vector<Term> terms);
  // dense.size() must equal sig.blade_count(); indexed by blade bits.
  static Multivector from_dense(Signature sig, std::span<const double> dense);

  const Signature &signature() const noexcept { return sig_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coefficient(Blade b) const noexcept;
  double scalar_part() const noexcept { return coefficient(Blade{}); }
  std::vector<double> dense() const;
  // Components along e1..edim, regardless of other grades.
  std::vector<double> vector_components() const;

  // True when every term has grade k (the zero multivector qualifies).
  bool is_homogeneous(int k) const noexcept;
  bool is_even() const noexcept;

  Multivector operator-() const;
  Multivector &operator+=(const Multivector &rhs);
  Multivector &operator-=(const Multivector &rhs);
  Multivector &operator*=(double s);
  Multivector &operator/=(double s);

  friend Multivector operator+(Multivector lhs, const Multivector &rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector &rhs) { return lhs -= rhs; }
  friend Multivector operator*(Multivector lhs, double s) { return lhs *= s; }
  friend Multivector operator*(double s, Multivector rhs) { return rhs *= s; }
  friend Multivector operator/(Multivector lhs, double s) { return lhs /= s; }

  friend bool operator==(const Multivector &, const Multivector &) = default;

private:
  Multivector(Signature sig, std::vector<Term> canonical)
      : sig_(sig), terms_(std::move(canonical)) {}

  Signature sig_;
  std::vector<Term> terms_;
};

void require_same_signature(const Multivector &a, const Multivector &b);
void require_grade(const Multivector &a, int k, const char *what);

// Euclidean norm of the coefficient vector of a - b; the comparison metric
// used for tolerances, independent of the algebra's signature.
double coefficient_distance(const Multivector &a, const Multivector &b);

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;

  bool close(double a, double b) const noexcept;
  bool close(const Multivector &a, const Multivector &b) const;
};

} // namespace ga
