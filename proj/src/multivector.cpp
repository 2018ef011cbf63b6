#include "ga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ga/error.hpp"

namespace ga {

namespace {

void check_blade(const Signature &sig, Blade b) {
  if (b.bits >= sig.blade_count()) {
    throw Error(Errc::grade, "blade " + blade_name(b) +
                                 " does not exist in a " +
                                 std::to_string(sig.dim()) + "-dimensional algebra");
  }
}

// Merge two canonical term lists with lhs + factor * rhs.
std::vector<Term> merge(std::span<const Term> lhs, std::span<const Term> rhs,
                        double factor) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto l = lhs.begin();
  auto r = rhs.begin();
  while (l != lhs.end() || r != rhs.end()) {
    if (r == rhs.end() || (l != lhs.end() && canonical_less(l->blade, r->blade))) {
      out.push_back(*l++);
    } else if (l == lhs.end() || canonical_less(r->blade, l->blade)) {
      out.push_back({r->blade, factor * r->coeff});
      ++r;
    } else {
      const double c = l->coeff + factor * r->coeff;
      if (c != 0.0) out.push_back({l->blade, c});
      ++l;
      ++r;
    }
  }
  return out;
}

} // namespace

Multivector Multivector::scalar(Signature sig, double value) {
  return blade(sig, Blade{}, value);
}

Multivector Multivector::blade(Signature sig, Blade b, double coeff) {
  check_blade(sig, b);
  if (coeff == 0.0) return Multivector(sig);
  return Multivector(sig, {{b, coeff}});
}

Multivector Multivector::basis(Signature sig, int index_1based, double coeff) {
  if (index_1based < 1 || index_1based > sig.dim()) {
    throw Error(Errc::grade, "basis vector e" + std::to_string(index_1based) +
                                 " out of range");
  }
  return blade(sig, basis_vector(index_1based - 1), coeff);
}

Multivector Multivector::vector(Signature sig, std::span<const double> components) {
  if (static_cast<int>(components.size()) > sig.dim()) {
    throw Error(Errc::grade, "vector has more components than the algebra dimension");
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] != 0.0) {
      terms.push_back({basis_vector(static_cast<int>(i)), components[i]});
    }
  }
  return Multivector(sig, std::move(terms));
}

Multivector Multivector::vector(Signature sig, std::initializer_list<double> components) {
  return vector(sig, std::span<const double>(components.begin(), components.size()));
}

Multivector Multivector::from_terms(Signature sig, std::vector<Term> terms) {
  for (const Term &t : terms) check_blade(sig, t.blade);
  std::stable_sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    return canonical_less(a.blade, b.blade);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term &t : terms) {
    if (!out.empty() && out.back().blade == t.blade) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term &t) { return t.coeff == 0.0; });
  return Multivector(sig, std::move(out));
}

Multivector Multivector::from_dense(Signature sig, std::span<const double> dense) {
  if (dense.size() != sig.blade_count()) {
    throw Error(Errc::grade, "dense coefficient array has the wrong size");
  }
  std::vector<Term> out;
  for (std::uint32_t bits = 0; bits < dense.size(); ++bits) {
    if (dense[bits] != 0.0) out.push_back({Blade{bits}, dense[bits]});
  }
  std::sort(out.begin(), out.end(), [](const Term &a, const Term &b) {
    return canonical_less(a.blade, b.blade);
  });
  return Multivector(sig, std::move(out));
}

double Multivector::coefficient(Blade b) const noexcept {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), b,
      [](const Term &t, Blade key) { return canonical_less(t.blade, key); });
  return (it != terms_.end() && it->blade == b) ? it->coeff : 0.0;
}

std::vector<double> Multivector::dense() const {
  std::vector<double> out(sig_.blade_count(), 0.0);
  for (const Term &t : terms_) out[t.blade.bits] = t.coeff;
  return out;
}

std::vector<double> Multivector::vector_components() const {
  std::vector<double> out(static_cast<std::size_t>(sig_.dim()), 0.0);
  for (const Term &t : terms_) {
    if (t.blade.grade() == 1) out[std::countr_zero(t.blade.bits)] = t.coeff;
  }
  return out;
}

bool Multivector::is_homogeneous(int k) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const Term &t) { return t.blade.grade() == k; });
}

bool Multivector::is_even() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return t.blade.grade() % 2 == 0; });
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (Term &t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Multivector &Multivector::operator+=(const Multivector &rhs) {
  require_same_signature(*this, rhs);
  terms_ = merge(terms_, rhs.terms_, 1.0);
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &rhs) {
  require_same_signature(*this, rhs);
  terms_ = merge(terms_, rhs.terms_, -1.0);
  return *this;
}

Multivector &Multivector::operator*=(double s) {
  for (Term &t : terms_) t.coeff *= s;
  std::erase_if(terms_, [](const Term &t) { return t.coeff == 0.0; });
  return *this;
}

Multivector &Multivector::operator/=(double s) {
  for (Term &t : terms_) t.coeff /= s;
  std::erase_if(terms_, [](const Term &t) { return t.coeff == 0.0; });
  return *this;
}

void require_same_signature(const Multivector &a, const Multivector &b) {
  if (a.signature() != b.signature()) {
    const auto name = [](const Signature &s) {
      return "(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
    };
    throw Error(Errc::signature_mismatch,
                "operands belong to different algebras " + name(a.signature()) +
                    " and " + name(b.signature()));
  }
}

void require_grade(const Multivector &a, int k, const char *what) {
  if (!a.is_homogeneous(k)) {
    throw Error(Errc::grade, std::string(what) + " must be of grade " +
                                 std::to_string(k));
  }
}

double coefficient_distance(const Multivector &a, const Multivector &b) {
  require_same_signature(a, b);
  const Multivector diff = a - b;
  double sum = 0.0;
  for (const Term &t : diff.terms()) sum += t.coeff * t.coeff;
  return std::sqrt(sum);
}

bool Tolerance::close(double a, double b) const noexcept {
  return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

bool Tolerance::close(const Multivector &a, const Multivector &b) const {
  double scale = 0.0;
  for (const Term &t : a.terms()) scale = std::max(scale, std::abs(t.coeff));
  for (const Term &t : b.terms()) scale = std::max(scale, std::abs(t.coeff));
  return coefficient_distance(a, b) <= abs + rel * scale;
}

} // namespace ga
