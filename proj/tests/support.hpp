#pragma once

// Test-only helpers: an independent brute-force blade multiplication oracle
// and seeded random generators. Nothing here calls into the kernel's
// product routines.

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::testing {

struct OracleProduct {
  int sign;
  std::uint32_t bits;
};

// Writes out both factor lists, bubble-sorts the concatenation counting
// swaps, then cancels adjacent equal indices with their metric squares.
inline OracleProduct oracle_blade_product(const Signature &sig, std::uint32_t a,
                                          std::uint32_t b) {
  std::vector<int> factors;
  for (int i = 0; i < sig.dim(); ++i)
    if (a & (1u << i)) factors.push_back(i);
  for (int i = 0; i < sig.dim(); ++i)
    if (b & (1u << i)) factors.push_back(i);

  int sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      if (factors[k] > factors[k + 1]) {
        std::swap(factors[k], factors[k + 1]);
        sign = -sign;
        swapped = true;
      }
    }
  }

  std::vector<int> reduced;
  for (int f : factors) {
    if (!reduced.empty() && reduced.back() == f) {
      sign *= (f < sig.p()) ? 1 : -1;
      reduced.pop_back();
    } else {
      reduced.push_back(f);
    }
  }
  std::uint32_t bits = 0;
  for (int f : reduced) bits |= 1u << f;
  return {sign, bits};
}

// Dense product through the oracle; coefficients indexed by blade bits.
inline std::vector<double> oracle_dense_product(const Signature &sig,
                                                const std::vector<double> &a,
                                                const std::vector<double> &b) {
  std::vector<double> out(sig.blade_count(), 0.0);
  for (std::uint32_t i = 0; i < sig.blade_count(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < sig.blade_count(); ++j) {
      if (b[j] == 0.0) continue;
      const auto p = oracle_blade_product(sig, i, j);
      out[p.bits] += p.sign * a[i] * b[j];
    }
  }
  return out;
}

inline Multivector oracle_product(const Multivector &a, const Multivector &b) {
  return Multivector::from_dense(a.signature(),
                                 oracle_dense_product(a.signature(), a.dense(), b.dense()));
}

inline double det3(const std::vector<double> &a, const std::vector<double> &b,
                   const std::vector<double> &c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

class Random {
public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  Multivector vector(const Signature &sig, double lo = -1.0, double hi = 1.0) {
    std::vector<double> c(static_cast<std::size_t>(sig.dim()));
    for (double &x : c) x = uniform(lo, hi);
    return Multivector::vector(sig, c);
  }

  Multivector unit_vector(const Signature &sig) {
    std::normal_distribution<double> normal;
    std::vector<double> c(static_cast<std::size_t>(sig.dim()));
    double sq = 0.0;
    do {
      sq = 0.0;
      for (double &x : c) {
        x = normal(engine_);
        sq += x * x;
      }
    } while (sq < 1e-8);
    const double len = std::sqrt(sq);
    for (double &x : c) x /= len;
    return Multivector::vector(sig, c);
  }

  // Every blade gets a coefficient; about a quarter are left at zero.
  Multivector multivector(const Signature &sig) {
    std::vector<double> dense(sig.blade_count());
    for (double &x : dense) x = (uniform(0.0, 1.0) < 0.25) ? 0.0 : uniform();
    return Multivector::from_dense(sig, dense);
  }

  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

inline Multivector vec3(double x, double y, double z) {
  return Multivector::vector(Signature::euclidean(3), {x, y, z});
}

inline Multivector e(const Signature &sig, std::uint32_t bits, double c = 1.0) {
  return Multivector::blade(sig, Blade{bits}, c);
}

} // namespace ga::testing
