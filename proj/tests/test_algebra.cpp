#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ga/algebra.hpp"
#include "ga/error.hpp"
#include "support.hpp"

using namespace ga;
using ga::testing::e;
using ga::testing::vec3;

namespace {

const Signature g2 = Signature::euclidean(2);
const Signature g3 = Signature::euclidean(3);

constexpr std::uint32_t E1 = 1, E2 = 2, E3 = 4, E12 = 3, E13 = 5, E23 = 6, E123 = 7;

// Truncated power series, independent of the closed form.
Multivector exp_series(const Multivector &b, int terms = 20) {
  Multivector sum = Multivector::scalar(b.signature(), 1.0);
  Multivector power = sum;
  for (int k = 1; k < terms; ++k) {
    power = geometric_product(power, b) / static_cast<double>(k);
    sum += power;
  }
  return sum;
}

} // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(0, 0), Error);
  CHECK_THROWS_AS(Signature(-1, 2), Error);
  CHECK_THROWS_AS(Signature(7, 6), Error);
  CHECK_NOTHROW(Signature(6, 6));
  const Signature s(1, 1);
  CHECK(s.metric_square(0) == 1);
  CHECK(s.metric_square(1) == -1);
}

TEST_CASE("blade names") {
  CHECK(blade_name(Blade{0}) == "1");
  CHECK(blade_name(Blade{E13}) == "e13");
  CHECK(blade_name(Blade{(1u << 9) | 1u}) == "e1A");
  CHECK(parse_blade_name("e123")->bits == E123);
  CHECK_FALSE(parse_blade_name("e21").has_value());
  CHECK_FALSE(parse_blade_name("e11").has_value());
  CHECK_FALSE(parse_blade_name("e0").has_value());
  CHECK(parse_blade_name("eABC")->bits == 0xE00u);
}

TEST_CASE("blade_product examples") {
  CHECK(blade_product(g3, Blade{E1}, Blade{E2}) == SignedBlade{1, Blade{E12}});
  CHECK(blade_product(g3, Blade{E12}, Blade{E12}) == SignedBlade{-1, Blade{0}});
  CHECK(blade_product(g3, Blade{E123}, Blade{E123}) == SignedBlade{-1, Blade{0}});
  CHECK(blade_product(Signature(1, 1), Blade{E2}, Blade{E2}) == SignedBlade{-1, Blade{0}});
  CHECK(blade_product(g3, Blade{E2}, Blade{E1}) == SignedBlade{-1, Blade{E12}});
}

TEST_CASE("blade_product agrees with the brute-force oracle up to dimension 6") {
  for (const Signature sig : {Signature(4, 0), Signature(2, 2), Signature(0, 5), Signature(3, 3)}) {
    for (std::uint32_t a = 0; a < sig.blade_count(); ++a) {
      for (std::uint32_t b = 0; b < sig.blade_count(); ++b) {
        const auto want = ga::testing::oracle_blade_product(sig, a, b);
        const auto got = blade_product(sig, Blade{a}, Blade{b});
        REQUIRE(got.sign == want.sign);
        REQUIRE(got.blade.bits == want.bits);
      }
    }
  }
}

TEST_CASE("geometric_product examples") {
  const auto a = Multivector::vector(g2, {1, 2});
  const auto b = Multivector::vector(g2, {3, 1});
  const auto want = Multivector::scalar(g2, 5) + e(g2, E12, -5);
  CHECK(a * b == want);
  CHECK(ga::testing::oracle_product(a, b) == want);

  const auto A = Multivector::from_dense(g3, std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(A * Multivector::scalar(g3, 1.0) == A);
  CHECK(e(g3, E1) * e(g3, E2) * e(g3, E3) == e(g3, E123));
}

TEST_CASE("geometric_product rejects mixed algebras") {
  CHECK_THROWS_AS(e(g2, E1) * e(g3, E1), Error);
  try {
    (void)(e(g2, E1) * e(g3, E1));
  } catch (const Error &err) {
    CHECK(err.code() == Errc::signature_mismatch);
  }
}

TEST_CASE("geometric product matches the oracle on random multivectors") {
  ga::testing::Random rng(11);
  for (const Signature sig : {g3, Signature(2, 2), Signature(1, 3)}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = rng.multivector(sig);
      const auto b = rng.multivector(sig);
      CHECK(coefficient_distance(a * b, ga::testing::oracle_product(a, b)) <= 1e-13);
    }
  }
}

TEST_CASE("outer_product examples") {
  CHECK(outer_product(e(g3, E1), e(g3, E1)).is_zero());
  const double a1 = 1.5, a2 = -0.25, b1 = 2.0, b2 = 3.0;
  const auto w = outer_product(Multivector::vector(g2, {a1, a2}), Multivector::vector(g2, {b1, b2}));
  CHECK(w == e(g2, E12, a1 * b2 - a2 * b1));

  const auto a = vec3(1, 2, 3), b = vec3(-1, 0.5, 2), c = vec3(4, -2, 1);
  const auto abc = outer_product(outer_product(a, b), c);
  CHECK(abc.is_homogeneous(3));
  const double det = ga::testing::det3(a.vector_components(), b.vector_components(),
                                       c.vector_components());
  CHECK(abc.coefficient(Blade{E123}) == doctest::Approx(det).epsilon(1e-14));
}

TEST_CASE("dot_vectors") {
  CHECK(dot_vectors(e(g3, E1), e(g3, E2)) == 0.0);
  CHECK(dot_vectors(vec3(1, 2, 0), vec3(3, 1, 0)) == 5.0);
  CHECK(dot_vectors(vec3(3, 4, 0), vec3(3, 4, 0)) == 25.0);
  CHECK(dot_vectors(Multivector::vector(Signature(1, 1), {2, 3}),
                    Multivector::vector(Signature(1, 1), {1, 1})) == -1.0);
  CHECK_THROWS_AS(dot_vectors(e(g3, E12), e(g3, E1)), Error);
}

TEST_CASE("inner_mixed") {
  // 1/2 (e1 e12 - e12 e1) = 1/2 (e2 + e2)
  CHECK(inner_mixed(e(g3, E1), e(g3, E12)) == e(g3, E2));
  CHECK(inner_mixed(e(g3, E3), e(g3, E12)).is_zero());
  CHECK_THROWS_AS(inner_mixed(e(g3, E12), e(g3, E12)), Error);

  ga::testing::Random rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.vector(g3), b = rng.vector(g3), c = rng.vector(g3);
    const auto lhs = inner_mixed(a, outer_product(b, c));
    const auto rhs = dot_vectors(a, b) * c - dot_vectors(a, c) * b;
    CHECK(coefficient_distance(lhs, rhs) <= 1e-12);
    // The general contraction agrees with the vector-bivector formula.
    CHECK(coefficient_distance(lhs, inner_product(a, outer_product(b, c))) <= 1e-15);
  }
}

TEST_CASE("inner_product contraction rules") {
  CHECK(inner_product(Multivector::scalar(g3, 2), Multivector::scalar(g3, 3)) ==
        Multivector::scalar(g3, 6));
  CHECK(inner_product(Multivector::scalar(g3, 2), e(g3, E1)).is_zero());
  CHECK(inner_product(e(g3, E12), e(g3, E12)) == Multivector::scalar(g3, -1));
  CHECK(inner_product(e(g3, E12), e(g3, E123)) == e(g3, E3, -1));
}

TEST_CASE("grade_part") {
  const auto a = Multivector::scalar(g3, 5) + e(g3, E1, 2) - e(g3, E12);
  CHECK(grade_part(a, 1) == e(g3, E1, 2));
  CHECK(grade_part(a, 7).is_zero());
  CHECK(grade_part(vec3(1, 2, 3) * vec3(3, 1, 0), 0).scalar_part() ==
        dot_vectors(vec3(1, 2, 3), vec3(3, 1, 0)));

  ga::testing::Random rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto m = rng.multivector(Signature(2, 2));
    Multivector sum(m.signature());
    for (int k = 0; k <= 4; ++k) sum += grade_part(m, k);
    CHECK(sum == m);
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(e(g3, E12)) == -e(g3, E12));
  CHECK(reverse(e(g3, E12)) == e(g3, E2) * e(g3, E1));
  CHECK(reverse(Multivector::scalar(g3, 4)) == Multivector::scalar(g3, 4));
  CHECK(reverse(e(g3, E123)) == -e(g3, E123));

  ga::testing::Random rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.multivector(g3), b = rng.multivector(g3);
    CHECK(coefficient_distance(reverse(a * b), reverse(b) * reverse(a)) <= 1e-13);
  }
}

TEST_CASE("vector_inverse") {
  CHECK(vector_inverse(e(g3, E1, 2)) == e(g3, E1, 0.5));
  CHECK(vector_inverse(vec3(1, 1, 0)) == vec3(0.5, 0.5, 0));
  CHECK_THROWS_AS(vector_inverse(Multivector(g3)), Error);
  // Null vector of G(1,1).
  CHECK_THROWS_AS(vector_inverse(Multivector::vector(Signature(1, 1), {1, 1})), Error);
  const auto a = vec3(0.3, -2, 1);
  CHECK(coefficient_distance(a * vector_inverse(a), Multivector::scalar(g3, 1)) <= 1e-15);
}

TEST_CASE("general inverse") {
  CHECK(inverse(Multivector::scalar(g3, 4)) == Multivector::scalar(g3, 0.25));
  CHECK(inverse(e(g3, E12)) == -e(g3, E12));
  const auto r = Multivector::scalar(g3, 0.6) + e(g3, E12, 0.8);
  CHECK(coefficient_distance(r * inverse(r), Multivector::scalar(g3, 1)) <= 1e-15);
  CHECK_THROWS_AS(inverse(Multivector(g3)), Error);
  // 1 + e1 squares to 2 + 2 e1 under its reverse: not a versor.
  CHECK_THROWS_AS(inverse(Multivector::scalar(g3, 1) + e(g3, E1)), Error);
}

TEST_CASE("dual_g3") {
  CHECK(dual_g3(e(g3, E3)) == e(g3, E12));
  ga::testing::Random rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.multivector(g3);
    CHECK(dual_g3(dual_g3(a)) == -a);
    const auto u = rng.vector(g3), v = rng.vector(g3);
    CHECK(coefficient_distance(dual_g3(cross_product(u, v)), outer_product(u, v)) <= 1e-15);
  }
  CHECK_THROWS_AS(dual_g3(e(g2, E1)), Error);
}

TEST_CASE("cross_product") {
  CHECK(cross_product(e(g3, E1), e(g3, E2)) == e(g3, E3));
  CHECK(cross_product(vec3(1, 2, 3), vec3(1, 2, 3)).is_zero());
  CHECK(cross_product(vec3(1, 0, 0), vec3(0, 2, 0)) == vec3(0, 0, 2));
  CHECK_THROWS_AS(cross_product(e(g3, E12), e(g3, E1)), Error);
  CHECK_THROWS_AS(cross_product(e(g2, E1), e(g2, E2)), Error);
}

TEST_CASE("exp_bivector") {
  const double half_pi = std::numbers::pi / 2;
  const auto r = exp_bivector(e(g3, E12, half_pi));
  CHECK(coefficient_distance(r, e(g3, E12)) <= 1e-15);
  CHECK(coefficient_distance(r, exp_series(e(g3, E12, half_pi))) <= 1e-12);
  CHECK(exp_bivector(Multivector(g3)) == Multivector::scalar(g3, 1));

  // exp(theta I n) = cos theta + I n sin theta
  const double theta = 0.7;
  const auto n = vec3(1, 2, -2) / 3.0;
  const auto In = pseudoscalar(g3) * n;
  const auto want = Multivector::scalar(g3, std::cos(theta)) + std::sin(theta) * In;
  CHECK(coefficient_distance(exp_bivector(theta * In), want) <= 1e-15);
  CHECK(coefficient_distance(exp_bivector(theta * In), exp_series(theta * In)) <= 1e-12);

  // Hyperbolic plane: e12 squares to +1 in G(1,1).
  const Signature g11(1, 1);
  const auto hb = e(g11, E12, 0.5);
  CHECK(coefficient_distance(exp_bivector(hb), exp_series(hb)) <= 1e-13);
  CHECK(exp_bivector(hb).scalar_part() == doctest::Approx(std::cosh(0.5)));

  // e12 + e34 in G4 is not a blade.
  const Signature g4 = Signature::euclidean(4);
  CHECK_THROWS_AS(exp_bivector(e(g4, 0b0011) + e(g4, 0b1100)), Error);
  CHECK_THROWS_AS(exp_bivector(e(g3, E1)), Error);
}

TEST_CASE("norm") {
  CHECK(norm(vec3(3, 4, 0)) == 5.0);
  CHECK(norm(e(g3, E12)) == 1.0);
  CHECK(norm(Multivector(g3)) == 0.0);
  const auto b = outer_product(vec3(1, 2, 0), vec3(0, 1, 3));
  CHECK((b * b).scalar_part() == doctest::Approx(-norm(b) * norm(b)));
}

TEST_CASE("cayley_table") {
  const auto t1 = cayley_table(Signature(1, 0));
  REQUIRE(t1.size() == 2);
  CHECK(t1.at(1, 1) == SignedBlade{1, Blade{0}});
  CHECK(t1.at(0, 1) == SignedBlade{1, Blade{1}});

  const auto t2 = cayley_table(g2);
  CHECK(t2.order.back().bits == E12);
  CHECK(t2.at(3, 3) == SignedBlade{-1, Blade{0}});

  const auto t3 = cayley_table(g3);
  REQUIRE(t3.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const auto want = ga::testing::oracle_blade_product(g3, t3.order[i].bits, t3.order[j].bits);
      CHECK(t3.at(i, j) == SignedBlade{want.sign, Blade{want.bits}});
    }
  }
  CHECK(cayley_table(Signature(3, 3)).entries == serial::cayley_table(Signature(3, 3)).entries);
  CHECK_THROWS_AS(cayley_table(Signature(7, 0)), Error);
}

TEST_CASE("sparse canonical form survives cancellation") {
  const auto a = vec3(1, 2, 3);
  CHECK((a - a).terms().empty());
  const auto b = e(g3, E1) * e(g3, E2) + e(g3, E2) * e(g3, E1);
  CHECK(b.terms().empty());
  const auto product = vec3(1, 0, 2) * vec3(0, 3, 0);
  for (const Term &t : product.terms()) CHECK(t.coeff != 0.0);
}

TEST_CASE("pseudoscalar commutes with every G3 blade") {
  const auto I = pseudoscalar(g3);
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    CHECK(I * e(g3, bits) == e(g3, bits) * I);
  }
}
