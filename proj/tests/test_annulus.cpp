#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "skeinym/annulus.hpp"
#include "skeinym/param.hpp"
#include "skeinym/recoupling.hpp"

using namespace skeinym;

namespace {

const Param kHalf = Param::real(0.5);

// Dyadic coefficients keep every product below 53 mantissa bits, so the
// structural identities can be checked with exact equality.
AnnulusElement random_dyadic(std::mt19937& rng, int max_color) {
  std::uniform_int_distribution<int> color(0, max_color);
  std::uniform_int_distribution<int> num(-8, 8);
  AnnulusElement x;
  for (int k = 0; k < 4; ++k)
    x.add(color(rng), ScaledScalar(num(rng) / 16.0));
  return x;
}

}  // namespace

TEST_CASE("basis products follow the fusion rule") {
  const AnnulusElement s0 = AnnulusElement::basis(0);
  const AnnulusElement s1 = AnnulusElement::basis(1);
  const AnnulusElement s2 = AnnulusElement::basis(2);
  const AnnulusElement s3 = AnnulusElement::basis(3);
  const AnnulusElement s5 = AnnulusElement::basis(5);

  CHECK(annulus_mul(kHalf, s1, s1) == s0 + s2);
  CHECK(annulus_mul(kHalf, s2, s3) == s1 + s3 + s5);
  CHECK(annulus_mul(kHalf, s0, s3) == s3);
  CHECK(annulus_mul(kHalf, s0, s0) == s0);

  CHECK_THROWS_AS(AnnulusElement::basis(-1), DomainError);
}

TEST_CASE("coefficient accumulation erases exact zeros") {
  AnnulusElement x;
  CHECK(x.is_zero());
  x.add(3, ScaledScalar(2.0));
  x.add(3, ScaledScalar(0.5));
  CHECK(x.coeff(3) == ScaledScalar(2.5));
  x.add(3, ScaledScalar(-2.5));
  CHECK(x.is_zero());
  CHECK(x.coeffs().empty());
  CHECK_THROWS_AS(x.add(-1, ScaledScalar(1.0)), DomainError);
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const AnnulusElement a = random_dyadic(rng, 5);
    const AnnulusElement b = random_dyadic(rng, 5);
    const AnnulusElement c = random_dyadic(rng, 5);
    CHECK(annulus_mul(kHalf, a, b) == annulus_mul(kHalf, b, a));
    CHECK(annulus_mul(kHalf, annulus_mul(kHalf, a, b), c) ==
          annulus_mul(kHalf, a, annulus_mul(kHalf, b, c)));
  }
}

TEST_CASE("root of unity products truncate to the reduced range") {
  const Param root5 = Param::root_of_unity(5);
  const AnnulusElement s3 = AnnulusElement::basis(3);
  CHECK(annulus_mul(root5, s3, s3) ==
        AnnulusElement::basis(0) + AnnulusElement::basis(2));
  CHECK_THROWS_AS(
      annulus_mul(root5, AnnulusElement::basis(4), AnnulusElement::basis(0)),
      AdmissibilityError);
}

TEST_CASE("pairing is the delta form on basis elements") {
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const ScaledScalar v = annulus_pairing(kHalf, AnnulusElement::basis(i),
                                             AnnulusElement::basis(j));
      CHECK(v == ScaledScalar(i == j ? 1.0 : 0.0));
    }

  std::mt19937 rng(12);
  const AnnulusElement a = random_dyadic(rng, 5);
  const AnnulusElement b = random_dyadic(rng, 5);
  const AnnulusElement c = random_dyadic(rng, 5);
  const ScaledScalar two(2.0);
  CHECK(annulus_pairing(kHalf, two * a + b, c) ==
        two * annulus_pairing(kHalf, a, c) + annulus_pairing(kHalf, b, c));
}

TEST_CASE("closed evaluation reads the empty-diagram coefficient") {
  AnnulusElement x;
  x.add(0, ScaledScalar(1.25));
  x.add(4, ScaledScalar(100.0));
  CHECK(annulus_ym(x) == ScaledScalar(1.25));
  CHECK(annulus_ym(AnnulusElement::basis(2)) == ScaledScalar());
}

TEST_CASE("truncated kirby element carries alternating loop coefficients") {
  const QuantumContext& ctx = context_for(kHalf);
  const AnnulusElement omega = kirby_partial(kHalf, 6);
  for (int i = 0; i <= 6; ++i) {
    const ScaledScalar want =
        i % 2 ? -ctx.qint(i + 1) : ctx.qint(i + 1);
    CHECK(omega.coeff(i) == want);
  }
  CHECK(omega.coeff(7) == ScaledScalar());
  CHECK_THROWS_AS(kirby_partial(kHalf, -1), DomainError);

  const Param root3 = Param::root_of_unity(3);
  const AnnulusElement capped = kirby_partial(root3, 5);
  CHECK(capped.coeff(2) == ScaledScalar());
  CHECK(rel_diff(capped.coeff(1), ScaledScalar(-1.0)) <= 1e-14);
}

TEST_CASE("kirby element is a truncated eigenvector of the loop action") {
  const QuantumContext& ctx = context_for(kHalf);
  const AnnulusElement s1 = AnnulusElement::basis(1);
  for (int n : {3, 10, 37}) {
    const AnnulusElement omega = kirby_partial(kHalf, n);
    const AnnulusElement prod = annulus_mul(kHalf, s1, omega);
    const AnnulusElement rhs = (-ctx.qint(2)) * omega;
    for (int i = 0; i < n; ++i)
      CHECK(rel_diff(prod.coeff(i), rhs.coeff(i)) <= 1e-13);
    const ScaledScalar rn = ctx.qint(n + 2);
    const ScaledScalar rn1 = ctx.qint(n + 1);
    CHECK(rel_diff(prod.coeff(n) - rhs.coeff(n), n % 2 ? -rn : rn) <= 1e-13);
    CHECK(rel_diff(prod.coeff(n + 1), n % 2 ? -rn1 : rn1) <= 1e-13);
  }
}

TEST_CASE("solved recursion reproduces the alternating loop coefficients") {
  const QuantumContext& ctx = context_for(kHalf);
  const auto alpha = solve_handleslide_coeffs(kHalf, 60);
  REQUIRE(alpha.size() == 61);
  for (int i = 0; i <= 60; ++i) {
    const ScaledScalar want =
        i % 2 ? -ctx.qint(i + 1) : ctx.qint(i + 1);
    CHECK(rel_diff(alpha[i], want) <= 1e-12);
  }

  const auto classical = solve_handleslide_coeffs(Param::classical(-1), 5);
  CHECK(classical[3] == ScaledScalar(-4.0));
  CHECK(classical[4] == ScaledScalar(5.0));

  CHECK_THROWS_AS(solve_handleslide_coeffs(kHalf, -1), DomainError);
  CHECK_THROWS_AS(
      solve_handleslide_coeffs(Param::complex(Complex(0.3, 0.4)), 3),
      RegimeError);
  CHECK_THROWS_AS(solve_handleslide_coeffs(Param::root_of_unity(5), 3),
                  RegimeError);
}
