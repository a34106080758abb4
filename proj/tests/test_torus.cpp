#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "skeinym/param.hpp"
#include "skeinym/torus.hpp"

using namespace skeinym;

namespace {

const Param kHalf = Param::real(0.5);

TorusElement random_element(std::mt19937& rng, int terms, int span) {
  std::uniform_int_distribution<int> pq(-span, span);
  std::uniform_int_distribution<int> num(-8, 8);
  TorusElement x;
  for (int k = 0; k < terms; ++k) {
    const int p = pq(rng), q = pq(rng);
    const ScaledScalar c(num(rng) / 16.0);
    if (p == 0 && q == 0)
      x.add_empty(c);
    else
      x.add(PairClass(p, q), c);
  }
  return x;
}

double mag(const ScaledScalar& s) { return std::abs(s.to_complex()); }

}  // namespace

TEST_CASE("pair classes identify opposite orientations") {
  const PairClass a(-1, 2);
  CHECK(a.p == 1);
  CHECK(a.q == -2);
  const PairClass b(0, -3);
  CHECK(b.p == 0);
  CHECK(b.q == 3);
  CHECK(PairClass(2, 5) == PairClass(-2, -5));
  CHECK(PairClass(0, 0).is_origin());
  CHECK_FALSE(PairClass(1, 0).is_origin());
}

TEST_CASE("the (0,0) symbol means twice the empty skein") {
  const TorusElement z = TorusElement::basis(0, 0);
  CHECK(z.empty_coeff() == ScaledScalar(2.0));
  CHECK(z.coeffs().empty());

  // Adding at the origin routes through the same convention.
  TorusElement x;
  x.add(PairClass(0, 0), ScaledScalar(3.0));
  CHECK(x.empty_coeff() == ScaledScalar(6.0));
}

TEST_CASE("basis products carry the determinant power of t") {
  const TorusElement p1 = torus_basis_mul(kHalf, PairClass(1, 0), PairClass(0, 1));
  TorusElement want1;
  want1.add(PairClass(1, 1), ScaledScalar(0.5));
  want1.add(PairClass(1, -1), ScaledScalar(2.0));
  CHECK(p1 == want1);

  const TorusElement p2 = torus_basis_mul(kHalf, PairClass(1, 0), PairClass(1, 0));
  TorusElement want2;
  want2.add(PairClass(2, 0), ScaledScalar(1.0));
  want2.add_empty(ScaledScalar(2.0));
  CHECK(p2 == want2);

  const TorusElement p3 = torus_basis_mul(kHalf, PairClass(2, 0), PairClass(1, 0));
  TorusElement want3;
  want3.add(PairClass(3, 0), ScaledScalar(1.0));
  want3.add(PairClass(1, 0), ScaledScalar(1.0));
  CHECK(p3 == want3);

  CHECK_THROWS_AS(torus_basis_mul(kHalf, PairClass(0, 0), PairClass(1, 0)),
                  DomainError);
}

TEST_CASE("the empty skein is the unit and the commutator is explicit") {
  std::mt19937 rng(3);
  const TorusElement x = random_element(rng, 5, 4);
  CHECK(torus_mul(kHalf, TorusElement::empty(), x) == x);
  CHECK(torus_mul(kHalf, x, TorusElement::empty()) == x);

  const TorusElement s10 = TorusElement::basis(1, 0);
  const TorusElement s01 = TorusElement::basis(0, 1);
  const TorusElement comm = torus_mul(kHalf, s10, s01) -
                            torus_mul(kHalf, s01, s10);
  TorusElement want;
  want.add(PairClass(1, 1), ScaledScalar(0.5 - 2.0));
  want.add(PairClass(1, -1), ScaledScalar(2.0 - 0.5));
  CHECK(comm == want);
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const TorusElement a = random_element(rng, 4, 3);
    const TorusElement b = random_element(rng, 4, 3);
    const TorusElement c = random_element(rng, 4, 3);
    const TorusElement lhs = torus_mul(kHalf, torus_mul(kHalf, a, b), c);
    const TorusElement rhs = torus_mul(kHalf, a, torus_mul(kHalf, b, c));
    const TorusElement diff = lhs - rhs;
    CHECK(mag(diff.empty_coeff()) <= 1e-12);
    for (const auto& [cls, v] : diff.coeffs()) CHECK(mag(v) <= 1e-12);
  }
}

TEST_CASE("homology classes split by coordinate parity") {
  CHECK(MuImage::index(0, 0) == 0);
  CHECK(MuImage::index(2, 3) == 1);
  CHECK(MuImage::index(3, 2) == 2);
  CHECK(MuImage::index(1, 1) == 3);
  CHECK(MuImage::index(-1, -3) == 3);

  const MuImage even = mu(TorusElement::basis(2, 0));
  CHECK(even.cls[0] == ScaledScalar(1.0));
  CHECK(even.cls[1].is_zero());
  CHECK(even.empty.is_zero());

  const MuImage odd = mu(TorusElement::basis(1, 1));
  CHECK(odd.cls[3] == ScaledScalar(1.0));

  const MuImage unit = mu(TorusElement::empty());
  CHECK(unit.empty == ScaledScalar(1.0));
  for (const auto& c : unit.cls) CHECK(c.is_zero());
}

TEST_CASE("commutators die in every homology component") {
  std::mt19937 rng(5);
  for (const Param& p : {kHalf, Param::root_of_unity(5)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const TorusElement x = random_element(rng, 4, 3);
      const TorusElement y = random_element(rng, 4, 3);
      const TorusElement comm =
          torus_mul(p, x, y) - torus_mul(p, y, x);
      const MuImage m = mu(comm);
      CHECK(mag(m.empty) <= 1e-12);
      for (const auto& c : m.cls) CHECK(mag(c) <= 1e-12);
    }
  }
}

TEST_CASE("closed trace reads the empty coefficient and is tracial") {
  CHECK(torus_ym(TorusElement::empty()) == ScaledScalar(1.0));
  CHECK(torus_ym(TorusElement::basis(3, 5)) == ScaledScalar());
  const TorusElement s10 = TorusElement::basis(1, 0);
  CHECK(torus_ym(torus_mul(kHalf, s10, s10)) == ScaledScalar(2.0));

  std::mt19937 rng(6);
  for (const Param& p : {kHalf, Param::root_of_unity(5)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const TorusElement x = random_element(rng, 6, 5);
      const TorusElement y = random_element(rng, 6, 5);
      const ScaledScalar a = torus_ym(torus_mul(p, x, y));
      const ScaledScalar b = torus_ym(torus_mul(p, y, x));
      const double scale = std::max({mag(a), mag(b), 1.0});
      CHECK(mag(a - b) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("chebyshev recursion lands on the long curve exactly") {
  for (const Param& p : {kHalf, Param::root_of_unity(4)}) {
    const int dirs[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, -1}, {3, 2}};
    for (const auto& d : dirs)
      for (int n = 0; n <= 6; ++n)
        CHECK(chebyshev_power(p, d[0], d[1], n) ==
              TorusElement::basis(n * d[0], n * d[1]));
  }
  CHECK(chebyshev_power(kHalf, 0, 1, 0).empty_coeff() == ScaledScalar(2.0));
  CHECK_THROWS_AS(chebyshev_power(kHalf, 2, 2, 3), DomainError);
  CHECK_THROWS_AS(chebyshev_power(kHalf, 1, 1, -1), DomainError);
}

TEST_CASE("weighted traces kill commutators and ignore relabeling") {
  std::mt19937 rng(7);
  const Complex we(0.3, 0.0), wz(1.7, 0.0), wo(-0.4, 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    const TorusElement x = random_element(rng, 4, 3);
    const TorusElement y = random_element(rng, 4, 3);
    const TorusElement comm =
        torus_mul(kHalf, x, y) - torus_mul(kHalf, y, x);
    CHECK(mag(trace_family(comm, we, wz, wo)) <= 1e-12);
  }

  // The weights (1,0,0) recover the closed trace.
  const TorusElement x = random_element(rng, 6, 4);
  CHECK(trace_family(x, Complex(1.0, 0.0), Complex(0.0, 0.0),
                     Complex(0.0, 0.0)) == torus_ym(x));

  // Torus self-maps permute the odd classes, fixing the family.
  const int mats[][4] = {{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}};
  for (const auto& m : mats) {
    const TorusElement moved = apply_sl2(x, m[0], m[1], m[2], m[3]);
    CHECK(rel_diff(trace_family(moved, we, wz, wo),
                   trace_family(x, we, wz, wo)) <= 1e-13);
  }
}

TEST_CASE("torus self-maps respect the product") {
  std::mt19937 rng(8);
  const int mats[][4] = {{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}};
  for (const auto& m : mats) {
    const TorusElement x = random_element(rng, 4, 3);
    const TorusElement y = random_element(rng, 4, 3);
    const TorusElement lhs =
        apply_sl2(torus_mul(kHalf, x, y), m[0], m[1], m[2], m[3]);
    const TorusElement rhs =
        torus_mul(kHalf, apply_sl2(x, m[0], m[1], m[2], m[3]),
                  apply_sl2(y, m[0], m[1], m[2], m[3]));
    const TorusElement diff = lhs - rhs;
    CHECK(mag(diff.empty_coeff()) <= 1e-13);
    for (const auto& [cls, v] : diff.coeffs()) CHECK(mag(v) <= 1e-13);
  }
  CHECK_THROWS_AS(apply_sl2(TorusElement::basis(1, 0), 1, 1, 1, 1),
                  DomainError);
}
