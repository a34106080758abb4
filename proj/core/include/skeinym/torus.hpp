#pragma once

#include <array>
#include <map>

#include "skeinym/param.hpp"
#include "skeinym/scaled_scalar.hpp"

namespace skeinym {

// Unordered curve class on the torus: (p,q) identified with (-p,-q).
// Canonical representative has p > 0, or p == 0 and q >= 0.
struct PairClass {
  int p = 0;
  int q = 0;

  PairClass() = default;
  PairClass(int pp, int qq);

  bool is_origin() const { return p == 0 && q == 0; }

  friend bool operator==(const PairClass& a, const PairClass& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const PairClass& a, const PairClass& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }
};

// Element of the torus skein algebra in the basis {empty skein} u
// {s_(p,q) : (p,q) != (0,0)}.  The special element s_(0,0) is identified
// with 2 * empty and is folded into the empty coefficient on sight.
class TorusElement {
 public:
  TorusElement() = default;

  static TorusElement empty();              // the unit
  static TorusElement basis(int p, int q);  // s_(p,q); (0,0) gives 2*empty

  const ScaledScalar& empty_coeff() const { return empty_; }
  const std::map<PairClass, ScaledScalar>& coeffs() const { return coeffs_; }
  ScaledScalar coeff(const PairClass& c) const;
  void add(const PairClass& c, const ScaledScalar& v);
  void add_empty(const ScaledScalar& v);
  bool is_zero() const { return empty_.is_zero() && coeffs_.empty(); }

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const ScaledScalar& c, const TorusElement& a);
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.empty_ == b.empty_ && a.coeffs_ == b.coeffs_;
  }

 private:
  ScaledScalar empty_;
  std::map<PairClass, ScaledScalar> coeffs_;
};

// Product of two basis curves:
//   s_(p,q) s_(u,v) = t^(pv-qu) s_(p+u,q+v) + t^(qu-pv) s_(p-u,q-v),
// well defined on pair classes.  torus_mul extends bilinearly.
TorusElement torus_basis_mul(const Param& p, const PairClass& x,
                             const PairClass& y);
TorusElement torus_mul(const Param& p, const TorusElement& x,
                       const TorusElement& y);

// Image under the homology projection: the empty coefficient plus the
// coefficient sums over the four Z2 x Z2 classes (p mod 2, q mod 2).
struct MuImage {
  ScaledScalar empty;
  std::array<ScaledScalar, 4> cls;  // index (p mod 2) * 2 + (q mod 2)

  static int index(int p, int q);
};
MuImage mu(const TorusElement& x);

// Yang-Mills functional on the torus: the empty-skein coefficient.
ScaledScalar torus_ym(const TorusElement& x);

// s_(dp,dq) for coprime (p,q), built by the Chebyshev-style recursion
//   s_d = s_(p,q) s_(d-1) - s_(d-2),  s_0 = 2*empty, s_1 = s_(p,q).
TorusElement chebyshev_power(const Param& pr, int p, int q, int d);

// Weighted functional w_empty * mu.empty + w_zero * mu.cls[(0,0)]
// + w_odd * (sum of the three nonzero classes).  Every trace on the
// algebra is of this form; exposed for testing.
ScaledScalar trace_family(const TorusElement& x, const Complex& w_empty,
                          const Complex& w_zero, const Complex& w_odd);

// Action of [[a,b],[c,d]] in SL(2,Z): s_(p,q) -> s_(ap+bq, cp+dq).
// Requires ad - bc = 1.
TorusElement apply_sl2(const TorusElement& x, int a, int b, int c, int d);

}  // namespace skeinym
