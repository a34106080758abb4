#pragma once

#include <map>
#include <vector>

#include "skeinym/param.hpp"
#include "skeinym/recoupling.hpp"
#include "skeinym/scaled_scalar.hpp"

namespace skeinym {

// Finite linear combination of the annulus basis skeins s_i (i a color).
// Zero coefficients are never stored.
class AnnulusElement {
 public:
  AnnulusElement() = default;

  static AnnulusElement basis(int i);

  const std::map<int, ScaledScalar>& coeffs() const { return coeffs_; }
  ScaledScalar coeff(int i) const;
  void add(int i, const ScaledScalar& c);
  bool is_zero() const { return coeffs_.empty(); }

  friend AnnulusElement operator+(const AnnulusElement& a,
                                  const AnnulusElement& b);
  friend AnnulusElement operator-(const AnnulusElement& a,
                                  const AnnulusElement& b);
  friend AnnulusElement operator*(const ScaledScalar& c,
                                  const AnnulusElement& a);
  friend bool operator==(const AnnulusElement& a, const AnnulusElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<int, ScaledScalar> coeffs_;
};

// Bilinear extension of s_i s_j = sum of s_q for q from |i-j| to i+j in
// steps of 2.  At RootOfUnity(r) the inputs must only use colors <= r-2
// and output terms with q > r-2 are dropped (the reduced quotient).
AnnulusElement annulus_mul(const Param& p, const AnnulusElement& x,
                           const AnnulusElement& y);

// Coefficient of s_0 (the handlebody Yang-Mills value of the element).
ScaledScalar annulus_ym(const AnnulusElement& x);

// <x, y> = annulus_ym(x * y); the s_i are orthonormal for it.
ScaledScalar annulus_pairing(const Param& p, const AnnulusElement& x,
                             const AnnulusElement& y);

// Partial handle-slide element: sum of (-1)^i [i+1] s_i for i <= n
// (capped at r-2 in the RootOfUnity regime, where it is the whole thing).
AnnulusElement kirby_partial(const Param& p, int n);

// Coefficients alpha_0..alpha_n of the element annihilating handle-slides,
// from alpha_0 = 1 and the eigen-relation s_1 alpha = -[2] alpha; equals
// (-1)^i [i+1].  GenericReal or Classical regimes only.
std::vector<ScaledScalar> solve_handleslide_coeffs(const Param& p, int n);

}  // namespace skeinym
