#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "skeinym/param.hpp"
#include "skeinym/scaled_scalar.hpp"

namespace skeinym {

// Memoized quantum integers [n] and factorials [n]! for one parameter
// point.  Growth is on demand; concurrent readers and writers are safe and
// always see identical values.
class QuantumContext {
 public:
  explicit QuantumContext(const Param& p);

  const Param& param() const { return p_; }

  // [n] = (w^n - w^{-n})/(w - w^{-1}) with w = t^2; n at Classical, the
  // sin(n pi / r) ratio at roots of unity.  Requires n >= 0.
  ScaledScalar qint(std::int64_t n) const;

  // [n]! = [1][2]...[n].  Requires n >= 0; at RootOfUnity requires n < r
  // (the factor [r] = 0 would poison every ratio).
  ScaledScalar qfact(std::int64_t n) const;

 private:
  ScaledScalar qint_direct(std::int64_t n) const;
  void grow_qints(std::int64_t n) const;  // callers hold mu_ exclusively

  Param p_;
  ScaledScalar w_, winv_, w2_;  // generic regimes: w, 1/w, w^2
  mutable std::shared_mutex mu_;
  mutable std::vector<ScaledScalar> qints_;
  mutable std::vector<ScaledScalar> qfacts_;
  // [n] is grown as w^{-(n-1)} * sum_{j<n} w^{2j}: the geometric-sum form
  // never subtracts, so near-unit w (where w^n - w^{-n} cancels to ~n(w-1))
  // keeps full precision.  State for n = qints_.size()-1:
  mutable ScaledScalar w2n_;       // (w^2)^n
  mutable ScaledScalar winv_pow_;  // w^{-(n-1)}
  mutable ScaledScalar geo_;       // sum_{j<n} w^{2j}
};

// Process-wide context for a parameter point, keyed by regime and value
// bits; lives for the process.
const QuantumContext& context_for(const Param& p);

// Fusion admissibility: a+b+c even and the triangle inequalities; at
// RootOfUnity(r) additionally every color <= r-2 and a+b+c <= 2r-4.
// Negative values are never admissible.
bool admissible(const Param& p, int a, int b, int c);

// Theta network: sign (-1)^{(a+b+c)/2} times
// [s+1]! [(a+b-c)/2]! [(b+c-a)/2]! [(c+a-b)/2]! / ([a]![b]![c]!),
// s = (a+b+c)/2.  Throws AdmissibilityError off the admissible set.
ScaledScalar theta(const Param& p, int a, int b, int c);

// Tetrahedral network in the single-sum form.  Vertex triples are
// (b,c,e), (a,d,e), (a,b,f), (c,d,f); all four must be admissible.
// At roots of unity the sum index stops at r-2 (higher terms carry the
// factor [r] = 0).
ScaledScalar tet(const Param& p, int a, int b, int e, int c, int d, int f);

// 6j symbol: Tet(a,b,e;c,d,f) (-1)^e [e+1] / (theta(a,d,e) theta(c,b,e)).
// Throws DegenerateError when a denominator theta vanishes.
ScaledScalar sixj(const Param& p, int a, int b, int e, int c, int d, int f);

// |Tet| <= sqrt(|theta(b,c,e) theta(a,d,e) theta(a,b,f) theta(c,d,f)|
//               / |[e+1][f+1]|), with slack factor 1 + 1e-9 on the right.
struct Est1Result {
  ScaledScalar lhs;  // |Tet(a,b,e;c,d,f)|
  ScaledScalar rhs;  // the theta square root
  bool holds;
};
Est1Result check_est1(const Param& p, int a, int b, int e, int c, int d,
                      int f);

// sqrt(|theta(k1,k2,k3)| / [k3+1]) * t^i: an upper bound for
// |tet(i,i,i;k1,k2,k3)| / sqrt|theta(i,i,k1) theta(i,i,k2) theta(i,i,k3)|.
// Requires GenericReal with t < 1.
ScaledScalar est2_bound(const Param& p, int i, int k1, int k2, int k3);

}  // namespace skeinym
