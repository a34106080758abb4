#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skeinym/param.hpp"
#include "skeinym/scaled_scalar.hpp"
#include "skeinym/spine.hpp"

namespace skeinym {

// Outcome of a certified series evaluation.  value is the partial sum over
// i < terms_used; tail_bound is a proven bound on the omitted remainder.
struct SeriesResult {
  Complex value;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
  Regime regime = Regime::Classical;
};

// Called once per series index with (i, summand, running sum, tail bound).
using TermObserver =
    std::function<void(std::int64_t, Complex, Complex, double)>;

// Product over the spine of 1/theta(i,i,k_e) per edge and tet(i,i,i;
// k_v1,k_v2,k_v3) per vertex.  Zero when some (i,i,k_e) is inadmissible.
ScaledScalar ym_term(const Param& p, const ColoredSpine& s, int i);

// Per-vertex constant C(s) = prod over vertices of
// sqrt(|theta(k1,k2,k3)| / |[max(k)+1]|), the prefactor of the certified
// term bound |summand_i| <= (i+1) C(s) |t|^(i(4g-4)) for real t.
ScaledScalar term_bound_constant(const Param& p, const ColoredSpine& s);

// Sum over i >= 0 of (-1)^i [i+1] ym_term(i), run until the certified
// tail bound drops below tol.  Genus >= 2; GenericReal, GenericComplex or
// Classical regimes (RootOfUnity -> RegimeError, use ym_root; unit-modulus
// parameters diverge -> DivergenceError).
SeriesResult ym_closed(const Param& p, const ColoredSpine& s, double tol,
                       std::int64_t max_terms = 50000000,
                       const TermObserver& observer = nullptr);

// Partial sum of the same series over i < n_terms, no tail accounting.
Complex ym_partial_sum(const Param& p, const ColoredSpine& s,
                       std::int64_t n_terms);

// Finite root-of-unity sum over the reduced colors i <= r-2 with every
// (i,i,k_e) admissible term included.  Requires all spine colors <= r-2
// and reduced-admissible vertex triples.
Complex ym_root(const Param& p, const ColoredSpine& s);

// Area-damped classical series at t = -1: sum of (-1)^i [i+1]
// exp(-rho c2(i)) ym_term(i) with c2(i) = i(i+2)/4.  Genus >= 1.
SeriesResult ym_witten(const ColoredSpine& s, double rho, double tol,
                       std::int64_t max_terms = 50000000,
                       const TermObserver& observer = nullptr);

// Residual of one handle slide across the given edge, truncated at color n:
// the difference between the (u,v) = (n,n+1) and (n+1,n) boundary terms.
// bound = [n+2] C(s) t^(n(4g-2)) is the certified envelope; the residual
// is checked against it.  GenericReal, genus >= 2, edge color k >= 1.
struct HandleslideResult {
  Complex residual;
  double bound = 0.0;
};
HandleslideResult handleslide_residual(const Param& p, const ColoredSpine& s,
                                       int edge_index, int n);

// Evaluates the series along ts and at the classical point matching the
// sign of the last entry, recording |value(t_n) - classical| per point.
struct ClassicalLimitResult {
  bool passed = false;
  std::vector<double> gaps;
  Complex limit;
};
ClassicalLimitResult classical_limit_check(const ColoredSpine& s,
                                           const std::vector<Complex>& ts,
                                           double tol);

// Scans the all-zero canonical spine summand magnitudes |[i+1]|^(2-2g) at a
// unit-modulus non-root parameter and reports every index with magnitude
// in (0.5, 2): the series cannot converge there.
struct DivergenceReport {
  std::vector<std::int64_t> indices;
  std::vector<double> magnitudes;
};
DivergenceReport divergence_probe(const Param& p, int genus,
                                  std::int64_t max_index);

}  // namespace skeinym
