#pragma once

#include <complex>
#include <string_view>

#include "skeinym/errors.hpp"
#include "skeinym/scaled_scalar.hpp"

namespace skeinym {

// Evaluation regimes for the deformation parameter t.  Series behavior is
// regime-driven: |t| != 1 converges geometrically, t = +-1 converges as a
// p-series, roots of unity give finite sums, and other unit-modulus points
// diverge (UnitCircle exists so the divergence probe can still evaluate
// quantum integers there).
enum class Regime {
  GenericReal,     // t real, t > 0, away from 1
  GenericComplex,  // |t| != 1, not covered above
  Classical,       // t = +1 or -1
  RootOfUnity,     // t = e^{i pi / 2r}, r >= 3
  UnitCircle,      // |t| = 1, not a root of unity
};

const char* regime_name(Regime r);

class Param {
 public:
  // t real and positive, bounded away from the unit circle.
  static Param real(double t);
  // Arbitrary t with |t| != 1.
  static Param complex(Complex t);
  // t = sign, sign in {+1, -1}.
  static Param classical(int sign);
  // t = e^{i pi / 2r}, r >= 3.
  static Param root_of_unity(int r);
  // t = e^{i phase}, rejected if t^m = 1 for any m <= 4000.
  static Param unit_circle(double phase);
  // Picks the regime from the value alone.  Exact +-1 goes Classical;
  // points within 1e-9 of the unit circle are refused (DivergenceError)
  // since the caller must say which root or classical point is meant.
  static Param classify(Complex t);

  Regime regime() const { return regime_; }
  Complex t() const { return t_; }
  Complex w() const { return w_; }  // t^2, the variable everything is even in
  // r for RootOfUnity, 0 otherwise.
  int root_order() const { return root_order_; }
  // arg(t) for the unit-modulus regimes, 0 otherwise.
  double phase() const { return phase_; }
  // min(|t|, 1/|t|): the decay base for series tail bounds.
  double tau() const { return tau_; }
  bool unit_modulus() const {
    return regime_ == Regime::Classical || regime_ == Regime::RootOfUnity ||
           regime_ == Regime::UnitCircle;
  }
  // True when t^2 is real and positive (t real), which is when quantum
  // integers are real with [n] >= n and the p-series tail bound applies.
  bool real_axis() const { return t_.imag() == 0.0; }

 private:
  Param(Regime regime, Complex t, int root_order, double phase);

  Regime regime_;
  Complex t_;
  Complex w_;
  int root_order_;
  double phase_;
  double tau_;
};

}  // namespace skeinym
