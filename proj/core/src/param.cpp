#include "skeinym/param.hpp"

#include <cmath>
#include <string>

namespace skeinym {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Admissibility: return "AdmissibilityError";
    case ErrorKind::Degenerate: return "DegenerateError";
    case ErrorKind::Divergence: return "DivergenceError";
    case ErrorKind::Genus: return "GenusError";
    case ErrorKind::Spine: return "SpineError";
    case ErrorKind::Regime: return "RegimeError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::GenericReal: return "GenericReal";
    case Regime::GenericComplex: return "GenericComplex";
    case Regime::Classical: return "Classical";
    case Regime::RootOfUnity: return "RootOfUnity";
    case Regime::UnitCircle: return "UnitCircle";
  }
  return "Unknown";
}

namespace {

constexpr double kUnitBand = 1e-9;

void require_finite_nonzero(Complex t) {
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
    throw DomainError("parameter t must be finite");
  if (t == Complex(0.0, 0.0)) throw DomainError("parameter t must be nonzero");
}

}  // namespace

Param::Param(Regime regime, Complex t, int root_order, double phase)
    : regime_(regime),
      t_(t),
      w_(t * t),
      root_order_(root_order),
      phase_(phase) {
  double m = std::abs(t_);
  tau_ = m <= 1.0 ? m : 1.0 / m;
}

Param Param::real(double t) {
  if (!std::isfinite(t) || t <= 0.0)
    throw DomainError("Param::real needs finite t > 0");
  if (std::abs(t - 1.0) <= kUnitBand)
    throw DivergenceError(
        "t within 1e-9 of 1; use Param::classical(+1) for the classical "
        "point");
  return Param(Regime::GenericReal, Complex(t, 0.0), 0, 0.0);
}

Param Param::complex(Complex t) {
  require_finite_nonzero(t);
  if (std::abs(std::abs(t) - 1.0) <= kUnitBand)
    throw DivergenceError(
        "|t| within 1e-9 of 1; use the classical, root_of_unity, or "
        "unit_circle factories for unit-modulus points");
  return Param(Regime::GenericComplex, t, 0, 0.0);
}

Param Param::classical(int sign) {
  if (sign != 1 && sign != -1)
    throw DomainError("Param::classical needs sign +1 or -1");
  double phase = sign == 1 ? 0.0 : M_PI;
  return Param(Regime::Classical, Complex(double(sign), 0.0), 0, phase);
}

Param Param::root_of_unity(int r) {
  if (r < 3) throw DomainError("Param::root_of_unity needs r >= 3");
  double phase = M_PI / (2.0 * r);
  return Param(Regime::RootOfUnity, std::polar(1.0, phase), r, phase);
}

Param Param::unit_circle(double phase) {
  if (!std::isfinite(phase)) throw DomainError("phase must be finite");
  for (int m = 1; m <= 4000; ++m) {
    if (std::abs(std::remainder(double(m) * phase, 2.0 * M_PI)) < kUnitBand)
      throw RegimeError("e^{i phase} is a root of unity (order " +
                        std::to_string(m) + "); use root_of_unity");
  }
  return Param(Regime::UnitCircle, std::polar(1.0, phase), 0, phase);
}

Param Param::classify(Complex t) {
  require_finite_nonzero(t);
  if (t.imag() == 0.0 && (t.real() == 1.0 || t.real() == -1.0))
    return classical(t.real() > 0 ? 1 : -1);
  if (std::abs(std::abs(t) - 1.0) <= kUnitBand)
    throw DivergenceError(
        "|t| within 1e-9 of the unit circle but t is not exactly +-1; use "
        "root_of_unity(r) or unit_circle(phase) to say which point is "
        "meant");
  if (t.imag() == 0.0 && t.real() > 0.0)
    return Param(Regime::GenericReal, t, 0, 0.0);
  return Param(Regime::GenericComplex, t, 0, 0.0);
}

}  // namespace skeinym
