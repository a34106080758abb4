#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <ostream>

#include "skeinym/errors.hpp"

namespace skeinym {

using Complex = std::complex<double>;

// Complex scalar kept as sig * 2^exp2 with |sig| in [1/2, 1), or sig == 0
// with exp2 == 0.  Quantum factorials and their ratios routinely pass
// 10^10000, so the exponent lives in an int64 instead of the double's 11
// bits.  Arithmetic matches double semantics otherwise: products are exact
// up to a few ulp, and adding a term more than kAlignBits binary orders
// below the other operand leaves it unchanged.
class ScaledScalar {
 public:
  static constexpr std::int64_t kAlignBits = 1074;

  ScaledScalar() : sig_(0.0, 0.0), exp2_(0) {}
  ScaledScalar(double x) : ScaledScalar(Complex(x, 0.0)) {}
  ScaledScalar(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("ScaledScalar: non-finite input");
    sig_ = z;
    exp2_ = 0;
    normalize();
  }

  static ScaledScalar from_parts(Complex sig, std::int64_t exp2) {
    ScaledScalar s;
    if (!std::isfinite(sig.real()) || !std::isfinite(sig.imag()))
      throw DomainError("ScaledScalar: non-finite significand");
    s.sig_ = sig;
    s.exp2_ = exp2;
    s.normalize();
    return s;
  }

  Complex sig() const { return sig_; }
  std::int64_t exp2() const { return exp2_; }
  bool is_zero() const { return sig_ == Complex(0.0, 0.0); }

  // Exact whenever the value fits in the double range; overflows to inf and
  // underflows to 0 like ldexp does.
  Complex to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    int e = exp2_ > 40000 ? 40000 : exp2_ < -40000 ? -40000 : int(exp2_);
    return {std::ldexp(sig_.real(), e), std::ldexp(sig_.imag(), e)};
  }

  // log2 of the magnitude; -inf for zero.
  double abs_log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return double(exp2_) + std::log2(std::abs(sig_));
  }

  friend ScaledScalar operator-(const ScaledScalar& a) {
    ScaledScalar r = a;
    r.sig_ = -r.sig_;
    return r;
  }

  friend ScaledScalar operator*(const ScaledScalar& a, const ScaledScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ScaledScalar r;
    r.sig_ = a.sig_ * b.sig_;
    r.exp2_ = a.exp2_ + b.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledScalar operator/(const ScaledScalar& a, const ScaledScalar& b) {
    if (b.is_zero()) throw DomainError("ScaledScalar: division by zero");
    if (a.is_zero()) return {};
    ScaledScalar r;
    r.sig_ = a.sig_ / b.sig_;
    r.exp2_ = a.exp2_ - b.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledScalar operator+(const ScaledScalar& a, const ScaledScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledScalar* big = &a;
    const ScaledScalar* small = &b;
    if (a.exp2_ < b.exp2_) std::swap(big, small);
    std::int64_t diff = big->exp2_ - small->exp2_;
    if (diff > kAlignBits) return *big;
    ScaledScalar r;
    int d = int(diff);
    r.sig_ = big->sig_ + Complex(std::ldexp(small->sig_.real(), -d),
                                 std::ldexp(small->sig_.imag(), -d));
    r.exp2_ = big->exp2_;
    r.normalize();
    return r;
  }

  friend ScaledScalar operator-(const ScaledScalar& a, const ScaledScalar& b) {
    return a + (-b);
  }

  ScaledScalar& operator*=(const ScaledScalar& o) { return *this = *this * o; }
  ScaledScalar& operator/=(const ScaledScalar& o) { return *this = *this / o; }
  ScaledScalar& operator+=(const ScaledScalar& o) { return *this = *this + o; }
  ScaledScalar& operator-=(const ScaledScalar& o) { return *this = *this - o; }

  friend bool operator==(const ScaledScalar& a, const ScaledScalar& b) {
    return a.sig_ == b.sig_ && a.exp2_ == b.exp2_;
  }
  friend bool operator!=(const ScaledScalar& a, const ScaledScalar& b) {
    return !(a == b);
  }

  friend ScaledScalar abs(const ScaledScalar& a) {
    if (a.is_zero()) return {};
    ScaledScalar r;
    r.sig_ = Complex(std::abs(a.sig_), 0.0);
    r.exp2_ = a.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledScalar conj(const ScaledScalar& a) {
    ScaledScalar r = a;
    r.sig_ = std::conj(r.sig_);
    return r;
  }

  friend ScaledScalar sqrt(const ScaledScalar& a) {
    if (a.is_zero()) return {};
    ScaledScalar r;
    if (a.exp2_ % 2 == 0) {
      r.sig_ = std::sqrt(a.sig_);
      r.exp2_ = a.exp2_ / 2;
    } else {
      r.sig_ = std::sqrt(a.sig_ * 2.0);
      r.exp2_ = (a.exp2_ - 1) / 2;
    }
    r.normalize();
    return r;
  }

  // -1, 0, +1 as |a| <, ==, > |b|.  Exact: normalization makes the
  // (exponent, |significand|) pair lexicographic.
  friend int cmp_abs(const ScaledScalar& a, const ScaledScalar& b) {
    if (a.is_zero() && b.is_zero()) return 0;
    if (a.is_zero()) return -1;
    if (b.is_zero()) return 1;
    if (a.exp2_ != b.exp2_) return a.exp2_ < b.exp2_ ? -1 : 1;
    double ma = std::abs(a.sig_), mb = std::abs(b.sig_);
    return ma < mb ? -1 : ma > mb ? 1 : 0;
  }

  friend ScaledScalar pow_int(const ScaledScalar& a, std::int64_t k) {
    if (k == 0) return ScaledScalar(1.0);
    if (a.is_zero()) {
      if (k < 0) throw DomainError("ScaledScalar: negative power of zero");
      return {};
    }
    ScaledScalar base = a;
    if (k < 0) {
      base = ScaledScalar(1.0) / a;
      k = -k;
    }
    ScaledScalar r(1.0);
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // |a - b| / max(|a|, |b|); 0 when both vanish.  Safe at any exponent.
  friend double rel_diff(const ScaledScalar& a, const ScaledScalar& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    const ScaledScalar& m = cmp_abs(a, b) >= 0 ? a : b;
    ScaledScalar r = abs(a - b) / abs(m);
    return r.to_complex().real();
  }

  friend std::ostream& operator<<(std::ostream& os, const ScaledScalar& a) {
    return os << "(" << a.sig_.real() << (a.sig_.imag() < 0 ? "" : "+")
              << a.sig_.imag() << "i)*2^" << a.exp2_;
  }

 private:
  void normalize() {
    double m = std::abs(sig_);
    if (m == 0.0) {
      sig_ = Complex(0.0, 0.0);
      exp2_ = 0;
      return;
    }
    // Finite components can still have an overflowing hypot; pre-scale.
    if (!std::isfinite(m)) {
      sig_ = Complex(std::ldexp(sig_.real(), -600), std::ldexp(sig_.imag(), -600));
      exp2_ += 600;
      m = std::abs(sig_);
    }
    int k;
    std::frexp(m, &k);
    if (k != 0) {
      sig_ = Complex(std::ldexp(sig_.real(), -k), std::ldexp(sig_.imag(), -k));
      exp2_ += k;
      m = std::abs(sig_);
    }
    // abs() rounding can leave the magnitude a hair outside [1/2, 1).
    while (m >= 1.0) {
      sig_ *= 0.5;
      ++exp2_;
      m = std::abs(sig_);
    }
    while (m < 0.5) {
      sig_ *= 2.0;
      --exp2_;
      m = std::abs(sig_);
    }
  }

  Complex sig_;
  std::int64_t exp2_;
};

}  // namespace skeinym
