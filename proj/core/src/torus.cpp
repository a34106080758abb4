#include "skeinym/torus.hpp"

#include <numeric>

#include "skeinym/errors.hpp"

namespace skeinym {

PairClass::PairClass(int pp, int qq) : p(pp), q(qq) {
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
}

TorusElement TorusElement::empty() {
  TorusElement e;
  e.empty_ = ScaledScalar(1.0);
  return e;
}

TorusElement TorusElement::basis(int p, int q) {
  TorusElement e;
  if (p == 0 && q == 0) {
    e.empty_ = ScaledScalar(2.0);
    return e;
  }
  e.coeffs_[PairClass(p, q)] = ScaledScalar(1.0);
  return e;
}

ScaledScalar TorusElement::coeff(const PairClass& c) const {
  const auto it = coeffs_.find(c);
  return it == coeffs_.end() ? ScaledScalar() : it->second;
}

void TorusElement::add(const PairClass& c, const ScaledScalar& v) {
  if (c.is_origin()) {
    empty_ += v + v;
    return;
  }
  const auto it = coeffs_.find(c);
  if (it == coeffs_.end()) {
    if (!v.is_zero()) coeffs_.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) coeffs_.erase(it);
}

void TorusElement::add_empty(const ScaledScalar& v) { empty_ += v; }

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  TorusElement r = a;
  r.empty_ += b.empty_;
  for (const auto& [c, v] : b.coeffs_) r.add(c, v);
  return r;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
  TorusElement r = a;
  r.empty_ -= b.empty_;
  for (const auto& [c, v] : b.coeffs_) r.add(c, -v);
  return r;
}

TorusElement operator*(const ScaledScalar& c, const TorusElement& a) {
  TorusElement r;
  if (c.is_zero()) return r;
  r.empty_ = c * a.empty_;
  for (const auto& [k, v] : a.coeffs_) r.coeffs_.emplace(k, c * v);
  return r;
}

TorusElement torus_basis_mul(const Param& p, const PairClass& x,
                             const PairClass& y) {
  if (x.is_origin() || y.is_origin())
    throw DomainError("torus_basis_mul: (0,0) is not a basis curve");
  const int det = x.p * y.q - x.q * y.p;
  const ScaledScalar t(p.t());
  TorusElement r;
  r.add(PairClass(x.p + y.p, x.q + y.q), pow_int(t, det));
  r.add(PairClass(x.p - y.p, x.q - y.q), pow_int(t, -det));
  return r;
}

TorusElement torus_mul(const Param& p, const TorusElement& x,
                       const TorusElement& y) {
  TorusElement r = x.empty_coeff() * y;
  for (const auto& [cx, vx] : x.coeffs()) {
    r.add(cx, vx * y.empty_coeff());
    for (const auto& [cy, vy] : y.coeffs()) {
      const TorusElement prod = torus_basis_mul(p, cx, cy);
      r.add_empty(vx * vy * prod.empty_coeff());
      for (const auto& [c, v] : prod.coeffs()) r.add(c, vx * vy * v);
    }
  }
  return r;
}

int MuImage::index(int p, int q) {
  return ((p % 2 + 2) % 2) * 2 + (q % 2 + 2) % 2;
}

MuImage mu(const TorusElement& x) {
  MuImage m;
  m.empty = x.empty_coeff();
  for (const auto& [c, v] : x.coeffs()) m.cls[MuImage::index(c.p, c.q)] += v;
  return m;
}

ScaledScalar torus_ym(const TorusElement& x) { return x.empty_coeff(); }

TorusElement chebyshev_power(const Param& pr, int p, int q, int d) {
  if (d < 0) throw DomainError("chebyshev_power: d must be >= 0");
  if (std::gcd(p, q) != 1)
    throw DomainError("chebyshev_power: (p,q) must be coprime");
  TorusElement prev = TorusElement::basis(0, 0);
  if (d == 0) return prev;
  TorusElement cur = TorusElement::basis(p, q);
  const TorusElement step = cur;
  for (int j = 2; j <= d; ++j) {
    TorusElement next = torus_mul(pr, step, cur) - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ScaledScalar trace_family(const TorusElement& x, const Complex& w_empty,
                          const Complex& w_zero, const Complex& w_odd) {
  const MuImage m = mu(x);
  return ScaledScalar(w_empty) * m.empty + ScaledScalar(w_zero) * m.cls[0] +
         ScaledScalar(w_odd) * (m.cls[1] + m.cls[2] + m.cls[3]);
}

TorusElement apply_sl2(const TorusElement& x, int a, int b, int c, int d) {
  if (a * d - b * c != 1)
    throw DomainError("apply_sl2: determinant must be 1");
  TorusElement r;
  r.add_empty(x.empty_coeff());
  for (const auto& [k, v] : x.coeffs())
    r.add(PairClass(a * k.p + b * k.q, c * k.p + d * k.q), v);
  return r;
}

}  // namespace skeinym
