#include "skeinym/annulus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "skeinym/errors.hpp"

namespace skeinym {

namespace {

int root_cap(const Param& p) {
  return p.regime() == Regime::RootOfUnity ? p.root_order() - 2 : -1;
}

void check_reduced(const Param& p, const AnnulusElement& x) {
  const int cap = root_cap(p);
  if (cap < 0) return;
  for (const auto& [i, c] : x.coeffs())
    if (i > cap)
      throw AdmissibilityError("annulus: color " + std::to_string(i) +
                               " exceeds the reduced range r-2");
}

}  // namespace

AnnulusElement AnnulusElement::basis(int i) {
  if (i < 0) throw DomainError("annulus basis color must be >= 0");
  AnnulusElement e;
  e.coeffs_[i] = ScaledScalar(1.0);
  return e;
}

ScaledScalar AnnulusElement::coeff(int i) const {
  const auto it = coeffs_.find(i);
  return it == coeffs_.end() ? ScaledScalar() : it->second;
}

void AnnulusElement::add(int i, const ScaledScalar& c) {
  if (i < 0) throw DomainError("annulus basis color must be >= 0");
  const auto it = coeffs_.find(i);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(i, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

AnnulusElement operator+(const AnnulusElement& a, const AnnulusElement& b) {
  AnnulusElement r = a;
  for (const auto& [i, c] : b.coeffs_) r.add(i, c);
  return r;
}

AnnulusElement operator-(const AnnulusElement& a, const AnnulusElement& b) {
  AnnulusElement r = a;
  for (const auto& [i, c] : b.coeffs_) r.add(i, -c);
  return r;
}

AnnulusElement operator*(const ScaledScalar& c, const AnnulusElement& a) {
  AnnulusElement r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : a.coeffs_) r.coeffs_.emplace(i, c * v);
  return r;
}

AnnulusElement annulus_mul(const Param& p, const AnnulusElement& x,
                           const AnnulusElement& y) {
  check_reduced(p, x);
  check_reduced(p, y);
  const int cap = root_cap(p);
  AnnulusElement r;
  for (const auto& [i, ci] : x.coeffs()) {
    for (const auto& [j, cj] : y.coeffs()) {
      const ScaledScalar c = ci * cj;
      const int hi = cap >= 0 ? std::min(i + j, cap) : i + j;
      for (int q = std::abs(i - j); q <= hi; q += 2) r.add(q, c);
    }
  }
  return r;
}

ScaledScalar annulus_ym(const AnnulusElement& x) { return x.coeff(0); }

ScaledScalar annulus_pairing(const Param& p, const AnnulusElement& x,
                             const AnnulusElement& y) {
  return annulus_ym(annulus_mul(p, x, y));
}

AnnulusElement kirby_partial(const Param& p, int n) {
  if (n < 0) throw DomainError("kirby_partial: n must be >= 0");
  const int cap = root_cap(p);
  const int hi = cap >= 0 ? std::min(n, cap) : n;
  const QuantumContext& ctx = context_for(p);
  AnnulusElement r;
  for (int i = 0; i <= hi; ++i)
    r.add(i, i % 2 ? -ctx.qint(i + 1) : ctx.qint(i + 1));
  return r;
}

std::vector<ScaledScalar> solve_handleslide_coeffs(const Param& p, int n) {
  if (n < 0) throw DomainError("solve_handleslide_coeffs: n must be >= 0");
  if (p.regime() != Regime::GenericReal && p.regime() != Regime::Classical)
    throw RegimeError(
        "solve_handleslide_coeffs: needs GenericReal or Classical");
  const QuantumContext& ctx = context_for(p);
  const ScaledScalar two = ctx.qint(2);
  std::vector<ScaledScalar> alpha;
  alpha.reserve(n + 1);
  alpha.emplace_back(1.0);
  if (n >= 1) alpha.push_back(-two);
  for (int j = 2; j <= n; ++j)
    alpha.push_back(-(two * alpha[j - 1]) - alpha[j - 2]);
  return alpha;
}

}  // namespace skeinym
