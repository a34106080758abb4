#include "skeinym/recoupling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "skeinym/errors.hpp"

namespace skeinym {

namespace {

bool is_generic(Regime r) {
  return r == Regime::GenericReal || r == Regime::GenericComplex;
}

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

QuantumContext::QuantumContext(const Param& p) : p_(p) {
  if (is_generic(p_.regime())) {
    w_ = ScaledScalar(p_.w());
    winv_ = ScaledScalar(1.0) / w_;
    w2_ = w_ * w_;
    w2n_ = w2_;
    winv_pow_ = ScaledScalar(1.0);
    geo_ = ScaledScalar(1.0);
  }
  qints_ = {ScaledScalar(), ScaledScalar(1.0)};
  qfacts_ = {ScaledScalar(1.0), ScaledScalar(1.0)};
}

ScaledScalar QuantumContext::qint_direct(std::int64_t n) const {
  switch (p_.regime()) {
    case Regime::Classical:
      return ScaledScalar(static_cast<double>(n));
    case Regime::RootOfUnity: {
      const int r = p_.root_order();
      if (n % r == 0) return {};
      const double m = static_cast<double>(n % (2 * r));
      return ScaledScalar(std::sin(m * M_PI / r) / std::sin(M_PI / r));
    }
    case Regime::UnitCircle: {
      if (n == 0) return {};
      const double arg =
          std::remainder(2.0 * static_cast<double>(n) * p_.phase(), 2 * M_PI);
      return ScaledScalar(std::sin(arg) / std::sin(2 * p_.phase()));
    }
    default:
      throw InternalError("qint_direct called in a generic regime");
  }
}

void QuantumContext::grow_qints(std::int64_t n) const {
  while (static_cast<std::int64_t>(qints_.size()) <= n) {
    geo_ += w2n_;
    w2n_ *= w2_;
    winv_pow_ *= winv_;
    qints_.push_back(winv_pow_ * geo_);
  }
}

ScaledScalar QuantumContext::qint(std::int64_t n) const {
  if (n < 0) throw DomainError("quantum integer of negative index");
  if (!is_generic(p_.regime())) return qint_direct(n);
  {
    std::shared_lock lock(mu_);
    if (n < static_cast<std::int64_t>(qints_.size())) return qints_[n];
  }
  std::unique_lock lock(mu_);
  grow_qints(n);
  return qints_[n];
}

ScaledScalar QuantumContext::qfact(std::int64_t n) const {
  if (n < 0) throw DomainError("quantum factorial of negative index");
  if (p_.regime() == Regime::RootOfUnity && n >= p_.root_order())
    throw DomainError("quantum factorial at a root of unity needs n < r");
  {
    std::shared_lock lock(mu_);
    if (n < static_cast<std::int64_t>(qfacts_.size())) return qfacts_[n];
  }
  std::unique_lock lock(mu_);
  const bool generic = is_generic(p_.regime());
  if (generic) grow_qints(n);
  while (static_cast<std::int64_t>(qfacts_.size()) <= n) {
    const std::int64_t k = static_cast<std::int64_t>(qfacts_.size());
    qfacts_.push_back(qfacts_.back() * (generic ? qints_[k] : qint_direct(k)));
  }
  return qfacts_[n];
}

const QuantumContext& context_for(const Param& p) {
  using Key = std::tuple<int, std::uint64_t, std::uint64_t, int>;
  static std::mutex reg_mu;
  static std::map<Key, std::unique_ptr<QuantumContext>> registry;

  const Key key{static_cast<int>(p.regime()),
                std::bit_cast<std::uint64_t>(p.t().real()),
                std::bit_cast<std::uint64_t>(p.t().imag()), p.root_order()};
  std::lock_guard lock(reg_mu);
  auto& slot = registry[key];
  if (!slot) slot = std::make_unique<QuantumContext>(p);
  return *slot;
}

bool admissible(const Param& p, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a > b + c || b > c + a || c > a + b) return false;
  if (p.regime() == Regime::RootOfUnity) {
    const int r = p.root_order();
    if (a > r - 2 || b > r - 2 || c > r - 2) return false;
    if (a + b + c > 2 * r - 4) return false;
  }
  return true;
}

ScaledScalar theta(const Param& p, int a, int b, int c) {
  if (!admissible(p, a, b, c))
    throw AdmissibilityError("theta: inadmissible triple " +
                             triple_str(a, b, c));
  const QuantumContext& ctx = context_for(p);
  const int s = (a + b + c) / 2;
  const ScaledScalar num = ctx.qfact(s + 1) * ctx.qfact((a + b - c) / 2) *
                           ctx.qfact((b + c - a) / 2) *
                           ctx.qfact((c + a - b) / 2);
  const ScaledScalar den = ctx.qfact(a) * ctx.qfact(b) * ctx.qfact(c);
  const ScaledScalar val = num / den;
  return s % 2 ? -val : val;
}

ScaledScalar tet(const Param& p, int a, int b, int e, int c, int d, int f) {
  const int tris[4][3] = {{b, c, e}, {a, d, e}, {a, b, f}, {c, d, f}};
  for (const auto& t : tris)
    if (!admissible(p, t[0], t[1], t[2]))
      throw AdmissibilityError("tet: inadmissible vertex triple " +
                               triple_str(t[0], t[1], t[2]));

  const QuantumContext& ctx = context_for(p);
  const int av[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2,
                     (c + d + f) / 2};
  const int bv[3] = {(a + b + c + d) / 2, (a + c + e + f) / 2,
                     (b + d + e + f) / 2};
  const int s_lo = *std::max_element(av, av + 4);
  int s_hi = *std::min_element(bv, bv + 3);
  if (s_lo > s_hi) throw InternalError("tet: empty sum for admissible labels");
  // Terms with s >= r-1 contain [r] = 0 in [s+1]! and vanish; the cap also
  // keeps every factorial argument below r.
  if (p.regime() == Regime::RootOfUnity)
    s_hi = std::min(s_hi, p.root_order() - 2);

  ScaledScalar pre(1.0);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 4; ++l) pre *= ctx.qfact(bv[j] - av[l]);
  for (int col : {a, b, e, c, d, f}) pre /= ctx.qfact(col);

  ScaledScalar sum;
  for (int s = s_lo; s <= s_hi; ++s) {
    ScaledScalar term = ctx.qfact(s + 1);
    for (int l = 0; l < 4; ++l) term /= ctx.qfact(s - av[l]);
    for (int j = 0; j < 3; ++j) term /= ctx.qfact(bv[j] - s);
    if (s % 2)
      sum -= term;
    else
      sum += term;
  }
  return pre * sum;
}

ScaledScalar sixj(const Param& p, int a, int b, int e, int c, int d, int f) {
  const ScaledScalar t = tet(p, a, b, e, c, d, f);
  const ScaledScalar th1 = theta(p, a, d, e);
  const ScaledScalar th2 = theta(p, c, b, e);
  if (th1.is_zero() || th2.is_zero())
    throw DegenerateError("sixj: vanishing theta denominator");
  const QuantumContext& ctx = context_for(p);
  const ScaledScalar val = t * ctx.qint(e + 1) / (th1 * th2);
  return e % 2 ? -val : val;
}

Est1Result check_est1(const Param& p, int a, int b, int e, int c, int d,
                      int f) {
  const ScaledScalar lhs = abs(tet(p, a, b, e, c, d, f));
  const QuantumContext& ctx = context_for(p);
  const ScaledScalar num = abs(theta(p, b, c, e) * theta(p, a, d, e) *
                               theta(p, a, b, f) * theta(p, c, d, f));
  const ScaledScalar den = abs(ctx.qint(e + 1) * ctx.qint(f + 1));
  const ScaledScalar rhs = sqrt(num / den);
  const bool holds = cmp_abs(lhs, rhs * ScaledScalar(1.0 + 1e-9)) <= 0;
  return {lhs, rhs, holds};
}

ScaledScalar est2_bound(const Param& p, int i, int k1, int k2, int k3) {
  if (p.regime() != Regime::GenericReal)
    throw RegimeError("est2_bound: needs the GenericReal regime");
  if (p.t().real() >= 1.0)
    throw DomainError("est2_bound: needs t in (0,1)");
  const int tris[4][3] = {{i, i, k1}, {i, i, k2}, {i, i, k3}, {k1, k2, k3}};
  for (const auto& t : tris)
    if (!admissible(p, t[0], t[1], t[2]))
      throw AdmissibilityError("est2_bound: inadmissible triple " +
                               triple_str(t[0], t[1], t[2]));
  const QuantumContext& ctx = context_for(p);
  const ScaledScalar c = sqrt(abs(theta(p, k1, k2, k3)) / ctx.qint(k3 + 1));
  return c * pow_int(ScaledScalar(p.t()), i);
}

}  // namespace skeinym
