#include "skeinym/surface_ym.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "skeinym/errors.hpp"
#include "skeinym/recoupling.hpp"

namespace skeinym {

namespace {

// Distinct colors and vertex color triples with multiplicities; the series
// term only depends on these.
struct SpineProfile {
  std::vector<std::pair<int, int>> edges;                    // (color, count)
  std::vector<std::pair<std::array<int, 3>, int>> vertices;  // sorted triple
  int maxk = 0;
  bool any_odd = false;
};

SpineProfile profile_spine(const ColoredSpine& s) {
  SpineProfile pr;
  std::map<int, int> ec;
  for (int c : s.edge_colors) {
    ++ec[c];
    pr.maxk = std::max(pr.maxk, c);
    if (c % 2) pr.any_odd = true;
  }
  pr.edges.assign(ec.begin(), ec.end());
  std::map<std::array<int, 3>, int> vc;
  for (const auto& v : s.vertices) {
    std::array<int, 3> t{s.edge_colors[v[0]], s.edge_colors[v[1]],
                         s.edge_colors[v[2]]};
    std::sort(t.begin(), t.end());
    ++vc[t];
  }
  pr.vertices.assign(vc.begin(), vc.end());
  return pr;
}

// theta/tet product at color i, by the plain recoupling evaluators.
ScaledScalar term_direct(const Param& p, const SpineProfile& pr, int i) {
  for (const auto& [k, cnt] : pr.edges)
    if (!admissible(p, i, i, k)) return {};
  ScaledScalar r(1.0);
  for (const auto& [k, cnt] : pr.edges) r *= pow_int(theta(p, i, i, k), -cnt);
  for (const auto& [t, cnt] : pr.vertices)
    r *= pow_int(tet(p, i, i, i, t[0], t[1], t[2]), cnt);
  return r;
}

// 2^lg as an exact scaled value (no double underflow/overflow).
ScaledScalar exp2_scaled(double lg) {
  const double fl = std::floor(lg);
  return ScaledScalar::from_parts(Complex(std::exp2(lg - fl - 1.0), 0.0),
                                  static_cast<std::int64_t>(fl) + 1);
}

double c2_value(std::int64_t i) {
  return static_cast<double>(i * (i + 2)) / 4.0;
}

// Streams summand_i = (-1)^i [i+1] ym_term(i) for i = 0, 1, 2, ...
// Small indices go through the plain evaluators.  From i_switch on, all
// factors are rewritten as ratios of quantum integers in the window
// [i-maxk, i+maxk+1], advanced by the recurrence [m+1] = [2][m] - [m-1],
// so the cost per term stays O(maxk) with O(1) new table entries.
//
// Localized forms (k even, i large enough, gamma_ab = (ka+kb-kc)/2):
//   theta(i,i,k)     = (-1)^(i+k/2) [k/2]!^2/[k]!
//                      * prod_{m=i+1}^{i+k/2+1} [m] / prod_{m=i-k/2+1}^i [m]
//   tet(i,i,i;k1..3) = P * sum_{d=k3/2}^{(k1+k2)/2} (-1)^(i+d)
//                      * prod_{m=i+d-sigma+1}^{i+d+1} [m] / D(d)
//     P    = prod_a [ka/2]!^2/[ka]! * [g12]! [g13]! [g23]!
//            / prod_a prod_{m=i-ka/2+1}^i [m]
//     D(d) = prod_a [d-ka/2]! * [(k1+k2)/2-d]! [(k1+k3)/2-d]! [(k2+k3)/2-d]!
class SeriesEvaluator {
 public:
  SeriesEvaluator(const Param& p, const ColoredSpine& s)
      : p_(p), ctx_(context_for(p)), pr_(profile_spine(s)) {
    direct_only_ = p_.regime() == Regime::RootOfUnity || pr_.any_odd;
    maxk_ = std::max(pr_.maxk, 1);
    i_switch_ = 2 * maxk_ + 4;
    if (direct_only_) return;

    two_ = ctx_.qint(2);
    for (const auto& [k, cnt] : pr_.edges) {
      ThetaPlan tp;
      tp.half = k / 2;
      tp.count = cnt;
      tp.pre = ctx_.qfact(k / 2) * ctx_.qfact(k / 2) / ctx_.qfact(k);
      thetas_.push_back(tp);
    }
    for (const auto& [t, cnt] : pr_.vertices) {
      const int k1 = t[0], k2 = t[1], k3 = t[2];
      TetPlan tp;
      tp.count = cnt;
      tp.sigma = (k1 + k2 + k3) / 2;
      tp.d_lo = k3 / 2;
      tp.d_hi = (k1 + k2) / 2;
      tp.halves = {k1 / 2, k2 / 2, k3 / 2};
      ScaledScalar pre(1.0);
      for (int k : {k1, k2, k3})
        pre *= ctx_.qfact(k / 2) * ctx_.qfact(k / 2) / ctx_.qfact(k);
      pre *= ctx_.qfact((k1 + k2 - k3) / 2) * ctx_.qfact((k1 + k3 - k2) / 2) *
             ctx_.qfact((k2 + k3 - k1) / 2);
      tp.pre = pre;
      for (int d = tp.d_lo; d <= tp.d_hi; ++d) {
        ScaledScalar den = ctx_.qfact(d - k1 / 2) * ctx_.qfact(d - k2 / 2) *
                           ctx_.qfact(d - k3 / 2) *
                           ctx_.qfact((k1 + k2) / 2 - d) *
                           ctx_.qfact((k1 + k3) / 2 - d) *
                           ctx_.qfact((k2 + k3) / 2 - d);
        tp.inv_den.push_back(ScaledScalar(1.0) / den);
      }
      tets_.push_back(tp);
    }
    win_.assign(2 * maxk_ + 4, ScaledScalar());
    up_.assign(maxk_ / 2 + 2, ScaledScalar());
    down_.assign(maxk_ / 2 + 1, ScaledScalar());
  }

  ScaledScalar summand(std::int64_t i) {
    if (direct_only_ || i < i_switch_) {
      const ScaledScalar t = term_direct(p_, pr_, static_cast<int>(i));
      if (t.is_zero()) return {};
      const ScaledScalar sm = ctx_.qint(i + 1) * t;
      return i % 2 ? -sm : sm;
    }
    advance(i);
    up_[0] = ScaledScalar(1.0);
    for (std::size_t h = 1; h < up_.size(); ++h)
      up_[h] = up_[h - 1] * qat(i + static_cast<std::int64_t>(h));
    down_[0] = ScaledScalar(1.0);
    for (std::size_t h = 1; h < down_.size(); ++h)
      down_[h] = down_[h - 1] * qat(i + 1 - static_cast<std::int64_t>(h));

    ScaledScalar term(1.0);
    for (const ThetaPlan& tp : thetas_) {
      ScaledScalar th = tp.pre * up_[tp.half + 1] / down_[tp.half];
      if ((i + tp.half) % 2) th = -th;
      term *= pow_int(th, -tp.count);
    }
    for (const TetPlan& tp : tets_) {
      ScaledScalar sum;
      for (int d = tp.d_lo; d <= tp.d_hi; ++d) {
        ScaledScalar t = tp.inv_den[d - tp.d_lo];
        for (std::int64_t m = i + d - tp.sigma + 1; m <= i + d + 1; ++m)
          t *= qat(m);
        if ((i + d) % 2)
          sum -= t;
        else
          sum += t;
      }
      ScaledScalar tet_val = tp.pre * sum;
      for (int h : tp.halves) tet_val /= down_[h];
      term *= pow_int(tet_val, tp.count);
    }
    ScaledScalar sm = qat(i + 1) * term;
    return i % 2 ? -sm : sm;
  }

 private:
  struct ThetaPlan {
    int half = 0;
    int count = 0;
    ScaledScalar pre;
  };
  struct TetPlan {
    int count = 0;
    int sigma = 0;
    int d_lo = 0;
    int d_hi = 0;
    std::array<int, 3> halves{};
    ScaledScalar pre;
    std::vector<ScaledScalar> inv_den;
  };

  const ScaledScalar& qat(std::int64_t m) const {
    return win_[static_cast<std::size_t>(m % win_.size())];
  }
  ScaledScalar& qat(std::int64_t m) {
    return win_[static_cast<std::size_t>(m % win_.size())];
  }

  void advance(std::int64_t i) {
    const std::int64_t lo = i - maxk_;
    const std::int64_t hi = i + maxk_ + 1;
    if (m_hi_ < lo) {
      for (std::int64_t m = lo; m <= hi; ++m) qat(m) = ctx_.qint(m);
    } else {
      for (std::int64_t m = m_hi_ + 1; m <= hi; ++m)
        qat(m) = two_ * qat(m - 1) - qat(m - 2);
    }
    m_hi_ = hi;
  }

  Param p_;
  const QuantumContext& ctx_;
  SpineProfile pr_;
  bool direct_only_ = false;
  int maxk_ = 1;
  std::int64_t i_switch_ = 0;
  ScaledScalar two_;
  std::vector<ThetaPlan> thetas_;
  std::vector<TetPlan> tets_;
  std::vector<ScaledScalar> win_, up_, down_;
  std::int64_t m_hi_ = -1;
};

double tail_to_double(const ScaledScalar& b) {
  double d = std::abs(b.to_complex());
  if (!b.is_zero()) d = std::max(d, 1e-300);
  return d;
}

}  // namespace

ScaledScalar ym_term(const Param& p, const ColoredSpine& s, int i) {
  validate_spine(s);
  if (i < 0) throw DomainError("ym_term: color must be >= 0");
  return term_direct(p, profile_spine(s), i);
}

ScaledScalar term_bound_constant(const Param& p, const ColoredSpine& s) {
  validate_spine(s);
  const QuantumContext& ctx = context_for(p);
  ScaledScalar c(1.0);
  for (const auto& v : s.vertices) {
    std::array<int, 3> t{s.edge_colors[v[0]], s.edge_colors[v[1]],
                         s.edge_colors[v[2]]};
    std::sort(t.begin(), t.end());
    c *= sqrt(abs(theta(p, t[0], t[1], t[2])) / abs(ctx.qint(t[2] + 1)));
  }
  return c;
}

SeriesResult ym_closed(const Param& p, const ColoredSpine& s, double tol,
                       std::int64_t max_terms, const TermObserver& observer) {
  validate_spine(s);
  if (tol <= 0) throw DomainError("ym_closed: tol must be positive");
  if (max_terms < 1) throw DomainError("ym_closed: max_terms must be >= 1");
  if (s.genus < 2)
    throw GenusError("ym_closed: the genus 1 series diverges; use the torus");
  if (p.regime() == Regime::RootOfUnity)
    throw RegimeError("ym_closed: finite regime, use ym_root");
  if (p.regime() == Regime::UnitCircle)
    throw DivergenceError("ym_closed: no term decay on the unit circle");

  SeriesResult res;
  res.regime = p.regime();
  const SpineProfile pr = profile_spine(s);
  if (pr.any_odd) {
    // An odd edge color makes every (i,i,k) inadmissible: the series is 0.
    res.converged = true;
    return res;
  }

  const int g = s.genus;
  const ScaledScalar C = term_bound_constant(p, s);
  const bool use_geom = !p.unit_modulus();
  const bool use_p = p.real_axis();

  double x = 0.0;
  ScaledScalar geom_c, xs, xs_pow;
  if (use_geom) {
    const double tau = p.tau();
    x = std::pow(tau, 4 * g - 4);
    const double kappa =
        std::abs(p.w() - 1.0 / p.w()) / (1.0 - std::pow(tau, 4.0));
    geom_c = C * pow_int(ScaledScalar(kappa * tau * tau), 2 * g - 1);
    xs = ScaledScalar(x);
    xs_pow = ScaledScalar(1.0);
  }

  // Certified bounds on sum_{i>N} |summand_i|, from the per-vertex estimate
  // |summand_i| <= C [i+1]^(2-2g):
  //   geometric   (i+1) G x^i with G = C (kappa tau^2)^(2g-1), x = tau^(4g-4)
  //   power law   C (i+1)^(2-2g) for real t, where [n] >= n
  const auto tail_at = [&](std::int64_t n) -> double {
    bool have = false;
    ScaledScalar best;
    if (use_geom) {
      const double poly =
          (static_cast<double>(n + 2) * (1.0 - x) + x) / ((1.0 - x) * (1.0 - x));
      best = geom_c * xs_pow * ScaledScalar(poly);
      have = true;
    }
    if (use_p && g >= 2) {
      const ScaledScalar pb =
          C * pow_int(ScaledScalar(static_cast<double>(n + 1)), 3 - 2 * g) /
          ScaledScalar(static_cast<double>(2 * g - 3));
      if (!have || cmp_abs(pb, best) < 0) best = pb;
      have = true;
    }
    if (!have) return std::numeric_limits<double>::infinity();
    return tail_to_double(best);
  };

  SeriesEvaluator ev(p, s);
  ScaledScalar sum;
  double tail = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < max_terms; ++i) {
    const ScaledScalar sm = ev.summand(i);
    sum += sm;
    if (use_geom) xs_pow *= xs;  // x^(i+1)
    if (observer || i < 128 || (i & 63) == 63) {
      tail = tail_at(i);
      if (observer) observer(i, sm.to_complex(), sum.to_complex(), tail);
      if (tail <= tol) {
        res.terms_used = i + 1;
        res.converged = true;
        break;
      }
    }
  }
  if (!res.converged) {
    res.terms_used = max_terms;
    tail = tail_at(max_terms - 1);
  }
  res.value = sum.to_complex();
  res.tail_bound = tail;
  return res;
}

Complex ym_partial_sum(const Param& p, const ColoredSpine& s,
                       std::int64_t n_terms) {
  validate_spine(s);
  if (n_terms < 0) throw DomainError("ym_partial_sum: n_terms must be >= 0");
  SeriesEvaluator ev(p, s);
  ScaledScalar sum;
  for (std::int64_t i = 0; i < n_terms; ++i) sum += ev.summand(i);
  return sum.to_complex();
}

Complex ym_root(const Param& p, const ColoredSpine& s) {
  validate_spine(s);
  if (p.regime() != Regime::RootOfUnity)
    throw RegimeError("ym_root: needs a root of unity parameter");
  const int r = p.root_order();
  for (int c : s.edge_colors)
    if (c > r - 2)
      throw AdmissibilityError("ym_root: spine color exceeds r-2");
  for (const auto& v : s.vertices)
    if (!admissible(p, s.edge_colors[v[0]], s.edge_colors[v[1]],
                    s.edge_colors[v[2]]))
      throw AdmissibilityError(
          "ym_root: vertex triple is not reduced-admissible");
  const SpineProfile pr = profile_spine(s);
  const QuantumContext& ctx = context_for(p);
  ScaledScalar sum;
  for (int i = 0; i <= r - 2; ++i) {
    const ScaledScalar t = term_direct(p, pr, i);
    if (t.is_zero()) continue;
    const ScaledScalar sm = ctx.qint(i + 1) * t;
    sum += i % 2 ? -sm : sm;
  }
  return sum.to_complex();
}

SeriesResult ym_witten(const ColoredSpine& s, double rho, double tol,
                       std::int64_t max_terms, const TermObserver& observer) {
  validate_spine(s);
  if (rho <= 0) throw DomainError("ym_witten: rho must be positive");
  if (tol <= 0) throw DomainError("ym_witten: tol must be positive");
  if (max_terms < 1) throw DomainError("ym_witten: max_terms must be >= 1");

  const Param p = Param::classical(-1);
  SeriesResult res;
  res.regime = Regime::Classical;
  const SpineProfile pr = profile_spine(s);
  if (pr.any_odd) {
    res.converged = true;
    return res;
  }

  const int g = s.genus;
  const ScaledScalar C = term_bound_constant(p, s);
  // Damped tail: b_i = C (i+1)^(2-2g) exp(-rho c2(i)) decays by at least
  // exp(-rho (2n+5)/4) per step past n, so sum_{i>n} b_i is geometric.
  const auto tail_at = [&](std::int64_t n) -> double {
    const double q = std::exp(-rho * static_cast<double>(2 * n + 5) / 4.0);
    const ScaledScalar b =
        C * pow_int(ScaledScalar(static_cast<double>(n + 2)), 2 - 2 * g) *
        exp2_scaled(-rho * c2_value(n + 1) / M_LN2);
    return tail_to_double(b / ScaledScalar(1.0 - q));
  };

  SeriesEvaluator ev(p, s);
  ScaledScalar sum;
  double tail = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < max_terms; ++i) {
    const ScaledScalar sm =
        ev.summand(i) * exp2_scaled(-rho * c2_value(i) / M_LN2);
    sum += sm;
    if (observer || i < 128 || (i & 63) == 63) {
      tail = tail_at(i);
      if (observer) observer(i, sm.to_complex(), sum.to_complex(), tail);
      if (tail <= tol) {
        res.terms_used = i + 1;
        res.converged = true;
        break;
      }
    }
  }
  if (!res.converged) {
    res.terms_used = max_terms;
    tail = tail_at(max_terms - 1);
  }
  res.value = sum.to_complex();
  res.tail_bound = tail;
  return res;
}

HandleslideResult handleslide_residual(const Param& p, const ColoredSpine& s,
                                       int edge_index, int n) {
  validate_spine(s);
  if (s.genus < 2)
    throw GenusError("handleslide_residual: genus must be >= 2");
  if (p.regime() != Regime::GenericReal)
    throw RegimeError("handleslide_residual: needs the GenericReal regime");
  if (edge_index < 0 ||
      static_cast<std::size_t>(edge_index) >= s.edge_colors.size())
    throw SpineError("handleslide_residual: edge index out of range");
  if (n < 0) throw DomainError("handleslide_residual: n must be >= 0");
  const int k = s.edge_colors[edge_index];
  if (k < 1)
    throw AdmissibilityError("handleslide_residual: edge color must be >= 1");

  const QuantumContext& ctx = context_for(p);
  const SpineProfile pr = profile_spine(s);
  const ScaledScalar coeff =
      n % 2 ? -ctx.qint(n + 1) : ctx.qint(n + 1);  // (-1)^n [n+1]

  const auto newpart = [&](int u, int v) -> ScaledScalar {
    if (!admissible(p, u, k, u) || !admissible(p, u, k - 1, v)) return {};
    return coeff / (theta(p, u, k, u) * theta(p, u, k - 1, v)) *
           tet(p, u, u, v, 1, k - 1, k) * tet(p, u, v, u, 1, k, k - 1);
  };

  const ScaledScalar resid = newpart(n, n + 1) * term_direct(p, pr, n) -
                             newpart(n + 1, n) * term_direct(p, pr, n + 1);

  const int g = s.genus;
  const ScaledScalar bound = ctx.qint(n + 2) * term_bound_constant(p, s) *
                             pow_int(ScaledScalar(p.t()), n * (4 * g - 2));
  if (cmp_abs(resid, bound * ScaledScalar(1.0 + 1e-9)) > 0)
    throw InternalError("handleslide_residual: residual exceeds its bound");

  HandleslideResult hr;
  hr.residual = resid.to_complex();
  hr.bound = std::abs(bound.to_complex());
  return hr;
}

ClassicalLimitResult classical_limit_check(const ColoredSpine& s,
                                           const std::vector<Complex>& ts,
                                           double tol) {
  validate_spine(s);
  if (ts.empty())
    throw DomainError("classical_limit_check: needs at least one parameter");
  if (tol <= 0) throw DomainError("classical_limit_check: tol must be > 0");
  const double inner = tol / 5.0;

  ClassicalLimitResult r;
  const int sign = ts.back().real() < 0 ? -1 : 1;
  const SeriesResult lim = ym_closed(Param::classical(sign), s, inner);
  r.limit = lim.value;
  bool all_converged = lim.converged;
  for (const Complex& t : ts) {
    const SeriesResult sr = ym_closed(Param::classify(t), s, inner);
    all_converged = all_converged && sr.converged;
    r.gaps.push_back(std::abs(sr.value - r.limit));
  }
  r.passed = all_converged && r.gaps.back() < tol;
  return r;
}

DivergenceReport divergence_probe(const Param& p, int genus,
                                  std::int64_t max_index) {
  if (p.regime() != Regime::UnitCircle)
    throw RegimeError("divergence_probe: needs a unit-circle parameter");
  if (genus < 2) throw GenusError("divergence_probe: genus must be >= 2");
  if (max_index < 0)
    throw DomainError("divergence_probe: max_index must be >= 0");
  const QuantumContext& ctx = context_for(p);
  DivergenceReport rep;
  for (std::int64_t i = 0; i <= max_index; ++i) {
    const double m = std::abs(ctx.qint(i + 1).to_complex());
    if (m == 0.0) continue;
    const double mag = std::pow(m, 2.0 - 2.0 * genus);
    if (mag > 0.5 && mag < 2.0) {
      rep.indices.push_back(i);
      rep.magnitudes.push_back(mag);
    }
  }
  return rep;
}

}  // namespace skeinym
