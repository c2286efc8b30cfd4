#include "toric/kstability.hpp"

#include "divisor_cache.hpp"

namespace toric {

namespace {

Rational power(const Rational& x, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

void require_q_fano(const std::shared_ptr<const Fan>& fan) {
  auto verdict = is_q_fano(fan);
  if (!verdict.q_fano) throw ToricError(ErrorKind::NotQFano, verdict.reason);
}

bool k_semistable(const std::shared_ptr<const Fan>& fan) {
  require_q_fano(fan);
  return cached_barycenter(anticanonical(fan)).is_zero();
}

DeltaFano delta_fano(const std::shared_ptr<const Fan>& fan) {
  require_q_fano(fan);
  const auto k = anticanonical(fan);
  const RationalVector ubar = barycenter(polytope_of_divisor(k));
  DeltaFano out;
  if (ubar.is_zero()) {
    out.delta = 1;
  } else {
    std::optional<Rational> c;
    for (const auto& r : fan->rays) {
      const Rational s = dot(ubar, r);
      if (s > 0 && (!c || 1 / s < *c)) c = 1 / s;
    }
    if (!c)
      throw ToricError(ErrorKind::CertificateViolation,
                       "nonzero barycenter pairs nonpositively with every ray; the fan cannot be complete");
    out.c = c;
    out.delta = *c / (1 + *c);
  }
  const Rational via_lct = delta(k).delta;
  if (via_lct != out.delta)
    throw ToricError(ErrorKind::CertificateViolation,
                     "c/(1+c) formula gives " + to_string(out.delta) + " but lct at the barycenter gives " + to_string(via_lct));
  return out;
}

bool uniform_k_stable(const std::shared_ptr<const Fan>& fan) {
  const bool uniform = delta_fano(fan).delta > 1;
  if (uniform)
    throw ToricError(ErrorKind::CertificateViolation, "toric Q-Fano with delta(-K_X) > 1; expected delta <= 1 always");
  return uniform;
}

AlphaCriterion alpha_criterion(const std::shared_ptr<const Fan>& fan) {
  require_q_fano(fan);
  const auto k = anticanonical(fan);
  const Rational n(fan->rank);
  AlphaCriterion crit;
  crit.alpha = alpha(k).alpha;
  crit.threshold = n / (n + 1);
  crit.fires_semistable = crit.alpha >= crit.threshold;
  crit.fires_uniform = crit.alpha > crit.threshold;
  const Rational dl = delta_fano(fan).delta;
  if (crit.fires_semistable && !(dl >= 1)) crit.holds = false;
  if (crit.fires_uniform && !(dl > 1)) crit.holds = false;
  if (!crit.holds)
    throw ToricError(ErrorKind::CertificateViolation, "alpha = " + to_string(crit.alpha) + " >= n/(n+1) but delta = " +
                                                          to_string(dl) + " does not give the expected stability");
  return crit;
}

TheoremDCheck theorem_d_bound(const ToricDivisor& d, const ToricValuation& v) {
  const std::size_t n = d.rank();
  TheoremDCheck check;
  check.valuation = v.vector();
  check.lhs = factorial(n) * volume(polytope_of_divisor(d));
  const Rational nhat = normalized_volume(d.fan(), v);
  const Rational dl = delta(d).delta;
  check.rhs = power(Rational(n + 1) / Rational(n), n) / power(dl, n) * nhat;
  check.pass = check.lhs <= check.rhs;
  return check;
}

KStabilityReport kstability_report(const std::shared_ptr<const Fan>& fan, const std::vector<RationalVector>& extra) {
  require_q_fano(fan);
  const auto k = anticanonical(fan);
  KStabilityReport rep;
  rep.is_q_fano = true;
  rep.barycenter = cached_barycenter(k);
  rep.k_semistable = k_semistable(fan);
  const auto df = delta_fano(fan);
  rep.delta = df.delta;
  rep.c = df.c;
  rep.uniformly_k_stable = uniform_k_stable(fan);
  const auto crit = alpha_criterion(fan);
  rep.alpha = crit.alpha;
  rep.alpha_criterion_fires = crit.fires_semistable;

  if (rep.k_semistable != (rep.delta >= 1) || rep.k_semistable != (rep.delta == 1))
    throw ToricError(ErrorKind::CertificateViolation, "barycenter test and delta(-K_X) disagree on semistability");

  std::vector<RationalVector> points;
  for (const auto& cone : fan->max_cones) {
    RationalVector sum(fan->rank);
    for (auto i : cone) sum += to_rational(fan->rays[i]);
    points.push_back(std::move(sum));
  }
  points.insert(points.end(), extra.begin(), extra.end());
  for (const auto& p : points) {
    ToricValuation v(*fan, p);
    if (v.is_trivial() || !cone_interior_contains(*fan, v.containing_cone(), p)) continue;
    auto check = theorem_d_bound(k, v);
    if (!check.pass)
      throw ToricError(ErrorKind::CertificateViolation, "volume bound fails at v = " + to_string(p) + ": " +
                                                            to_string(check.lhs) + " > " + to_string(check.rhs));
    rep.theorem_d_checks.push_back(std::move(check));
  }
  return rep;
}

}  // namespace toric
