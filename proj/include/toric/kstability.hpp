#pragma once

#include "toric/thresholds.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace toric {

struct DeltaFano {
  Rational delta;
  std::optional<Rational> c;  // greatest c with -c*ubar in P_{-K}; absent when ubar = 0
};

struct AlphaCriterion {
  Rational alpha;
  Rational threshold;            // n / (n+1)
  bool fires_semistable = false;  // alpha >= n/(n+1)
  bool fires_uniform = false;     // alpha >  n/(n+1)
  bool holds = true;              // fired hypotheses have their conclusions
};

struct TheoremDCheck {
  RationalVector valuation;
  Rational lhs;  // vol(L) = n! vol(P)
  Rational rhs;  // ((n+1)/n)^n delta^{-n} normalized volume
  bool pass = false;
};

struct KStabilityReport {
  bool is_q_fano = false;
  RationalVector barycenter;
  bool k_semistable = false;
  bool uniformly_k_stable = false;
  Rational delta;
  std::optional<Rational> c;
  Rational alpha;
  bool alpha_criterion_fires = false;
  std::vector<TheoremDCheck> theorem_d_checks;
};

/// Throws NotQFano with the reason when -K_X is not an ample Q-Cartier divisor.
void require_q_fano(const std::shared_ptr<const Fan>& fan);

/// Barycenter of P_{-K} equals the origin.
bool k_semistable(const std::shared_ptr<const Fan>& fan);

/// delta(-K_X) = 1 when ubar = 0, else c / (1 + c) with
/// c = min over <ubar, v_i> > 0 of 1 / <ubar, v_i>. Must agree with delta()
/// on the anticanonical divisor (CertificateViolation otherwise).
DeltaFano delta_fano(const std::shared_ptr<const Fan>& fan);

/// delta(-K_X) > 1. Never true for a toric Q-Fano; a true result is reported
/// as CertificateViolation.
bool uniform_k_stable(const std::shared_ptr<const Fan>& fan);

AlphaCriterion alpha_criterion(const std::shared_ptr<const Fan>& fan);

/// vol(L) <= ((n+1)/n)^n delta(L)^{-n} vol^(v) for v interior to a maximal cone.
TheoremDCheck theorem_d_bound(const ToricDivisor& d, const ToricValuation& v);

/// Full pipeline. The volume bound is checked at the sum of the rays of every maximal
/// cone and at each interior valuation in `extra`.
KStabilityReport kstability_report(const std::shared_ptr<const Fan>& fan, const std::vector<RationalVector>& extra = {});

}  // namespace toric
