#pragma once

#include "toric/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

/// A log canonical threshold; std::nullopt stands for +infinity (D_u = 0).
using ExtendedRational = std::optional<Rational>;

/// One exact inequality check lhs <= rhs.
struct Certificate {
  std::string name;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs
  bool pass = false;
};

Certificate make_certificate(std::string name, Rational lhs, Rational rhs);

struct VertexLct {
  RationalVector vertex;
  ExtendedRational lct;
};

struct AlphaResult {
  Rational alpha;
  RationalVector witness_vertex;
  std::size_t witness_ray = 0;
  std::vector<VertexLct> per_vertex_lct;
  Rational alpha_via_rays;  // min_i A(v_i) / T(v_i)
};

struct DeltaResult {
  Rational delta;
  RationalVector barycenter;
  std::vector<std::size_t> delta_rays;  // every ray attaining the minimum, ascending
  Rational delta_via_rays;              // min_i A(v_i) / S(v_i)
};

struct ThresholdReport {
  AlphaResult alpha;
  DeltaResult delta;
  std::vector<Certificate> certificates;
};

/// lct(D_u) = min over i with <u, v_i> + b_i > 0 of 1 / (<u, v_i> + b_i).
ExtendedRational lct_Du(const ToricDivisor& d, const RationalVector& u);

/// alpha(L) as the minimum of lct(D_u) over the vertices of P, cross-checked
/// against min_i A(v_i)/T(v_i). A mismatch throws CertificateViolation.
AlphaResult alpha(const ToricDivisor& d);

/// delta(L) = lct(D_ubar) at the barycenter, cross-checked against
/// min_i A(v_i)/S(v_i).
DeltaResult delta(const ToricDivisor& d);

/// Torus-invariant restriction of alpha_m: the minimum of lct(D_u) over
/// u in P cap (1/m) M. Since each coefficient of D_u is affine in u, this is
/// the same minimum as over the vertices of conv(P cap (1/m) M).
Rational toric_alpha_m(const ToricDivisor& d, std::int64_t m);

/// min_i 1 / (<ubar_m, v_i> + b_i), i.e. min over toric v of A(v)/S_m(v).
Rational toric_delta_m(const ToricDivisor& d, std::int64_t m);

/// Checks alpha <= delta <= (n+1) alpha, delta >= (n+1)/n alpha and, for
/// every sample valuation, T/(n+1) <= S <= T and S <= n/(n+1) T.
/// Any failure throws CertificateViolation carrying the full dump.
std::vector<Certificate> certify_inequalities(const ToricDivisor& d, const AlphaResult& a, const DeltaResult& dl,
                                              const std::vector<ToricValuation>& samples);

/// alpha, delta and certificates over the rays plus `extra_samples`.
ThresholdReport threshold_report(const ToricDivisor& d, const std::vector<ToricValuation>& extra_samples = {});

}  // namespace toric
