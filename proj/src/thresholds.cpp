#include "toric/thresholds.hpp"

#include "divisor_cache.hpp"

#include <sstream>

namespace toric {

Certificate make_certificate(std::string name, Rational lhs, Rational rhs) {
  Certificate c{std::move(name), lhs, rhs, rhs - lhs, false};
  c.pass = c.slack >= 0;
  return c;
}

namespace {

// Minimum of 1/c over positive coefficients c, with the index attaining it.
struct LctMin {
  ExtendedRational value;
  std::size_t index = 0;
};

LctMin lct_of_coefficients(const std::vector<Rational>& coeffs) {
  LctMin best;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] <= 0) continue;
    const Rational candidate = 1 / coeffs[i];
    if (!best.value || candidate < *best.value) best = {candidate, i};
  }
  return best;
}

std::vector<ToricValuation> ray_valuations(const Fan& fan) {
  std::vector<ToricValuation> out;
  for (const auto& r : fan.rays) out.emplace_back(fan, to_rational(r));
  return out;
}

}  // namespace

ExtendedRational lct_Du(const ToricDivisor& d, const RationalVector& u) {
  return lct_of_coefficients(divisor_Du(d, u)).value;
}

AlphaResult alpha(const ToricDivisor& d) {
  require_ample(d);
  AlphaResult res;
  bool have = false;
  for (const auto& u : polytope_of_divisor(d).vertices()) {
    const auto best = lct_of_coefficients(divisor_Du(d, u));
    res.per_vertex_lct.push_back({u, best.value});
    if (best.value && (!have || *best.value < res.alpha)) {
      res.alpha = *best.value;
      res.witness_vertex = u;
      res.witness_ray = best.index;
      have = true;
    }
  }
  if (!have) throw ToricError(ErrorKind::NotAmple, "every D_u vanishes; P is a point");

  // Independent route through log discrepancies and widths.
  bool first = true;
  for (const auto& v : ray_valuations(d.fan())) {
    const Rational ratio = log_discrepancy(d.fan(), v) / T_of(d, v);
    if (first || ratio < res.alpha_via_rays) res.alpha_via_rays = ratio;
    first = false;
  }
  if (res.alpha_via_rays != res.alpha)
    throw ToricError(ErrorKind::CertificateViolation, "alpha via vertices " + to_string(res.alpha) +
                                                          " differs from min A/T over rays " + to_string(res.alpha_via_rays));
  return res;
}

DeltaResult delta(const ToricDivisor& d) {
  require_ample(d);
  DeltaResult res;
  res.barycenter = cached_barycenter(d);
  const auto coeffs = divisor_Du(d, res.barycenter);
  const auto best = lct_of_coefficients(coeffs);
  if (!best.value) throw ToricError(ErrorKind::NotAmple, "D at the barycenter vanishes");
  res.delta = *best.value;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] > 0 && 1 / coeffs[i] == res.delta) res.delta_rays.push_back(i);

  bool first = true;
  for (const auto& v : ray_valuations(d.fan())) {
    const Rational ratio = log_discrepancy(d.fan(), v) / S_of(d, v);
    if (first || ratio < res.delta_via_rays) res.delta_via_rays = ratio;
    first = false;
  }
  if (res.delta_via_rays != res.delta)
    throw ToricError(ErrorKind::CertificateViolation, "delta via barycenter " + to_string(res.delta) +
                                                          " differs from min A/S over rays " + to_string(res.delta_via_rays));
  return res;
}

Rational toric_alpha_m(const ToricDivisor& d, std::int64_t m) {
  require_ample(d);
  const Rational mq(m);
  ExtendedRational best;
  for (const auto& p : lattice_points(polytope_of_divisor(d), m)) {
    RationalVector u = (1 / mq) * to_rational(p);
    const auto lct = lct_of_coefficients(divisor_Du(d, u)).value;
    if (lct && (!best || *lct < *best)) best = lct;
  }
  if (!best) throw ToricError(ErrorKind::NotAmple, "every invariant member of |mL| is zero");
  return *best;
}

Rational toric_delta_m(const ToricDivisor& d, std::int64_t m) {
  const auto best = lct_of_coefficients(divisor_Du(d, lattice_barycenter(d, m))).value;
  if (!best) throw ToricError(ErrorKind::NotAmple, "D at the lattice barycenter vanishes");
  return *best;
}

std::vector<Certificate> certify_inequalities(const ToricDivisor& d, const AlphaResult& a, const DeltaResult& dl,
                                              const std::vector<ToricValuation>& samples) {
  const Rational n(d.rank());
  std::vector<Certificate> certs;
  certs.push_back(make_certificate("alpha <= delta", a.alpha, dl.delta));
  certs.push_back(make_certificate("delta <= (n+1)*alpha", dl.delta, (n + 1) * a.alpha));
  certs.push_back(make_certificate("(n+1)/n*alpha <= delta", (n + 1) / n * a.alpha, dl.delta));
  for (const auto& v : samples) {
    if (v.is_trivial()) continue;
    const Rational s = S_of(d, v);
    const Rational t = T_of(d, v);
    const std::string tag = " [v=" + to_string(v.vector()) + "]";
    certs.push_back(make_certificate("T/(n+1) <= S" + tag, t / (n + 1), s));
    certs.push_back(make_certificate("S <= T" + tag, s, t));
    certs.push_back(make_certificate("S <= n/(n+1)*T" + tag, s, n / (n + 1) * t));
  }
  std::ostringstream dump;
  bool failed = false;
  for (const auto& c : certs) {
    if (c.pass) continue;
    failed = true;
    dump << c.name << ": lhs " << c.lhs << " > rhs " << c.rhs << "; ";
  }
  if (failed) {
    dump << "divisor coefficients:";
    for (const auto& b : d.coeffs()) dump << " " << b;
    throw ToricError(ErrorKind::CertificateViolation, dump.str());
  }
  return certs;
}

ThresholdReport threshold_report(const ToricDivisor& d, const std::vector<ToricValuation>& extra_samples) {
  ThresholdReport report{alpha(d), delta(d), {}};
  auto samples = ray_valuations(d.fan());
  samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());
  report.certificates = certify_inequalities(d, report.alpha, report.delta, samples);
  return report;
}

}  // namespace toric
