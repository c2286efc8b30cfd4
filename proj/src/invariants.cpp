#include "toric/invariants.hpp"

#include "divisor_cache.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

void require_nontrivial(const ToricValuation& v) {
  if (v.is_trivial()) throw ToricError(ErrorKind::TrivialValuation, "S and T are undefined for the trivial valuation");
}

Rational power(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

const RationalVector& cached_barycenter(const ToricDivisor& d) {
  return d.cache().barycenter.get([&] { return barycenter(polytope_of_divisor(d)); });
}

Rational AtomicMeasure::total_mass() const {
  Rational s = 0;
  for (const auto& [loc, w] : atoms) s += w;
  return s;
}

Rational AtomicMeasure::moment(unsigned k) const {
  Rational s = 0;
  for (const auto& [loc, w] : atoms) s += w * power(loc, k);
  return s;
}

Rational SliceVolumeFunction::limit_moment(unsigned k) const {
  std::vector<Rational> tk(k + 1);
  tk[k] = 1;
  const Polynomial monomial(std::move(tk));
  Rational total = 0;
  const auto& bp = G.breakpoints();
  for (std::size_t j = 0; j < G.pieces().size(); ++j) {
    const Polynomial integrand = monomial * G.pieces()[j].derivative();
    const Polynomial anti = integrand.antiderivative();
    total -= anti(bp[j + 1]) - anti(bp[j]);
  }
  return total;
}

Rational S_of(const ToricDivisor& d, const ToricValuation& v) {
  require_nontrivial(v);
  const Rational psi = support_function(d, v.vector());
  return dot(cached_barycenter(d), v.vector()) - psi;
}

Rational T_of(const ToricDivisor& d, const ToricValuation& v) {
  require_nontrivial(v);
  const Rational psi = support_function(d, v.vector());
  const auto& verts = polytope_of_divisor(d).vertices();
  Rational best = dot(verts.front(), v.vector());
  for (const auto& u : verts) best = std::max(best, dot(u, v.vector()));
  return best - psi;
}

RationalVector lattice_barycenter(const ToricDivisor& d, std::int64_t m) {
  require_ample(d);
  const auto pts = lattice_points(polytope_of_divisor(d), m);
  RationalVector sum(d.rank());
  for (const auto& p : pts) sum += to_rational(p);
  return (1 / (Rational(m) * Rational(pts.size()))) * sum;
}

Rational Sm_of(const ToricDivisor& d, const ToricValuation& v, std::int64_t m) {
  require_nontrivial(v);
  return dot(lattice_barycenter(d, m), v.vector()) - support_function(d, v.vector());
}

Rational Tm_of(const ToricDivisor& d, const ToricValuation& v, std::int64_t m) {
  require_nontrivial(v);
  require_ample(d);
  const auto pts = lattice_points(polytope_of_divisor(d), m);
  Rational best = dot(v.vector(), pts.front());
  for (const auto& p : pts) best = std::max(best, dot(v.vector(), p));
  return best / Rational(m) - support_function(d, v.vector());
}

JumpingSpectrum jumping_spectrum(const ToricDivisor& d, const ToricValuation& v, std::int64_t m) {
  require_ample(d);
  const Rational shift = Rational(m) * support_function(d, v.vector());
  JumpingSpectrum spec;
  spec.m = m;
  for (const auto& p : lattice_points(polytope_of_divisor(d), m)) spec.values.push_back(dot(v.vector(), p) - shift);
  std::sort(spec.values.begin(), spec.values.end());
  spec.count = spec.values.size();
  return spec;
}

AtomicMeasure mu_m(const ToricDivisor& d, const ToricValuation& v, std::int64_t m) {
  const auto spec = jumping_spectrum(d, v, m);
  const Rational weight = 1 / power(Rational(m), static_cast<unsigned>(d.rank()));
  std::map<Rational, Rational> merged;
  for (const auto& a : spec.values) merged[a / Rational(m)] += weight;
  AtomicMeasure mu;
  mu.atoms.assign(merged.begin(), merged.end());
  return mu;
}

SliceVolumeFunction slice_volume_function(const ToricDivisor& d, const ToricValuation& v) {
  require_nontrivial(v);
  const Polytope p = polytope_of_divisor(d);
  const Rational psi = support_function(d, v.vector());
  const std::size_t n = d.rank();

  std::vector<Rational> breaks;
  for (const auto& u : p.vertices()) breaks.push_back(dot(u, v.vector()) - psi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto [w, scale] = primitive_decomposition(v.vector());
  auto slice_volume = [&](const Rational& t) {
    // <u, v> - psi >= t  <=>  <u, w> >= (t + psi) / scale
    return volume(intersect(p, HalfSpace{w, -(t + psi) / scale}));
  };

  std::vector<Polynomial> pieces;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const Rational& a = breaks[j];
    const Rational step = (breaks[j + 1] - a) / Rational(n + 2);
    std::vector<std::pair<Rational, Rational>> samples;
    for (std::size_t k = 1; k <= n + 1; ++k) {
      const Rational t = a + Rational(k) * step;
      samples.emplace_back(t, slice_volume(t));
    }
    Polynomial piece = interpolate_piece(samples, n);
    const Rational probe = a + step / 2;
    if (piece(probe) != slice_volume(probe))
      throw ToricError(ErrorKind::InterpolationMismatch,
                       "slice volume is not polynomial on [" + to_string(a) + ", " + to_string(breaks[j + 1]) + "]");
    pieces.push_back(std::move(piece));
  }

  SliceVolumeFunction f{PiecewisePolynomial(breaks, std::move(pieces))};
  if (!f.G.is_continuous())
    throw ToricError(ErrorKind::InterpolationMismatch, "slice volume pieces disagree at a breakpoint");
  if (f.G(f.G.lower()) != volume(p))
    throw ToricError(ErrorKind::InterpolationMismatch, "G(0) differs from vol(P)");
  if (f.G(f.G.upper()) != 0) throw ToricError(ErrorKind::InterpolationMismatch, "G(T) is not 0");
  return f;
}

Rational S_via_integral(const ToricDivisor& d, const ToricValuation& v) {
  const auto f = slice_volume_function(d, v);
  return integrate(f.G, 0, f.T()) / volume(polytope_of_divisor(d));
}

}  // namespace toric
