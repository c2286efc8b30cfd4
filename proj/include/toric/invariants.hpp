#pragma once

#include "toric/piecewise.hpp"
#include "toric/valuation.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace toric {

/// Jumping numbers of the filtration of H^0(X, mL) induced by v:
/// the multiset {<u, v> - m psi(v) : u in mP cap M}, sorted.
struct JumpingSpectrum {
  std::int64_t m = 0;
  std::vector<Rational> values;
  std::size_t count = 0;  // N_m = |mP cap M|
};

/// Finite positive measure as sorted (location, weight) atoms.
struct AtomicMeasure {
  std::vector<std::pair<Rational, Rational>> atoms;

  Rational total_mass() const;
  /// sum of weight * location^k
  Rational moment(unsigned k) const;
};

/// t -> vol(L; v >= t) / n!, the Euclidean volume of {u in P : <u,v> - psi(v) >= t}.
struct SliceVolumeFunction {
  PiecewisePolynomial G;

  const Rational& T() const { return G.upper(); }
  /// integral of t^k against the limit measure -G'(t) dt on [0, T]
  Rational limit_moment(unsigned k) const;
};

Rational S_of(const ToricDivisor& d, const ToricValuation& v);
Rational T_of(const ToricDivisor& d, const ToricValuation& v);

/// Barycenter of P cap (1/m) M.
RationalVector lattice_barycenter(const ToricDivisor& d, std::int64_t m);

Rational Sm_of(const ToricDivisor& d, const ToricValuation& v, std::int64_t m);
Rational Tm_of(const ToricDivisor& d, const ToricValuation& v, std::int64_t m);

JumpingSpectrum jumping_spectrum(const ToricDivisor& d, const ToricValuation& v, std::int64_t m);

/// mu_m = m^{-n} sum_j delta_{a_{m,j} / m}, equal atoms merged.
AtomicMeasure mu_m(const ToricDivisor& d, const ToricValuation& v, std::int64_t m);

/// Exact piecewise-polynomial slice volume. Breakpoints are the distinct
/// values <u, v> - psi(v) over the vertices of P; each piece is interpolated
/// through n + 1 interior slice volumes and then checked at one more point and
/// for continuity (InterpolationMismatch on failure).
SliceVolumeFunction slice_volume_function(const ToricDivisor& d, const ToricValuation& v);

/// vol(P)^{-1} * integral of G over [0, T(v)].
Rational S_via_integral(const ToricDivisor& d, const ToricValuation& v);

}  // namespace toric
