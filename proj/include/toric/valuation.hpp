#pragma once

#include "toric/toricvar.hpp"

namespace toric {

/// A toric valuation v in N_Q, together with a maximal cone containing it.
class ToricValuation {
 public:
  ToricValuation(const Fan& fan, RationalVector vector);

  const RationalVector& vector() const { return vector_; }
  std::size_t containing_cone() const { return cone_; }
  bool is_trivial() const { return vector_.is_zero(); }

 private:
  RationalVector vector_;
  std::size_t cone_;
};

/// The linear form a(sigma) with <a(sigma), v_i> = 1 on the rays of a maximal
/// cone. Throws NotQGorenstein.
RationalVector log_discrepancy_form(const Fan& fan, std::size_t cone);

/// A(v): linear on cones with A(v_i) = 1. Returns 0 for the trivial valuation.
Rational log_discrepancy(const Fan& fan, const ToricValuation& v);

/// v(D_u) = <u, v> - psi(v).
Rational value_on_Du(const ToricDivisor& d, const ToricValuation& v, const RationalVector& u);

/// vol(v) = n! * vol{u in sigma^dual : <u, v> <= 1} for v interior to a
/// maximal cone sigma. Throws NotInteriorToMaximalCone otherwise.
Rational valuation_volume(const Fan& fan, const ToricValuation& v);

/// A(v)^n * vol(v).
Rational normalized_volume(const Fan& fan, const ToricValuation& v);

Rational factorial(std::size_t n);

}  // namespace toric
