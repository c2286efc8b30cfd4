#include "toric/valuation.hpp"

#include "toric/linalg.hpp"

namespace toric {

ToricValuation::ToricValuation(const Fan& fan, RationalVector vector) : vector_(std::move(vector)) {
  if (vector_.size() != fan.rank) throw ToricError(ErrorKind::Parse, "valuation has wrong length");
  auto cone = toric::containing_cone(fan, vector_);
  if (!cone) throw ToricError(ErrorKind::WallCountViolation, to_string(vector_) + " lies in no maximal cone");
  cone_ = *cone;
}

RationalVector log_discrepancy_form(const Fan& fan, std::size_t cone) {
  linalg::Matrix rows;
  for (auto i : fan.max_cones.at(cone)) rows.push_back(to_rational(fan.rays[i]));
  std::vector<Rational> ones(rows.size(), Rational(1));
  auto res = linalg::solve(std::move(rows), std::move(ones));
  if (res.status != linalg::SolveStatus::Unique)
    throw ToricError(ErrorKind::NotQGorenstein, "K_X is not Q-Cartier on cone " + std::to_string(cone));
  return res.solution;
}

Rational log_discrepancy(const Fan& fan, const ToricValuation& v) {
  if (v.is_trivial()) return 0;
  return dot(log_discrepancy_form(fan, v.containing_cone()), v.vector());
}

Rational value_on_Du(const ToricDivisor& d, const ToricValuation& v, const RationalVector& u) {
  require_ample(d);
  divisor_Du(d, u);  // membership check
  return dot(u, v.vector()) - support_function(d, v.vector());
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational valuation_volume(const Fan& fan, const ToricValuation& v) {
  std::optional<std::size_t> cone;
  for (std::size_t k = 0; k < fan.max_cones.size() && !cone; ++k)
    if (cone_interior_contains(fan, k, v.vector())) cone = k;
  if (!cone)
    throw ToricError(ErrorKind::NotInteriorToMaximalCone,
                     to_string(v.vector()) + " is not interior to a maximal cone; its center is not a closed point");

  // {u in sigma^dual : <u, v> <= 1}
  std::vector<HalfSpace> hs;
  for (auto i : fan.max_cones[*cone]) hs.push_back({fan.rays[i], 0});
  auto [w, scale] = primitive_decomposition(v.vector());
  hs.push_back({-w, 1 / scale});
  return factorial(fan.rank) * volume(Polytope(fan.rank, std::move(hs)));
}

Rational normalized_volume(const Fan& fan, const ToricValuation& v) {
  const Rational a = log_discrepancy(fan, v);
  Rational power = 1;
  for (std::size_t k = 0; k < fan.rank; ++k) power *= a;
  return power * valuation_volume(fan, v);
}

}  // namespace toric
