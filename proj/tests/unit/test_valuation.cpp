#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace toric;
using namespace fixtures;

namespace {
ToricValuation val(const std::shared_ptr<const Fan>& fan, RationalVector v) { return ToricValuation(*fan, std::move(v)); }
}  // namespace

TEST_CASE("log discrepancy: examples") {
  for (const auto& fan : {p2(), p112(), p1p1(), f2(), p3(), p1112()})
    for (const auto& r : fan->rays) CHECK(log_discrepancy(*fan, val(fan, to_rational(r))) == 1);
  CHECK(log_discrepancy(*p2(), val(p2(), rv({1, 2}))) == 3);
  CHECK(log_discrepancy(*p2(), val(p2(), rv({0, 0}))) == 0);
  // P(1,1,2): the cone over (0,1), (-1,-2) is singular
  CHECK(log_discrepancy(*p112(), val(p112(), rv({-1, -1}))) == 2);  // (0,1) + (-1,-2)
  CHECK(log_discrepancy(*p112(), val(p112(), rv({0, -1}))) == 1);   // ((1,0) + (-1,-2)) / 2
}

TEST_CASE("log discrepancy is positive and linear on cones") {
  std::mt19937_64 rng(3);
  for (const auto& fan : {p2(), p112(), p1p1(), f2(), p3(), p1p1p1(), p2p1(), p1112()}) {
    for (int s = 0; s < 20; ++s) {
      const auto a = random_interior(rng, *fan);
      const auto k = containing_cone(*fan, a);
      RationalVector b(fan->rank);
      for (auto i : fan->max_cones[*k]) b += Rational(s % 3, 2) * to_rational(fan->rays[i]);
      const Rational la = log_discrepancy(*fan, val(fan, a));
      CHECK(la > 0);
      CHECK(log_discrepancy(*fan, val(fan, a + b)) == la + log_discrepancy(*fan, val(fan, b)));
    }
  }
}

TEST_CASE("value on D_u: examples") {
  const auto d = divisor(p2(), qs({0, 0, 1}));
  CHECK(value_on_Du(d, val(p2(), rv({1, 0})), rv({1, 0})) == 1);
  CHECK(value_on_Du(d, val(p2(), rv({-1, -1})), rv({Rational(1, 3), Rational(1, 3)})) == Rational(1, 3));
  CHECK(value_on_Du(d, val(p2(), rv({0, 0})), rv({Rational(1, 2), 0})) == 0);
  CHECK_THROWS_AS(value_on_Du(d, val(p2(), rv({1, 0})), rv({2, 0})), ToricError);
}

TEST_CASE("value on D_u is nonnegative at vertices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_polygon(rng).divisor;
    for (const auto& u : polytope_of_divisor(d).vertices())
      for (const auto& r : d.fan().rays) CHECK(value_on_Du(d, ToricValuation(d.fan(), to_rational(r)), u) >= 0);
  }
}

TEST_CASE("valuation volume: examples") {
  CHECK(valuation_volume(*p2(), val(p2(), rv({1, 1}))) == 1);
  CHECK(valuation_volume(*p2(), val(p2(), rv({1, 2}))) == Rational(1, 2));
  CHECK(valuation_volume(*p3(), val(p3(), rv({1, 1, 1}))) == 1);
  CHECK(normalized_volume(*p2(), val(p2(), rv({1, 1}))) == 4);
  CHECK(normalized_volume(*p2(), val(p2(), rv({1, 2}))) == Rational(9, 2));
  CHECK(normalized_volume(*p2(), val(p2(), rv({2, 2}))) == 4);
  try {
    valuation_volume(*p2(), val(p2(), rv({1, 0})));
    FAIL("expected NotInteriorToMaximalCone");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::NotInteriorToMaximalCone);
  }
}

TEST_CASE("homogeneity of A, vol and normalized volume") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(1, 12);
  for (const auto& fan : {p2(), p112(), p1p1(), p3(), p2p1(), p1112()}) {
    for (int s = 0; s < 10; ++s) {
      const auto v = random_interior(rng, *fan);
      const Rational t(d(rng), d(rng));
      const auto tv = t * v;
      CHECK(log_discrepancy(*fan, val(fan, tv)) == t * log_discrepancy(*fan, val(fan, v)));
      Rational t_n = 1;
      for (std::size_t k = 0; k < fan->rank; ++k) t_n *= t;
      CHECK(valuation_volume(*fan, val(fan, tv)) * t_n == valuation_volume(*fan, val(fan, v)));
      CHECK(normalized_volume(*fan, val(fan, tv)) == normalized_volume(*fan, val(fan, v)));
    }
  }
}

// In the smooth cone spanned by the standard basis, sigma^dual is the positive
// orthant and the valuation ideal colength is a monomial count. The relative
// error decays like n (w_1 + ... + w_n) / (2 lambda), so weights are kept small
// and lambda grows with the rank.
TEST_CASE("valuation volume matches the colength count") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> w(1, 4);
  for (int s = 0; s < 12; ++s) {
    const auto fan = s % 2 == 0 ? p2() : p3();
    const long lambda = fan->rank == 2 ? 100 : 400;
    std::vector<long> weights(fan->rank);
    do {
      for (auto& x : weights) x = w(rng);
    } while (std::accumulate(weights.begin(), weights.end(), 0L) > 5);
    RationalVector v(fan->rank);
    for (std::size_t i = 0; i < fan->rank; ++i) v[i] = weights[i];
    const double exact = valuation_volume(*fan, val(fan, v)).convert_to<double>();
    double n_fact = 1, lam_n = 1;
    for (std::size_t k = 1; k <= fan->rank; ++k) {
      n_fact *= static_cast<double>(k);
      lam_n *= lambda;
    }
    const double estimate = static_cast<double>(oracles::colength(weights, lambda)) * n_fact / lam_n;
    CAPTURE(to_string(v));
    CHECK(std::abs(estimate - exact) <= 0.05 * exact);
  }
}
