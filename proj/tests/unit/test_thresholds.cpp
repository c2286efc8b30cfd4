#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using namespace fixtures;

namespace {

ToricDivisor p2_O1() { return divisor(p2(), qs({0, 0, 1})); }

ToricDivisor scaled(const ToricDivisor& d, const Rational& r) {
  auto b = d.coeffs();
  for (auto& x : b) x *= r;
  return ToricDivisor(d.fan_ptr(), b);
}

// b_i - <w, v_i>: the same polytope translated by w
ToricDivisor translated(const ToricDivisor& d, const LatticeVector& w) {
  auto b = d.coeffs();
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= Rational(dot(w, d.fan().rays[i]));
  return ToricDivisor(d.fan_ptr(), b);
}

// alpha and delta from first principles: vertices of the oracle's hull and the
// shoelace centroid, with lct = min_i 1 / (<u, v_i> + b_i).
struct Brute {
  Rational alpha, delta;
};

Rational lct_at(const ToricDivisor& d, const Rational& x, const Rational& y) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < d.fan().rays.size(); ++i) {
    const Rational c = x * Rational(d.fan().rays[i][0]) + y * Rational(d.fan().rays[i][1]) + d.coeffs()[i];
    REQUIRE(c >= 0);
    if (c > 0 && (!best || 1 / c < *best)) best = 1 / c;
  }
  REQUIRE(best);
  return *best;
}

Brute brute(const RandomPolygon& inst) {
  const auto q = oracles::to_q(inst.hull);
  Brute b;
  b.alpha = lct_at(inst.divisor, q[0].x, q[0].y);
  for (const auto& p : q) b.alpha = std::min(b.alpha, lct_at(inst.divisor, p.x, p.y));
  const auto c = oracles::polygon_centroid(q);
  b.delta = lct_at(inst.divisor, c.x, c.y);
  return b;
}

}  // namespace

TEST_CASE("lct of D_u: examples") {
  CHECK(*lct_Du(p2_O1(), rv({1, 0})) == 1);
  CHECK(*lct_Du(anticanonical(p2()), rv({2, -1})) == Rational(1, 3));
  CHECK(*lct_Du(p2_O1(), rv({Rational(1, 3), Rational(1, 3)})) == 3);
  // D_u = 0 only happens when P is a point
  CHECK_FALSE(lct_Du(divisor(p2(), qs({0, 0, 0})), rv({0, 0})).has_value());
  CHECK_THROWS_AS(lct_Du(p2_O1(), rv({2, 2})), ToricError);
}

TEST_CASE("alpha and delta: examples") {
  auto a = alpha(p2_O1());
  CHECK(a.alpha == 1);
  CHECK(a.alpha_via_rays == 1);
  CHECK(a.per_vertex_lct.size() == 3);
  CHECK(alpha(anticanonical(p2())).alpha == Rational(1, 3));
  a = alpha(anticanonical(p1p1()));
  CHECK(a.alpha == Rational(1, 2));

  auto dl = delta(p2_O1());
  CHECK(dl.delta == 3);
  CHECK(dl.delta_rays == std::vector<std::size_t>{0, 1, 2});
  CHECK(delta(anticanonical(p2())).delta == 1);
  dl = delta(anticanonical(p112()));
  CHECK(dl.delta == Rational(3, 4));
  CHECK(dl.barycenter == rv({Rational(1, 3), Rational(-1, 3)}));
  CHECK(dl.delta_rays == std::vector<std::size_t>{0, 2});
  CHECK(dl.delta_via_rays == Rational(3, 4));

  CHECK_THROWS_AS(alpha(divisor(p2(), qs({0, 0, 0}))), ToricError);
}

TEST_CASE("alpha witness attains the minimum") {
  const auto a = alpha(anticanonical(p2()));
  CHECK(*lct_Du(anticanonical(p2()), a.witness_vertex) == a.alpha);
  const auto coeffs = divisor_Du(anticanonical(p2()), a.witness_vertex);
  CHECK(1 / coeffs[a.witness_ray] == a.alpha);
}

TEST_CASE("toric alpha_m and delta_m: examples") {
  CHECK(toric_alpha_m(p2_O1(), 1) == 1);
  CHECK(toric_alpha_m(anticanonical(p2()), 1) == Rational(1, 3));
  CHECK(toric_delta_m(p2_O1(), 1) == 3);
  CHECK(toric_delta_m(divisor(p1(), qs({0, 1})), 2) == 2);
  CHECK(toric_delta_m(anticanonical(p2()), 1) == 1);

  // half simplex: at m = 1 only the origin survives, so alpha_1 > alpha
  const auto half = divisor(p2(), qs({0, 0, Rational(1, 2)}));
  CHECK(alpha(half).alpha == 2);
  CHECK(toric_alpha_m(half, 1) == 2);  // D_0 = D, lct 2 as well
  const auto tilted = divisor(p2(), qs({0, Rational(1, 3), Rational(2, 3)}));
  const Rational a = alpha(tilted).alpha;
  CHECK(toric_alpha_m(tilted, 1) > a);
  CHECK(toric_alpha_m(tilted, 3) == a);
}

TEST_CASE("alpha and delta agree with brute force on random polygons") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = random_polygon(rng);
    const auto b = brute(inst);
    CHECK(alpha(inst.divisor).alpha == b.alpha);
    CHECK(delta(inst.divisor).delta == b.delta);
  }
}

TEST_CASE("lct over lattice points never drops below alpha") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = random_polygon(rng, trial % 2 == 0).divisor;
    const Rational a = alpha(d).alpha;
    for (std::int64_t m = 1; m <= 8; ++m) {
      const auto pts = lattice_points(polytope_of_divisor(d), m);
      for (const auto& p : pts) {
        const auto l = lct_Du(d, (Rational(1) / m) * to_rational(p));
        if (l) CHECK(*l >= a);
      }
      // halved polygons can miss the lattice entirely at small m
      if (pts.empty())
        CHECK_THROWS_AS(toric_alpha_m(d, m), ToricError);
      else
        CHECK(toric_alpha_m(d, m) >= a);
    }
  }
}

TEST_CASE("scaling and translation invariance") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    const auto d = random_polygon(rng).divisor;
    const Rational a = alpha(d).alpha, dl = delta(d).delta;
    for (long r : {2, 3, 5}) {
      CHECK(alpha(scaled(d, r)).alpha == a / r);
      CHECK(delta(scaled(d, r)).delta == dl / r);
    }
    const auto w = lv({static_cast<long>(trial % 3) - 1, static_cast<long>(trial % 5) - 2});
    CHECK(alpha(translated(d, w)).alpha == a);
    CHECK(delta(translated(d, w)).delta == dl);
  }
}

TEST_CASE("certificates") {
  auto r = threshold_report(p2_O1());
  CHECK(r.alpha.alpha == 1);
  CHECK(r.delta.delta == 3);
  bool saw_tight = false;
  for (const auto& c : r.certificates) {
    CHECK(c.pass);
    CHECK(c.slack == c.rhs - c.lhs);
    if (c.name == "delta <= (n+1)*alpha") {
      CHECK(c.slack == 0);
      saw_tight = true;
    }
    if (c.name == "(n+1)/n*alpha <= delta") CHECK(c.slack > 0);
  }
  CHECK(saw_tight);

  const auto p1_O2 = divisor(p1(), qs({0, 2}));
  r = threshold_report(p1_O2, {ToricValuation(*p1(), rv({1}))});
  bool saw = false;
  for (const auto& c : r.certificates)
    if (c.name == "S <= n/(n+1)*T [v=(1)]") {
      CHECK(c.slack == 0);
      saw = true;
    }
  CHECK(saw);

  CHECK(make_certificate("x", 2, 1).pass == false);
  CHECK(make_certificate("x", 1, 1).pass == true);
}

TEST_CASE("threshold inequalities on random and rank-3 instances") {
  std::mt19937_64 rng(71);
  std::vector<ToricDivisor> ds;
  for (int trial = 0; trial < 15; ++trial) ds.push_back(random_polygon(rng, trial % 3 == 0).divisor);
  for (const auto& fan : rank3_fans()) ds.push_back(anticanonical(fan));
  ds.push_back(divisor(p3(), qs({0, 0, 0, 1})));
  for (const auto& d : ds) {
    std::vector<ToricValuation> extra;
    for (int k = 0; k < 5; ++k) extra.emplace_back(d.fan(), random_interior(rng, d.fan()));
    const auto r = threshold_report(d, extra);
    for (const auto& c : r.certificates) CHECK(c.pass);
    CHECK(r.alpha.alpha <= r.delta.delta);
  }
}
