// Shared fans, divisors and randomized instance generators for the test suites.
#pragma once

#include "toric/kstability.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

namespace fixtures {

using namespace toric;

inline LatticeVector lv(std::initializer_list<long> c) {
  std::vector<Integer> out;
  for (long x : c) out.emplace_back(x);
  return LatticeVector(std::move(out));
}

inline RationalVector rv(std::initializer_list<Rational> c) { return RationalVector(std::vector<Rational>(c)); }

inline std::vector<Rational> qs(std::initializer_list<Rational> c) { return std::vector<Rational>(c); }

inline std::shared_ptr<const Fan> make_fan(std::size_t rank, std::vector<LatticeVector> rays,
                                           std::vector<std::vector<std::size_t>> cones) {
  auto f = std::make_shared<Fan>();
  f->rank = rank;
  f->rays = std::move(rays);
  f->max_cones = std::move(cones);
  return f;
}

inline std::shared_ptr<const Fan> p1() { return make_fan(1, {lv({1}), lv({-1})}, {{0}, {1}}); }

inline std::shared_ptr<const Fan> p2() {
  return make_fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
}

inline std::shared_ptr<const Fan> p112() {
  return make_fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, -2})}, {{0, 1}, {1, 2}, {2, 0}});
}

inline std::shared_ptr<const Fan> p1p1() {
  return make_fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Hirzebruch surface F_2: complete and smooth, -K nef but not ample.
inline std::shared_ptr<const Fan> f2() {
  return make_fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, 2}), lv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline std::shared_ptr<const Fan> p3() {
  return make_fan(3, {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1}), lv({-1, -1, -1})},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline std::shared_ptr<const Fan> p1p1p1() {
  std::vector<LatticeVector> rays = {lv({1, 0, 0}), lv({-1, 0, 0}), lv({0, 1, 0}),
                                     lv({0, -1, 0}), lv({0, 0, 1}), lv({0, 0, -1})};
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {4, 5}) cones.push_back({a, b, c});
  return make_fan(3, std::move(rays), std::move(cones));
}

inline std::shared_ptr<const Fan> p2p1() {
  std::vector<LatticeVector> rays = {lv({1, 0, 0}), lv({0, 1, 0}), lv({-1, -1, 0}), lv({0, 0, 1}), lv({0, 0, -1})};
  std::vector<std::vector<std::size_t>> cones;
  for (auto pair : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 0}})
    for (std::size_t c : {3, 4}) cones.push_back({pair.first, pair.second, c});
  return make_fan(3, std::move(rays), std::move(cones));
}

// Weighted projective space P(1,1,1,2).
inline std::shared_ptr<const Fan> p1112() {
  return make_fan(3, {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1}), lv({-1, -1, -2})},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline ToricDivisor divisor(std::shared_ptr<const Fan> fan, std::vector<Rational> b) {
  return ToricDivisor(std::move(fan), std::move(b));
}

// ---- randomized rank-2 instances ----

struct Point2 {
  long x, y;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline long cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct RandomPolygon {
  std::vector<Point2> hull;  // counter-clockwise, the true vertex set
  ToricDivisor divisor;
};

// Lattice polygon from the hull of a few random points, turned into a
// divisor on its normal fan. Optionally halved so vertices leave the lattice.
inline RandomPolygon random_polygon(std::mt19937_64& rng, bool halve = false) {
  std::uniform_int_distribution<long> coord(-4, 4);
  std::uniform_int_distribution<int> count(3, 7);
  while (true) {
    std::vector<Point2> pts(count(rng));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    auto hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      // inward normal of a counter-clockwise edge a->b
      long nx = -(b.y - a.y), ny = b.x - a.x;
      const long g = std::gcd(std::abs(nx), std::abs(ny));
      nx /= g;
      ny /= g;
      Rational offset = -Rational(nx * a.x + ny * a.y);
      if (halve) offset /= 2;
      hs.push_back({lv({nx, ny}), offset});
    }
    return {hull, divisor_from_polytope(Polytope(2, std::move(hs)))};
  }
}

// Random rational point in the interior of a random maximal cone.
inline RationalVector random_interior(std::mt19937_64& rng, const Fan& fan) {
  std::uniform_int_distribution<std::size_t> pick(0, fan.max_cones.size() - 1);
  std::uniform_int_distribution<long> num(1, 9);
  const auto& cone = fan.max_cones[pick(rng)];
  RationalVector v(fan.rank);
  for (auto i : cone) v += Rational(num(rng), num(rng)) * to_rational(fan.rays[i]);
  return v;
}

inline std::vector<std::shared_ptr<const Fan>> rank3_fans() { return {p3(), p1p1p1(), p2p1(), p1112()}; }

}  // namespace fixtures
