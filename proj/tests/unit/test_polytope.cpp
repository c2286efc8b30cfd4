#include "oracles.hpp"

#include "toric/config.hpp"
#include "toric/linalg.hpp"
#include "toric/ratgeom.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace toric;
using fixtures::lv;
using fixtures::rv;

namespace {

Polytope simplex2() { return Polytope(2, {{lv({1, 0}), 0}, {lv({0, 1}), 0}, {lv({-1, -1}), 1}}); }

Polytope unit_square() { return Polytope(2, {{lv({1, 0}), 0}, {lv({0, 1}), 0}, {lv({-1, 0}), 1}, {lv({0, -1}), 1}}); }

Polytope unit_cube() {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < 3; ++i) {
    LatticeVector e(3);
    e[i] = 1;
    hs.push_back({e, 0});
    hs.push_back({-e, 1});
  }
  return Polytope(3, std::move(hs));
}

// the sets {u in P : <u, w> >= c} for P given by the oracle's hull
std::vector<HalfSpace> hull_halfspaces(const std::vector<fixtures::Point2>& hull) {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    long nx = -(b.y - a.y), ny = b.x - a.x;
    const long g = std::gcd(std::abs(nx), std::abs(ny));
    hs.push_back({lv({nx / g, ny / g}), -Rational((nx / g) * a.x + (ny / g) * a.y)});
  }
  return hs;
}

}  // namespace

TEST_CASE("vertices: examples") {
  CHECK(Polytope(1, {{lv({1}), 0}, {lv({-1}), 1}}).vertices() == std::vector<RationalVector>{rv({0}), rv({1})});
  CHECK(simplex2().vertices() == std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0})});
  const Polytope p112(2, {{lv({1, 0}), 1}, {lv({0, 1}), 1}, {lv({-1, -2}), 1}});
  CHECK(p112.vertices() == std::vector<RationalVector>{rv({-1, -1}), rv({-1, 1}), rv({3, -1})});
}

TEST_CASE("vertices: errors") {
  CHECK_THROWS_WITH_AS(Polytope(2, {{lv({1, 0}), 0}, {lv({0, 1}), 0}}).vertices(), doctest::Contains("Unbounded"),
                       ToricError);
  // a line: rank of normals below n
  CHECK_THROWS_AS(Polytope(2, {{lv({1, 0}), 0}, {lv({-1, 0}), 1}}).vertices(), ToricError);
  try {
    Polytope(2, {{lv({1, 0}), -2}, {lv({-1, 0}), 1}, {lv({0, 1}), 0}, {lv({0, -1}), 1}}).vertices();
    FAIL("expected Empty");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::Empty);
  }
  try {
    intersect(simplex2(), {lv({0, 0}), -1}).vertices();
    FAIL("expected Empty");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::Empty);
  }
}

TEST_CASE("volume: examples") {
  CHECK(volume(simplex2()) == Rational(1, 2));
  const Polytope tri(2, {{lv({1, 0}), 1}, {lv({0, 1}), 1}, {lv({-1, -1}), 1}});
  CHECK(volume(tri) == Rational(9, 2));
  CHECK(volume(unit_cube()) == 1);
}

TEST_CASE("barycenter: examples") {
  CHECK(barycenter(simplex2()) == rv({Rational(1, 3), Rational(1, 3)}));
  CHECK(barycenter(Polytope(2, {{lv({1, 0}), 1}, {lv({0, 1}), 1}, {lv({-1, -1}), 1}})) == rv({0, 0}));
  CHECK(barycenter(Polytope(2, {{lv({1, 0}), 1}, {lv({0, 1}), 1}, {lv({-1, -2}), 1}})) ==
        rv({Rational(1, 3), Rational(-1, 3)}));
  CHECK(barycenter(unit_cube()) == rv({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  try {
    barycenter(intersect(simplex2(), {lv({-1, -1}), 0}));
    FAIL("expected ZeroVolume");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::ZeroVolume);
  }
}

TEST_CASE("lattice points: examples") {
  CHECK(lattice_points(unit_square(), 2).size() == 9);
  CHECK(lattice_points(simplex2(), 1) == std::vector<LatticeVector>{lv({0, 0}), lv({0, 1}), lv({1, 0})});
  CHECK(lattice_points(simplex2(), 3).size() == 10);
  CHECK_THROWS_AS(lattice_points(simplex2(), 0), ToricError);
}

TEST_CASE("intersect: examples") {
  const auto seg = intersect(simplex2(), {lv({1, 1}), -1});
  CHECK(seg.vertices() == std::vector<RationalVector>{rv({0, 1}), rv({1, 0})});
  CHECK(volume(seg) == 0);
  CHECK(volume(intersect(simplex2(), {lv({1, 1}), Rational(-1, 2)})) == Rational(3, 8));
  const auto same = intersect(simplex2(), {lv({0, 0}), 1});
  CHECK(same.vertices() == simplex2().vertices());
  CHECK(volume(same) == Rational(1, 2));
  // the original is untouched
  CHECK(simplex2().halfspaces().size() == 3);
}

TEST_CASE("random polygons against the hull, shoelace and centroid oracles") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = fixtures::random_polygon(rng);
    const auto q = oracles::to_q(inst.hull);
    const Polytope p(2, hull_halfspaces(inst.hull));

    std::set<RationalVector> expected;
    for (const auto& pt : q) expected.insert(rv({pt.x, pt.y}));
    const auto& got = p.vertices();
    CHECK(std::set<RationalVector>(got.begin(), got.end()) == expected);
    CHECK(std::is_sorted(got.begin(), got.end()));

    CHECK(volume(p) == oracles::shoelace(q));
    const auto c = oracles::polygon_centroid(q);
    CHECK(barycenter(p) == rv({c.x, c.y}));
    for (const auto& h : p.halfspaces()) CHECK(h.slack(barycenter(p)) > 0);
  }
}

TEST_CASE("volume does not depend on the root vertex") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = polytope_of_divisor(fixtures::random_polygon(rng).divisor);
    const Rational v0 = volume(p);
    for (std::size_t r = 1; r < p.vertices().size(); ++r) CHECK(volume(p, r) == v0);
  }
  for (const auto& fan : fixtures::rank3_fans()) {
    const auto p = polytope_of_divisor(anticanonical(fan));
    const Rational v0 = volume(p);
    for (std::size_t r = 1; r < p.vertices().size(); ++r) CHECK(volume(p, r) == v0);
  }
}

TEST_CASE("volume is positive exactly for full-dimensional polytopes") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = polytope_of_divisor(fixtures::random_polygon(rng).divisor);
    CHECK(volume(p) > 0);
    CHECK(affine_dimension(p.vertices()) == 2);
    // a supporting line through a vertex cuts out a face of lower dimension
    const auto& h = p.halfspaces().front();
    const auto face = intersect(p, {-h.normal, -h.offset});
    CHECK(affine_dimension(face.vertices()) < 2);
    CHECK(volume(face) == 0);
  }
}

TEST_CASE("lattice enumeration agrees with a box scan") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = fixtures::random_polygon(rng, trial % 2 == 1);
    const auto p = polytope_of_divisor(inst.divisor);
    for (long m : {1, 2, 3, 7, 13, 20}) {
      const auto got = lattice_points(p, m);
      const auto want = oracles::box_scan(p.halfspaces(), 2, -4 * m - 1, 4 * m + 1, m);
      CHECK(got == want);
    }
  }
}

TEST_CASE("parallel lattice enumeration equals the sequential scan") {
  std::mt19937_64 rng(23);
  const auto saved = worker_threads();
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = polytope_of_divisor(fixtures::random_polygon(rng).divisor);
    set_worker_threads(1);
    const auto seq = lattice_points(p, 15);
    set_worker_threads(4);
    CHECK(lattice_points(p, 15) == seq);
  }
  set_worker_threads(1);
  const auto cube_seq = lattice_points(unit_cube(), 9);
  set_worker_threads(3);
  CHECK(lattice_points(unit_cube(), 9) == cube_seq);
  set_worker_threads(saved);
}

TEST_CASE("lattice enumeration aborts past the point cap") {
  const auto saved = max_lattice_points();
  set_max_lattice_points(50);
  try {
    lattice_points(unit_square(), 10);  // 121 points
    FAIL("expected ResourceLimit");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  CHECK(lattice_points(unit_square(), 6).size() == 49);
  set_max_lattice_points(saved);
}

TEST_CASE("triangulation covers the polytope") {
  for (const auto& fan : fixtures::rank3_fans()) {
    const auto p = polytope_of_divisor(anticanonical(fan));
    const auto simplices = triangulate(p);
    Rational total = 0;
    for (const auto& s : simplices) {
      REQUIRE(s.size() == 4);
      linalg::Matrix m;
      for (std::size_t k = 1; k < 4; ++k) m.push_back(s[k] - s[0]);
      const Rational det = linalg::determinant(m);
      CHECK(det != 0);
      total += abs(det) / 6;
    }
    CHECK(total == volume(p));
  }
}
