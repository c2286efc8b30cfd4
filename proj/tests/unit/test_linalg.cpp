#include "fixtures.hpp"

#include "toric/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using fixtures::lv;
using fixtures::rv;

TEST_CASE("rank and determinant") {
  const linalg::Matrix m = {rv({1, 2, 3}), rv({4, 5, 6}), rv({7, 8, 9})};
  CHECK(linalg::rank(m) == 2);
  CHECK(linalg::determinant(m) == 0);
  CHECK(linalg::determinant({rv({2, 1}), rv({1, 1})}) == 1);
  CHECK(linalg::determinant({rv({0, 1}), rv({1, 0})}) == -1);
  CHECK(linalg::rank({}) == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int k = 0; k < 100; ++k) {
    linalg::Matrix m(3, RationalVector(3));
    for (auto& row : m)
      for (auto& x : row) x = Rational(d(rng), 1 + (d(rng) + 5) % 3);
    const Rational cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(linalg::determinant(m) == cof);
  }
}

TEST_CASE("solve") {
  auto r = linalg::solve({rv({1, 1}), rv({1, -1})}, {3, 1});
  REQUIRE(r.status == linalg::SolveStatus::Unique);
  CHECK(r.solution == rv({2, 1}));

  CHECK(linalg::solve({rv({1, 1}), rv({2, 2})}, {1, 3}).status == linalg::SolveStatus::Inconsistent);
  CHECK(linalg::solve({rv({1, 1})}, {1}).status == linalg::SolveStatus::Underdetermined);

  // consistent overdetermined system
  r = linalg::solve({rv({1, 0}), rv({0, 1}), rv({1, 1})}, {1, 2, 3});
  REQUIRE(r.status == linalg::SolveStatus::Unique);
  CHECK(r.solution == rv({1, 2}));
}

TEST_CASE("kernel") {
  auto k = linalg::kernel({rv({1, 1, 1})}, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(dot(v, rv({1, 1, 1})) == 0);
  CHECK(linalg::rank(k) == 2);
  CHECK(linalg::kernel({}, 2).size() == 2);
  CHECK(linalg::kernel({rv({1, 0}), rv({0, 1})}, 2).empty());
}

TEST_CASE("primitive on ray") {
  CHECK(linalg::primitive_on_ray(rv({Rational(1, 2), Rational(3, 4)})) == lv({2, 3}));
  CHECK(linalg::primitive_on_ray(rv({-4, 0})) == lv({-1, 0}));
}
