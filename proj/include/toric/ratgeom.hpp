#pragma once

#include "toric/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace toric {

/// The inequality <u, normal> >= -offset on M_R.
///
/// A zero normal is tolerated so that constant constraints such as {0 >= -1}
/// can be intersected; the Polytope constructor folds them away.
struct HalfSpace {
  LatticeVector normal;
  Rational offset;

  /// <u, normal> + offset; nonnegative exactly on the half-space.
  Rational slack(const RationalVector& u) const { return dot(u, normal) + offset; }
  bool contains(const RationalVector& u) const { return slack(u) >= 0; }
  bool is_tight(const RationalVector& u) const { return slack(u) == 0; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Bounded convex polytope in H-representation with a lazily computed vertex set.
///
/// Redundant half-spaces may be stored; they only disappear from the vertex
/// computation. Copies share the vertex cache, which is filled at most once
/// and is safe to read from several threads.
class Polytope {
 public:
  Polytope(std::size_t rank, std::vector<HalfSpace> halfspaces);

  std::size_t rank() const { return rank_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  /// Sorted, deduplicated vertices. Throws Empty or Unbounded.
  const std::vector<RationalVector>& vertices() const;

  bool contains(const RationalVector& u) const;
  bool is_empty() const;

 private:
  struct Cache;

  std::size_t rank_;
  std::vector<HalfSpace> halfspaces_;
  bool infeasible_constant_ = false;
  std::shared_ptr<Cache> cache_;
};

using Simplex = std::vector<RationalVector>;

std::vector<RationalVector> vertices(const Polytope& p);

/// Affine dimension of the span of the given points (-1 for no points).
int affine_dimension(const std::vector<RationalVector>& points);

/// Fan triangulation: cone from `root_vertex` over a recursive triangulation
/// of every facet not containing it. Empty for lower-dimensional polytopes.
std::vector<Simplex> triangulate(const Polytope& p, std::size_t root_vertex = 0);

/// Euclidean n-volume; 0 for lower-dimensional polytopes. Throws Empty.
Rational volume(const Polytope& p, std::size_t root_vertex = 0);

/// Exact centroid. Throws Empty, or ZeroVolume when P is not full-dimensional.
RationalVector barycenter(const Polytope& p);

/// Integer points of the dilate m*P, lexicographically sorted.
///
/// Scans the exact bounding box of m*P; runs on worker_threads() threads and
/// returns the same list as a sequential scan. Throws ResourceLimit when more
/// than max_lattice_points() points would be produced.
std::vector<LatticeVector> lattice_points(const Polytope& p, std::int64_t m);

/// Appends H. The result may be empty, which is a valid value.
Polytope intersect(const Polytope& p, const HalfSpace& h);

}  // namespace toric
