#include "toric/error.hpp"
#include "toric/linalg.hpp"
#include "toric/ratgeom.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace toric {

struct Polytope::Cache {
  std::once_flag once;
  std::vector<RationalVector> vertices;
  std::exception_ptr error;
};

namespace {

// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic order;
// stops early when f returns false.
void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Basic feasible solutions of the system; every n-subset with a unique
// solution is tried.
std::vector<RationalVector> basic_feasible_points(std::size_t n, const std::vector<HalfSpace>& hs) {
  std::set<RationalVector> found;
  for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& subset) {
    linalg::Matrix rows;
    std::vector<Rational> rhs;
    for (auto i : subset) {
      rows.push_back(to_rational(hs[i].normal));
      rhs.push_back(-hs[i].offset);
    }
    auto res = linalg::solve(std::move(rows), std::move(rhs));
    if (res.status != linalg::SolveStatus::Unique) return true;
    for (const auto& h : hs)
      if (!h.contains(res.solution)) return true;
    found.insert(std::move(res.solution));
    return true;
  });
  return {found.begin(), found.end()};
}

bool has_recession_direction(std::size_t n, const std::vector<HalfSpace>& hs) {
  bool unbounded = false;
  for_each_subset(hs.size(), n - 1, [&](const std::vector<std::size_t>& subset) {
    linalg::Matrix rows;
    for (auto i : subset) rows.push_back(to_rational(hs[i].normal));
    auto ker = linalg::kernel(std::move(rows), n);
    if (ker.size() != 1) return true;
    for (const auto& d : {ker[0], RationalVector(-ker[0])}) {
      bool ok = true;
      for (const auto& h : hs) {
        if (dot(d, h.normal) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        unbounded = true;
        return false;
      }
    }
    return true;
  });
  return unbounded;
}

std::vector<RationalVector> compute_vertices(std::size_t n, const std::vector<HalfSpace>& hs) {
  std::vector<LatticeVector> normals;
  for (const auto& h : hs) normals.push_back(h.normal);
  if (linalg::rank(linalg::to_matrix(normals)) < n) {
    // The lineality space is nontrivial: P is empty or unbounded. Pin the
    // lineality directions to zero to decide which.
    auto pinned = hs;
    for (const auto& k : linalg::kernel(linalg::to_matrix(normals), n)) {
      auto w = linalg::primitive_on_ray(k);
      pinned.push_back({w, 0});
      pinned.push_back({-w, 0});
    }
    if (basic_feasible_points(n, pinned).empty())
      throw ToricError(ErrorKind::Empty, "no point satisfies every inequality");
    throw ToricError(ErrorKind::Unbounded, "normals do not span the dual space");
  }
  auto points = basic_feasible_points(n, hs);
  if (points.empty()) throw ToricError(ErrorKind::Empty, "no point satisfies every inequality");
  if (has_recession_direction(n, hs)) throw ToricError(ErrorKind::Unbounded, "polyhedron has a recession direction");
  return points;
}

}  // namespace

Polytope::Polytope(std::size_t rank, std::vector<HalfSpace> halfspaces)
    : rank_(rank), cache_(std::make_shared<Cache>()) {
  if (rank == 0) throw std::invalid_argument("polytope rank must be positive");
  for (auto& h : halfspaces) {
    if (h.normal.size() != rank) throw std::invalid_argument("half-space normal has wrong length");
    if (h.normal.is_zero()) {
      if (h.offset >= 0) continue;
      infeasible_constant_ = true;  // kept so that intersect() carries it along
    }
    halfspaces_.push_back(std::move(h));
  }
}

const std::vector<RationalVector>& Polytope::vertices() const {
  std::call_once(cache_->once, [this] {
    try {
      if (infeasible_constant_) throw ToricError(ErrorKind::Empty, "constant inequality 0 >= positive");
      cache_->vertices = compute_vertices(rank_, halfspaces_);
    } catch (...) {
      cache_->error = std::current_exception();
    }
  });
  if (cache_->error) std::rethrow_exception(cache_->error);
  return cache_->vertices;
}

bool Polytope::contains(const RationalVector& u) const {
  if (infeasible_constant_) return false;
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(u); });
}

bool Polytope::is_empty() const {
  try {
    vertices();
    return false;
  } catch (const ToricError& e) {
    if (e.kind() == ErrorKind::Empty) return true;
    throw;
  }
}

std::vector<RationalVector> vertices(const Polytope& p) { return p.vertices(); }

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(linalg::rank(std::move(diffs)));
}

namespace {

struct FaceContext {
  const std::vector<RationalVector>& verts;
  std::vector<std::vector<bool>> tight;  // tight[v][h]
  std::size_t halfspace_count;
};

std::vector<RationalVector> points_of(const FaceContext& ctx, const std::vector<std::size_t>& face) {
  std::vector<RationalVector> pts;
  pts.reserve(face.size());
  for (auto v : face) pts.push_back(ctx.verts[v]);
  return pts;
}

// Simplices (as vertex index lists) triangulating the face spanned by `face`,
// which has affine dimension `dim`.
std::vector<std::vector<std::size_t>> triangulate_face(const FaceContext& ctx, const std::vector<std::size_t>& face,
                                                       int dim, std::size_t root) {
  if (dim == 0) return {{root}};
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t h = 0; h < ctx.halfspace_count; ++h) {
    std::vector<std::size_t> sub;
    for (auto v : face)
      if (ctx.tight[v][h]) sub.push_back(v);
    if (sub.size() == face.size() || sub.empty()) continue;
    if (std::find(sub.begin(), sub.end(), root) != sub.end()) continue;
    if (affine_dimension(points_of(ctx, sub)) != dim - 1) continue;
    facets.insert(std::move(sub));
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& facet : facets) {
    for (auto& s : triangulate_face(ctx, facet, dim - 1, facet.front())) {
      s.insert(s.begin(), root);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t n = s.size() - 1;
  linalg::Matrix edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back(s[i] - s[0]);
  Rational det = linalg::determinant(std::move(edges));
  Rational fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  return abs(det) / fact;
}

}  // namespace

std::vector<Simplex> triangulate(const Polytope& p, std::size_t root_vertex) {
  const auto& verts = p.vertices();
  if (root_vertex >= verts.size()) throw std::out_of_range("root vertex index out of range");
  if (affine_dimension(verts) < static_cast<int>(p.rank())) return {};

  FaceContext ctx{verts, {}, p.halfspaces().size()};
  ctx.tight.assign(verts.size(), std::vector<bool>(p.halfspaces().size(), false));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t h = 0; h < p.halfspaces().size(); ++h) ctx.tight[v][h] = p.halfspaces()[h].is_tight(verts[v]);

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<Simplex> out;
  for (const auto& s : triangulate_face(ctx, all, static_cast<int>(p.rank()), root_vertex)) {
    Simplex simplex;
    for (auto v : s) simplex.push_back(verts[v]);
    out.push_back(std::move(simplex));
  }
  return out;
}

Rational volume(const Polytope& p, std::size_t root_vertex) {
  Rational total = 0;
  for (const auto& s : triangulate(p, root_vertex)) total += simplex_volume(s);
  return total;
}

RationalVector barycenter(const Polytope& p) {
  const auto simplices = triangulate(p);
  if (simplices.empty()) throw ToricError(ErrorKind::ZeroVolume, "barycenter of a lower-dimensional polytope");
  const std::size_t n = p.rank();
  RationalVector weighted(n);
  Rational total = 0;
  for (const auto& s : simplices) {
    const Rational vol = simplex_volume(s);
    RationalVector centroid(n);
    for (const auto& c : s) centroid += c;
    weighted += (vol / Rational(n + 1)) * centroid;
    total += vol;
  }
  return (1 / total) * weighted;
}

Polytope intersect(const Polytope& p, const HalfSpace& h) {
  auto hs = p.halfspaces();
  hs.push_back(h);
  return Polytope(p.rank(), std::move(hs));
}

}  // namespace toric
