#include "toric/toricvar.hpp"

#include "divisor_cache.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string index_set(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

void for_each_subset(const std::vector<std::size_t>& items, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    if (!f(chosen)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Primitive normal of the hyperplane spanned by the given vectors, when they
// span a hyperplane.
std::optional<LatticeVector> hyperplane_normal(const std::vector<LatticeVector>& vs, std::size_t n) {
  auto ker = linalg::kernel(linalg::to_matrix(vs), n);
  if (ker.size() != 1) return std::nullopt;
  return linalg::primitive_on_ray(ker[0]);
}

std::vector<LatticeVector> rays_of(const Fan& fan, const std::vector<std::size_t>& idx) {
  std::vector<LatticeVector> out;
  for (auto i : idx) out.push_back(fan.rays[i]);
  return out;
}

bool separable(const Fan& fan, std::size_t a, std::size_t b) {
  const auto& ca = fan.max_cones[a];
  const auto& cb = fan.max_cones[b];
  std::vector<std::size_t> all(ca);
  all.insert(all.end(), cb.begin(), cb.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto separates = [&](const LatticeVector& w) {
    for (auto i : ca)
      if (dot(w, fan.rays[i]) < 0) return false;
    for (auto i : cb)
      if (dot(w, fan.rays[i]) > 0) return false;
    return true;
  };
  // The cone of separating functionals is pointed, so when it is nonzero one
  // of its extreme rays is cut out by rank - 1 of the generators.
  bool found = false;
  for_each_subset(all, fan.rank - 1, [&](const std::vector<std::size_t>& subset) {
    auto w = hyperplane_normal(rays_of(fan, subset), fan.rank);
    if (!w) return true;
    if (separates(*w) || separates(-*w)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::vector<ConeFacet> cone_facets(const Fan& fan, std::size_t cone) {
  const auto& idx = fan.max_cones.at(cone);
  std::map<std::vector<std::size_t>, LatticeVector> facets;
  for_each_subset(idx, fan.rank - 1, [&](const std::vector<std::size_t>& subset) {
    auto w = hyperplane_normal(rays_of(fan, subset), fan.rank);
    if (!w) return true;
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (auto i : idx) {
      const Integer s = dot(*w, fan.rays[i]);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) on.push_back(i);
    }
    if (pos && neg) return true;
    std::sort(on.begin(), on.end());
    facets.emplace(std::move(on), neg ? LatticeVector(-*w) : *w);
    return true;
  });
  std::vector<ConeFacet> out;
  for (auto& [rays, normal] : facets) out.push_back({normal, rays});
  return out;
}

bool cone_contains(const Fan& fan, std::size_t cone, const RationalVector& v) {
  for (const auto& f : cone_facets(fan, cone))
    if (dot(v, f.normal) < 0) return false;
  return true;
}

bool cone_interior_contains(const Fan& fan, std::size_t cone, const RationalVector& v) {
  for (const auto& f : cone_facets(fan, cone))
    if (dot(v, f.normal) <= 0) return false;
  return true;
}

std::optional<std::size_t> containing_cone(const Fan& fan, const RationalVector& v) {
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    if (cone_contains(fan, k, v)) return k;
  return std::nullopt;
}

FanDiagnostics validate_fan(const Fan& fan) {
  FanDiagnostics diag;
  auto report = [&](ErrorKind kind, std::string msg) { diag.items.push_back({kind, std::move(msg)}); };

  if (fan.rank == 0) {
    report(ErrorKind::NonMaximalCone, "lattice rank must be positive");
    return diag;
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    if (r.size() != fan.rank) {
      report(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " has wrong length");
    } else if (!is_primitive(r)) {
      report(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (fan.rays[j] == r) report(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " duplicates ray " + std::to_string(j));
  }
  if (!diag.ok()) return diag;

  if (fan.max_cones.empty()) {
    report(ErrorKind::WallCountViolation, "fan has no maximal cones");
    return diag;
  }
  std::vector<bool> used(fan.rays.size(), false);
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    auto idx = fan.max_cones[k];
    const std::string name = "cone " + std::to_string(k) + " " + index_set(idx);
    bool well_formed = true;
    for (auto i : idx) {
      if (i >= fan.rays.size()) {
        report(ErrorKind::NonMaximalCone, name + " references missing ray " + std::to_string(i));
        well_formed = false;
      } else {
        used[i] = true;
      }
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      report(ErrorKind::NonMaximalCone, name + " lists a ray twice");
      well_formed = false;
    }
    if (!well_formed) continue;
    if (linalg::rank(linalg::to_matrix(rays_of(fan, idx))) < fan.rank) {
      report(ErrorKind::NonMaximalCone, name + " is not full-dimensional");
      continue;
    }
    auto facets = cone_facets(fan, k);
    std::vector<LatticeVector> normals;
    for (const auto& f : facets) normals.push_back(f.normal);
    if (linalg::rank(linalg::to_matrix(normals)) < fan.rank) {
      report(ErrorKind::NonMaximalCone, name + " contains a line (not strictly convex)");
      continue;
    }
    for (auto i : idx) {
      std::vector<LatticeVector> through;
      for (const auto& f : facets)
        if (std::binary_search(f.rays.begin(), f.rays.end(), i)) through.push_back(f.normal);
      if (linalg::rank(linalg::to_matrix(through)) + 1 != fan.rank && fan.rank > 1)
        report(ErrorKind::NonMaximalCone, name + ": ray " + std::to_string(i) + " is not an extreme ray");
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) report(ErrorKind::UnusedRay, "ray " + std::to_string(i) + " lies in no maximal cone");
  if (!diag.ok()) return diag;

  // Walls: every facet of a maximal cone must bound exactly two maximal cones.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> walls;
  for (std::size_t k = 0; k < fan.max_cones.size(); ++k)
    for (const auto& f : cone_facets(fan, k)) walls[f.rays].push_back(k);
  std::vector<std::vector<std::size_t>> adjacency(fan.max_cones.size());
  for (const auto& [rays, cones] : walls) {
    if (cones.size() != 2) {
      report(ErrorKind::WallCountViolation, "wall " + index_set(rays) + " bounds " + std::to_string(cones.size()) +
                                                " maximal cone(s), expected 2");
      continue;
    }
    adjacency[cones[0]].push_back(cones[1]);
    adjacency[cones[1]].push_back(cones[0]);
  }
  std::vector<bool> seen(fan.max_cones.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    auto k = todo.front();
    todo.pop();
    for (auto j : adjacency[k])
      if (!seen[j]) {
        seen[j] = true;
        todo.push(j);
      }
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) report(ErrorKind::WallCountViolation, "cone " + std::to_string(k) + " is not connected to cone 0 through walls");

  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b)
      if (!separable(fan, a, b))
        report(ErrorKind::OverlappingCones, "cones " + std::to_string(a) + " and " + std::to_string(b) + " share interior points");
  return diag;
}

void require_valid(const Fan& fan) {
  auto diag = validate_fan(fan);
  if (!diag.ok()) throw ToricError(diag.items.front().kind, diag.items.front().message);
}

ToricDivisor::ToricDivisor(std::shared_ptr<const Fan> fan, std::vector<Rational> coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)), cache_(std::make_shared<Cache>()) {
  if (!fan_) throw std::invalid_argument("divisor needs a fan");
  if (coeffs_.size() != fan_->rays.size())
    throw ToricError(ErrorKind::Parse, "divisor has " + std::to_string(coeffs_.size()) + " coefficients but the fan has " +
                                           std::to_string(fan_->rays.size()) + " rays");
}

const FanDiagnostics& cached_diagnostics(const ToricDivisor& d) {
  return d.cache().diagnostics.get([&] { return validate_fan(d.fan()); });
}

namespace {
void require_valid_cached(const ToricDivisor& d) {
  const auto& diag = cached_diagnostics(d);
  if (!diag.ok()) throw ToricError(diag.items.front().kind, diag.items.front().message);
}
}  // namespace

Polytope polytope_of_divisor(const ToricDivisor& d) {
  return d.cache().polytope.get([&] {
    require_valid_cached(d);
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < d.fan().rays.size(); ++i) hs.push_back({d.fan().rays[i], d.coeffs()[i]});
    Polytope p(d.rank(), std::move(hs));
    p.vertices();  // surfaces Empty now rather than later
    return p;
  });
}

CartierData cartier_data(const ToricDivisor& d) {
  return d.cache().cartier.get([&] {
    require_valid_cached(d);
    CartierData data;
    const auto& fan = d.fan();
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
      linalg::Matrix rows;
      std::vector<Rational> rhs;
      for (auto i : fan.max_cones[k]) {
        rows.push_back(to_rational(fan.rays[i]));
        rhs.push_back(d.coeffs()[i]);
      }
      auto res = linalg::solve(std::move(rows), std::move(rhs));
      if (res.status != linalg::SolveStatus::Unique)
        throw ToricError(ErrorKind::NotQCartier,
                         "no linear function on cone " + std::to_string(k) + " " + index_set(fan.max_cones[k]) +
                             " matches the divisor coefficients");
      data.b_sigma.push_back(std::move(res.solution));
    }
    return data;
  });
}

AmpleCertificate is_ample(const ToricDivisor& d) {
  return d.cache().ample.get([&]() -> AmpleCertificate {
    const auto data = cartier_data(d);
    const auto& fan = d.fan();
    std::vector<RationalVector> verts;
    try {
      verts = polytope_of_divisor(d).vertices();
    } catch (const ToricError& e) {
      if (e.kind() == ErrorKind::Empty) return {false, "polytope is empty"};
      throw;
    }
    if (verts.size() != fan.max_cones.size())
      return {false, "polytope has " + std::to_string(verts.size()) + " vertices but the fan has " +
                         std::to_string(fan.max_cones.size()) + " maximal cones"};
    for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
      const RationalVector u = -data.b_sigma[k];
      if (!std::binary_search(verts.begin(), verts.end(), u))
        return {false, "-b(sigma_" + std::to_string(k) + ") = " + to_string(u) + " is not a vertex"};
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (dot(u, fan.rays[i]) + d.coeffs()[i] == 0) tight.push_back(i);
      auto cone = fan.max_cones[k];
      std::sort(cone.begin(), cone.end());
      if (tight != cone)
        return {false, "vertex " + to_string(u) + " is tight on rays " + index_set(tight) + ", not on cone " +
                           index_set(cone)};
    }
    return {true, ""};
  });
}

void require_ample(const ToricDivisor& d) {
  auto cert = is_ample(d);
  if (!cert.ample) throw ToricError(ErrorKind::NotAmple, cert.reason);
}

Rational support_function(const ToricDivisor& d, const RationalVector& v) {
  require_ample(d);
  const auto& verts = polytope_of_divisor(d).vertices();
  Rational best = dot(verts.front(), v);
  for (const auto& u : verts) best = std::min(best, dot(u, v));
  return best;
}

ToricDivisor anticanonical(std::shared_ptr<const Fan> fan) {
  const std::size_t d = fan->rays.size();
  return ToricDivisor(std::move(fan), std::vector<Rational>(d, Rational(1)));
}

QFanoVerdict is_q_fano(const std::shared_ptr<const Fan>& fan) {
  try {
    auto k = anticanonical(fan);
    cartier_data(k);
    auto cert = is_ample(k);
    if (!cert.ample) return {false, "-K_X is not ample: " + cert.reason};
    return {true, ""};
  } catch (const ToricError& e) {
    return {false, e.what()};
  }
}

std::vector<Rational> divisor_Du(const ToricDivisor& d, const RationalVector& u) {
  const auto& fan = d.fan();
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    Rational c = dot(u, fan.rays[i]) + d.coeffs()[i];
    if (c < 0) throw ToricError(ErrorKind::NotInPolytope, to_string(u) + " violates the inequality of ray " + std::to_string(i));
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

ToricDivisor divisor_from_polytope(const Polytope& p) {
  const auto& verts = p.vertices();
  const std::size_t n = p.rank();
  if (affine_dimension(verts) < static_cast<int>(n))
    throw ToricError(ErrorKind::ZeroVolume, "polytope is not full-dimensional; it has no normal fan in this lattice");

  auto fan = std::make_shared<Fan>();
  fan->rank = n;
  std::vector<Rational> offsets;
  for (const auto& h : p.halfspaces()) {
    const Integer g = content(h.normal);
    LatticeVector w = h.normal;
    for (auto& c : w) c /= g;
    const Rational offset = h.offset / Rational(g);
    std::vector<RationalVector> on;
    for (const auto& v : verts)
      if (dot(v, w) + offset == 0) on.push_back(v);
    if (affine_dimension(on) != static_cast<int>(n) - 1) continue;  // not facet-defining
    if (std::find(fan->rays.begin(), fan->rays.end(), w) != fan->rays.end()) continue;
    fan->rays.push_back(std::move(w));
    offsets.push_back(offset);
  }
  for (const auto& v : verts) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < fan->rays.size(); ++i)
      if (dot(v, fan->rays[i]) + offsets[i] == 0) cone.push_back(i);
    fan->max_cones.push_back(std::move(cone));
  }
  return ToricDivisor(std::move(fan), std::move(offsets));
}

}  // namespace toric
