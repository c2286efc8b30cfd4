#pragma once

#include "toric/error.hpp"
#include "toric/ratgeom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// A complete rational fan given by its rays and maximal cones.
struct Fan {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;  // indices into rays
};

struct Diagnostic {
  ErrorKind kind;
  std::string message;
};

struct FanDiagnostics {
  std::vector<Diagnostic> items;
  bool ok() const { return items.empty(); }
};

/// Checks primitivity, full-dimensional strictly convex maximal cones, that
/// every wall bounds exactly two maximal cones, wall-graph connectivity and
/// pairwise disjointness of cone interiors.
FanDiagnostics validate_fan(const Fan& fan);

/// Throws the first diagnostic of validate_fan as a ToricError.
void require_valid(const Fan& fan);

/// A facet of a maximal cone: inward primitive normal and the rays on it.
struct ConeFacet {
  LatticeVector normal;
  std::vector<std::size_t> rays;
};

std::vector<ConeFacet> cone_facets(const Fan& fan, std::size_t cone);
bool cone_contains(const Fan& fan, std::size_t cone, const RationalVector& v);
bool cone_interior_contains(const Fan& fan, std::size_t cone, const RationalVector& v);
/// Lowest-index maximal cone whose closure contains v.
std::optional<std::size_t> containing_cone(const Fan& fan, const RationalVector& v);

/// D = sum b_i D_i on the toric variety of `fan`.
///
/// Derived data (polytope, Cartier data, ampleness) is computed once per
/// divisor value and shared between copies.
class ToricDivisor {
 public:
  ToricDivisor(std::shared_ptr<const Fan> fan, std::vector<Rational> coeffs);

  const Fan& fan() const { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t rank() const { return fan_->rank; }

  struct Cache;
  Cache& cache() const { return *cache_; }

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<Rational> coeffs_;
  std::shared_ptr<Cache> cache_;
};

/// Per maximal cone, the element b(sigma) of M_Q with <b(sigma), v_i> = b_i for
/// the rays of sigma, so that chi^{b(sigma)} is a local equation of D and the
/// support function is -<b(sigma), .> on sigma.
struct CartierData {
  std::vector<RationalVector> b_sigma;
};

/// P_D = {u : <u, v_i> >= -b_i}. Throws Empty when D has no sections.
Polytope polytope_of_divisor(const ToricDivisor& d);

CartierData cartier_data(const ToricDivisor& d);

struct AmpleCertificate {
  bool ample = false;
  std::string reason;  // why not, when not ample
};

/// Normal-fan test: P_D has one vertex -b(sigma) per maximal cone, tight
/// exactly on the rays of sigma. Propagates NotQCartier.
AmpleCertificate is_ample(const ToricDivisor& d);

/// Throws NotAmple unless is_ample passes.
void require_ample(const ToricDivisor& d);

/// psi(v) = min over vertices u of P of <u, v>; requires D ample.
Rational support_function(const ToricDivisor& d, const RationalVector& v);

/// -K_X = sum D_i.
ToricDivisor anticanonical(std::shared_ptr<const Fan> fan);

struct QFanoVerdict {
  bool q_fano = false;
  std::string reason;
};

QFanoVerdict is_q_fano(const std::shared_ptr<const Fan>& fan);

/// Coefficients <u, v_i> + b_i of D_u. Throws NotInPolytope.
std::vector<Rational> divisor_Du(const ToricDivisor& d, const RationalVector& u);

/// Normal fan of a full-dimensional polytope together with the divisor whose
/// polytope it is: rays are the primitive inward facet normals, b_i the
/// matching offsets, maximal cones the rays tight at each vertex.
ToricDivisor divisor_from_polytope(const Polytope& p);

}  // namespace toric
