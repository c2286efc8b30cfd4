#pragma once

#include "toric/rational.hpp"

#include <vector>

namespace toric::linalg {

using Matrix = std::vector<RationalVector>;  // row-major, rows of equal length

Matrix to_matrix(const std::vector<LatticeVector>& rows);

std::size_t rank(Matrix rows);

Rational determinant(Matrix square);

/// Basis of {x : row . x = 0 for every row}; `cols` fixes the ambient dimension
/// so that an empty row set yields the standard basis.
std::vector<RationalVector> kernel(Matrix rows, std::size_t cols);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  RationalVector solution;  // meaningful only for Unique
};

/// Solves rows * x = rhs (any number of rows) by exact Gauss-Jordan elimination.
SolveResult solve(Matrix rows, std::vector<Rational> rhs);

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
LatticeVector primitive_on_ray(const RationalVector& v);

}  // namespace toric::linalg
