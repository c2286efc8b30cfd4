#include "toric/linalg.hpp"

#include <utility>

namespace toric::linalg {

namespace {

// Reduces `rows` (with an optional augmented column list) to reduced row echelon
// form in place. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& rows, std::vector<Rational>* rhs, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (rhs) std::swap((*rhs)[r], (*rhs)[p]);
    const Rational inv = 1 / rows[r][c];
    rows[r] *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix to_matrix(const std::vector<LatticeVector>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return m;
}

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return rref(rows, nullptr, cols).size();
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<RationalVector> kernel(Matrix rows, std::size_t cols) {
  auto pivots = rref(rows, nullptr, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

SolveResult solve(Matrix rows, std::vector<Rational> rhs) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  auto pivots = rref(rows, &rhs, cols);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rhs[r] != 0) return {SolveStatus::Inconsistent, {}};
  if (pivots.size() < cols) return {SolveStatus::Underdetermined, {}};
  RationalVector x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r];
  return {SolveStatus::Unique, std::move(x)};
}

LatticeVector primitive_on_ray(const RationalVector& v) { return primitive_decomposition(v).primitive; }

}  // namespace toric::linalg
