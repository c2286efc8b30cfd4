#pragma once

#include "toric/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace toric {

/// Dense univariate polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Continuous piecewise polynomial on [t_0, t_k].
class PiecewisePolynomial {
 public:
  /// pieces[j] lives on [breakpoints[j], breakpoints[j+1]].
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rational& lower() const { return breakpoints_.front(); }
  const Rational& upper() const { return breakpoints_.back(); }

  /// Index of the piece used to evaluate at t (the left piece at interior breakpoints).
  std::size_t piece_index(const Rational& t) const;
  Rational operator()(const Rational& t) const;

  /// True iff adjacent pieces agree exactly at every shared breakpoint.
  bool is_continuous() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

/// Unique polynomial of degree <= `degree` through `degree + 1` samples.
/// Throws DuplicateAbscissa when two samples share an abscissa.
Polynomial interpolate_piece(std::span<const std::pair<Rational, Rational>> samples, std::size_t degree);

/// Exact integral over [a, b]; throws OutOfDomain unless lower <= a <= b <= upper.
Rational integrate(const PiecewisePolynomial& f, const Rational& a, const Rational& b);

}  // namespace toric
