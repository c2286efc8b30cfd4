#include "toric/piecewise.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / Rational(k + 1);
  return Polynomial(std::move(a));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty()) throw std::invalid_argument("piecewise polynomial needs at least one breakpoint");
  if (pieces_.size() + 1 != breakpoints_.size() && !(breakpoints_.size() == 1 && pieces_.empty()))
    throw std::invalid_argument("piece count must be breakpoint count minus one");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw std::invalid_argument("breakpoints must strictly increase");
}

std::size_t PiecewisePolynomial::piece_index(const Rational& t) const {
  if (t < lower() || t > upper()) throw ToricError(ErrorKind::OutOfDomain, "t = " + to_string(t) + " outside domain");
  if (pieces_.empty()) return 0;
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), t);
  return std::min<std::size_t>(static_cast<std::size_t>(it - breakpoints_.begin()) - 1, pieces_.size() - 1);
}

Rational PiecewisePolynomial::operator()(const Rational& t) const {
  const std::size_t j = piece_index(t);
  if (pieces_.empty()) return 0;
  return pieces_[j](t);
}

bool PiecewisePolynomial::is_continuous() const {
  for (std::size_t j = 1; j < pieces_.size(); ++j)
    if (pieces_[j - 1](breakpoints_[j]) != pieces_[j](breakpoints_[j])) return false;
  return true;
}

Polynomial interpolate_piece(std::span<const std::pair<Rational, Rational>> samples, std::size_t degree) {
  if (samples.size() != degree + 1)
    throw std::invalid_argument("interpolation of degree n needs exactly n + 1 samples");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw ToricError(ErrorKind::DuplicateAbscissa, "abscissa " + to_string(samples[i].first) + " repeated");

  // Lagrange basis expanded into monomial coefficients.
  Polynomial result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Polynomial basis({Rational(1)});
    Rational denom = 1;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-samples[j].first, Rational(1)});
      denom *= samples[i].first - samples[j].first;
    }
    result = result + Polynomial({samples[i].second / denom}) * basis;
  }
  return result;
}

Rational integrate(const PiecewisePolynomial& f, const Rational& a, const Rational& b) {
  if (a < f.lower() || b > f.upper() || a > b)
    throw ToricError(ErrorKind::OutOfDomain,
                     "[" + to_string(a) + ", " + to_string(b) + "] not inside [" + to_string(f.lower()) + ", " +
                         to_string(f.upper()) + "]");
  Rational total = 0;
  const auto& bp = f.breakpoints();
  for (std::size_t j = 0; j < f.pieces().size(); ++j) {
    const Rational lo = std::max(a, bp[j]);
    const Rational hi = std::min(b, bp[j + 1]);
    if (!(lo < hi)) continue;
    const Polynomial anti = f.pieces()[j].antiderivative();
    total += anti(hi) - anti(lo);
  }
  return total;
}

}  // namespace toric
