#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "-p/q" or a bare integer. Throws ToricError(Parse) on bad input.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal rendering with the given number of significant digits (presentation only).
std::string to_decimal(const Rational& q, int significant_digits = 12);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Fixed-length coordinate vector over an exact ring. Comparison is lexicographic.
template <typename T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  Vector(std::initializer_list<T> init) : coords_(init) {}
  explicit Vector(std::vector<T> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  T& operator[](std::size_t i) { return coords_[i]; }
  const T& operator[](std::size_t i) const { return coords_[i]; }

  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }
  friend bool operator>(const Vector& a, const Vector& b) { return b < a; }
  friend bool operator<=(const Vector& a, const Vector& b) { return !(b < a); }
  friend bool operator>=(const Vector& a, const Vector& b) { return !(a < b); }

  Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vector& operator*=(const T& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const T& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

 private:
  std::vector<T> coords_;
};

/// A point of M_Q or N_Q.
using RationalVector = Vector<Rational>;
/// A point of M or N.
using LatticeVector = Vector<Integer>;

RationalVector to_rational(const LatticeVector& v);

/// Natural pairing; both arguments must have the same length.
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Integer dot(const LatticeVector& a, const LatticeVector& b);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Writes v = scale * w with w primitive and scale > 0. v must be nonzero.
struct PrimitiveDecomposition {
  LatticeVector primitive;
  Rational scale;
};
PrimitiveDecomposition primitive_decomposition(const RationalVector& v);

std::string to_string(const RationalVector& v);
std::string to_string(const LatticeVector& v);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

}  // namespace toric
