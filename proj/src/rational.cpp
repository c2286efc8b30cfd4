#include "toric/rational.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toric {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    throw ToricError(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ToricError(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

Integer pow10(int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(trimmed, text));
  Integer num = parse_integer(trimmed.substr(0, slash), text);
  Integer den = parse_integer(trimmed.substr(slash + 1), text);
  if (den == 0) throw ToricError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_decimal(const Rational& q, int significant_digits) {
  if (q == 0) return "0";
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  const Integer num = boost::multiprecision::numerator(a);
  const Integer den = boost::multiprecision::denominator(a);

  // exponent e with 10^e <= a < 10^(e+1)
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto pow10q = [](int k) { return k >= 0 ? Rational(pow10(k)) : Rational(Integer(1), pow10(-k)); };
  while (pow10q(e) > a) --e;
  while (pow10q(e + 1) <= a) ++e;

  // round half away from zero to significant_digits digits
  const Rational scaled = a * pow10q(significant_digits - 1 - e);
  Integer digits = floor(scaled + Rational(1, 2));
  if (digits == pow10(significant_digits)) {
    digits /= 10;
    ++e;
  }
  std::string d = digits.str();

  std::string out;
  if (e < -5 || e >= significant_digits) {
    std::string mant = d.substr(0, 1);
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) mant += "." + frac;
    std::ostringstream exp;
    exp << (e < 0 ? "e-" : "e+") << (std::abs(e) < 10 ? "0" : "") << std::abs(e);
    out = mant + exp.str();
  } else if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    while (out.back() == '0') out.pop_back();
  } else {
    std::string ip = d.substr(0, static_cast<std::size_t>(e) + 1);
    std::string fp = d.substr(static_cast<std::size_t>(e) + 1);
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
    out = fp.empty() ? ip : ip + "." + fp;
  }
  return negative ? "-" + out : out;
}

Integer floor(const Rational& q) {
  const Integer& n = boost::multiprecision::numerator(q);
  const Integer& d = boost::multiprecision::denominator(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer ceil(const Rational& q) { return -floor(-q); }

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

PrimitiveDecomposition primitive_decomposition(const RationalVector& v) {
  if (v.is_zero()) throw ToricError(ErrorKind::TrivialValuation, "zero vector has no primitive direction");
  Integer common_den = 1;
  for (const auto& c : v) common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(c));
  LatticeVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * common_den;
    w[i] = boost::multiprecision::numerator(scaled);
  }
  Integer g = content(w);
  for (auto& c : w) c /= g;
  return {std::move(w), Rational(g, common_den)};
}

namespace {
template <typename V>
std::string render(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}
}  // namespace

std::string to_string(const RationalVector& v) { return render(v); }
std::string to_string(const LatticeVector& v) { return render(v); }

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

}  // namespace toric
