#include "jetclass/rational.hpp"

#include <stdexcept>

namespace jetclass {

std::string rational_to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer n(text.substr(0, slash)), d(text.substr(slash + 1));
    if (d == 0) bad();
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();
}

Integer rat_floor(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

Rational rat_pow(const Rational& q, long k) {
  if (k == 0) return Rational(1);
  if (q == 0 && k < 0) throw std::domain_error("0 to negative power");
  bool neg = k < 0;
  unsigned long e = neg ? -(unsigned long)k : (unsigned long)k;
  Rational base = q, out = 1;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  if (neg) out = Rational(1) / out;
  return out;
}

}  // namespace jetclass
