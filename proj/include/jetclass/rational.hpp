#ifndef JETCLASS_RATIONAL_HPP
#define JETCLASS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace jetclass {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& n) { return n.sign(); }

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string rational_to_string(const Rational& q);

// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// floor(q) as an Integer.
Integer rat_floor(const Rational& q);

// q^k for integer k (k may be negative; q != 0 then).
Rational rat_pow(const Rational& q, long k);

}  // namespace jetclass

#endif
