#ifndef JETCLASS_SCALAR_HPP
#define JETCLASS_SCALAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jetclass/rational.hpp"

namespace jetclass {

// Product of p^e over distinct primes p, with exponents e in (0,1).
// The empty product is 1.
struct RadicalPart {
  std::vector<std::pair<std::int64_t, Rational>> factors;  // sorted by prime

  bool operator==(const RadicalPart& o) const { return factors == o.factors; }
  bool operator<(const RadicalPart& o) const { return factors < o.factors; }
  bool trivial() const { return factors.empty(); }
};

// Element of the field generated over Q by real roots of positive rationals,
// stored as a Q-linear combination of canonical radical monomials. Distinct
// canonical monomials are linearly independent over Q, so the representation
// is unique and equality is coefficient-wise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(int v) : Scalar(Rational(v)) {}
  explicit Scalar(Rational v);

  // base^(num/den) for base > 0.
  static Scalar rational_power(const Rational& base, const Rational& exponent);
  static Scalar sqrt_of(const Rational& base) { return rational_power(base, Rational(1, 2)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  Rational rational_value() const;
  bool is_single_term() const { return terms_.size() == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  // Exact sign in {-1,0,1}; decided by interval refinement for sums.
  int sign() const;
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  // this^e. Integer e works for any nonzero scalar; fractional e requires a
  // single positive term.
  Scalar pow(const Rational& e) const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  // Rational enclosure [lo,hi] with hi-lo <= 2^-bits * max(1,|value|).
  std::pair<Rational, Rational> bounds(unsigned bits) const;

  double to_double() const;
  std::string to_string() const;

  const std::vector<std::pair<RadicalPart, Rational>>& terms() const { return terms_; }

 private:
  // Sorted by radical part, no zero coefficients.
  std::vector<std::pair<RadicalPart, Rational>> terms_;
  void add_term(const RadicalPart& r, const Rational& c);
};

inline Scalar operator*(const Rational& a, const Scalar& b) { return Scalar(a) * b; }

// Prime factorization of n > 0. Throws if a factor resists the built-in
// methods (never happens for the coefficient sizes this library handles).
std::vector<std::pair<std::int64_t, unsigned>> factor_positive(const Integer& n);

// Rational enclosure of x^(1/k) for x > 0, of width <= 2^-bits * max(1,root).
std::pair<Rational, Rational> kth_root_bounds(const Rational& x, unsigned long k, unsigned bits);

}  // namespace jetclass

#endif
