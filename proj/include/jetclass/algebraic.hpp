#ifndef JETCLASS_ALGEBRAIC_HPP
#define JETCLASS_ALGEBRAIC_HPP

#include <string>
#include <vector>

#include "jetclass/rational.hpp"

namespace jetclass {

// Dense univariate polynomial over a field, coefficients ascending.
template <class T>
struct UniPoly {
  std::vector<T> c;

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  T eval(const T& x) const {
    T out(0);
    for (size_t i = c.size(); i-- > 0;) out = out * x + c[i];
    return out;
  }
  UniPoly derivative() const {
    UniPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * T((long)i));
    d.trim();
    return d;
  }
};

template <class T>
UniPoly<T> operator+(const UniPoly<T>& a, const UniPoly<T>& b) {
  UniPoly<T> r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), T(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

template <class T>
UniPoly<T> operator-(const UniPoly<T>& a, const UniPoly<T>& b) {
  UniPoly<T> r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), T(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

template <class T>
UniPoly<T> operator*(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly<T> r;
  r.c.assign(a.c.size() + b.c.size() - 1, T(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

// Field division with remainder.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divrem(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPoly<T> q, r = a;
  q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 0, T(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    T f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    q.c[shift] += f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

// Monic gcd over a field.
template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    T lead = a.c.back();
    for (auto& x : a.c) x = x / lead;
  }
  return a;
}

using QPoly = UniPoly<Rational>;

QPoly qpoly_from_integers(const std::vector<Integer>& coeffs);
std::vector<Integer> primitive_integer_poly(const QPoly& p);
std::string qpoly_to_string(const QPoly& p, const std::string& var = "t");

// Real algebraic number: square-free integer defining polynomial together
// with an open isolating interval containing exactly one of its real roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber(std::vector<Integer> defining, Rational lo, Rational hi);

  const std::vector<Integer>& defining_poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  void refine(const Rational& width) const;
  void refine_bits(unsigned bits) const { refine(rat_pow(Rational(1, 2), (long)bits)); }
  double to_double() const;

  int compare(const Rational& q) const;
  int compare(const AlgebraicNumber& o) const;

  // Exact sign of q evaluated at this number.
  int sign_at(const QPoly& q) const;

  std::string to_string() const;

 private:
  std::vector<Integer> poly_;
  mutable Rational lo_, hi_;
  int sign_at_endpoint(const Rational& x) const;
};

// A real root with multiplicity; rational roots are reported exactly.
struct RealRoot {
  bool is_rational = true;
  Rational value;  // when rational
  std::vector<AlgebraicNumber> alg;  // one element when irrational
  unsigned multiplicity = 1;

  double approx() const { return is_rational ? to_double(value) : alg[0].to_double(); }
  int compare(const RealRoot& o) const;
};

// All real roots of f, ascending, with multiplicities from the square-free
// decomposition. Throws std::invalid_argument("indeterminate roots") on the
// zero polynomial.
std::vector<RealRoot> isolate_real_roots(const QPoly& f);

// Square-free part of f (product of distinct irreducible factors).
QPoly squarefree_part(const QPoly& f);

}  // namespace jetclass

#endif
