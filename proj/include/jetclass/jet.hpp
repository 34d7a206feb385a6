#ifndef JETCLASS_JET_HPP
#define JETCLASS_JET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetclass/scalar.hpp"

namespace jetclass {

// The ring P_0^m(R^n) of m-jets at the origin with no constant term.
struct RingSpec {
  int m = 1;
  int n = 1;
  std::vector<std::string> vars;

  RingSpec() = default;
  RingSpec(int m_, int n_);

  bool operator==(const RingSpec& o) const { return m == o.m && n == o.n; }
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  // Number of monomials of degree 1..m in n variables.
  size_t dimension() const;
  std::string to_string() const;
};

std::vector<std::string> default_var_names(int n);

struct Monomial {
  std::vector<int> e;

  explicit Monomial(int n) : e(n, 0) {}
  Monomial(std::initializer_list<int> l) : e(l) {}
  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  std::string to_string(const std::vector<std::string>& vars) const;
};

// Graded order: lower total degree first; within a degree, lexicographically
// larger exponent vector first (x1 before x2).
struct MonoCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  }
};

// Monomials of degree 1..m in n vars, in the canonical basis order.
std::vector<Monomial> monomial_basis(int m, int n);

class Jet {
 public:
  Jet() = default;
  explicit Jet(RingSpec ring) : ring_(std::move(ring)) {}

  static Jet variable(const RingSpec& ring, int i);
  static Jet monomial_jet(const RingSpec& ring, const Monomial& mono, Scalar coef = Scalar(1));

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar, MonoCmp>& terms() const { return terms_; }

  Scalar coeff(const Monomial& mono) const;
  void set_coeff(const Monomial& mono, const Scalar& c);

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator-() const;
  Jet operator*(const Jet& o) const;  // truncates above degree m
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  bool operator==(const Jet& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const Jet& o) const { return !(*this == o); }

  Jet scaled(const Scalar& s) const;

  // Order of vanishing: minimal degree of a nonzero homogeneous component,
  // std::nullopt ("more than m") for the zero jet.
  std::optional<int> order_of_vanishing() const;

  // Degree-k part.
  Jet homogeneous_part(int k) const;
  bool is_homogeneous() const;
  // Throws std::domain_error on the zero jet.
  std::pair<Jet, int> lowest_homogeneous_part() const;

  int max_degree() const;

  Scalar eval(const std::vector<Scalar>& point) const;
  double eval_double(const std::vector<double>& point) const;

  // Substitute substitution[i] for variable i, truncating above degree m.
  Jet substitute(const std::vector<Jet>& substitution) const;

  // Coefficient vector over the canonical monomial basis.
  std::vector<Scalar> coefficient_vector() const;
  static Jet from_coefficient_vector(const RingSpec& ring, const std::vector<Scalar>& v);

  bool has_rational_coefficients() const;

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::map<Monomial, Scalar, MonoCmp> terms_;
  void check_same_ring(const Jet& o) const;
};

// Parses a polynomial like "x^2 - 3/2*x*y + y^3" in the ring's variables.
// Rejects constant terms and monomials of degree > m.
Jet parse_jet(const RingSpec& ring, const std::string& text);

}  // namespace jetclass

#endif
