#ifndef JETCLASS_COORDCHANGE_HPP
#define JETCLASS_COORDCHANGE_HPP

#include "jetclass/jet.hpp"
#include "jetclass/matrix.hpp"

namespace jetclass {

// Origin-fixing polynomial map R^n -> R^n of degree <= m with invertible
// linear part. Acts on jets by truncated composition p -> J^m(p o phi).
class CoordinateChange {
 public:
  CoordinateChange() = default;
  // components[i] is the i-th coordinate function of the map.
  CoordinateChange(RingSpec ring, std::vector<Jet> components);

  static CoordinateChange identity(const RingSpec& ring);
  static CoordinateChange linear(const RingSpec& ring, const ScalarMatrix& matrix);
  static CoordinateChange scaling(const RingSpec& ring, const std::vector<Scalar>& factors);
  static CoordinateChange permutation(const RingSpec& ring, const std::vector<int>& perm);
  static CoordinateChange swap_vars(const RingSpec& ring, int a, int b);
  // x_target -> x_target + coef * mono, mono not involving x_target.
  static CoordinateChange shear(const RingSpec& ring, int target, const Monomial& mono,
                                const Scalar& coef);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Jet>& components() const { return components_; }
  const ScalarMatrix& linear_part() const { return linear_; }

  bool operator==(const CoordinateChange& o) const { return components_ == o.components_; }

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::vector<Jet> components_;
  ScalarMatrix linear_;
};

// J^m(p o phi).
Jet compose(const Jet& p, const CoordinateChange& phi);

// (phi o psi)(x) = phi(psi(x)), truncated at degree m.
CoordinateChange compose_changes(const CoordinateChange& phi, const CoordinateChange& psi);

// psi with compose_changes(phi, psi) = identity as an m-jet map.
// Throws std::domain_error on a singular linear part.
CoordinateChange truncated_inverse(const CoordinateChange& phi);

}  // namespace jetclass

#endif
