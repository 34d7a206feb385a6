#ifndef JETCLASS_IDEAL_HPP
#define JETCLASS_IDEAL_HPP

#include <optional>

#include "jetclass/jet.hpp"
#include "jetclass/matrix.hpp"

namespace jetclass {

// Finitely generated ideal of P_0^m(R^n), stored extensionally: a reduced
// row-echelon basis of its span over the canonical monomial basis.
class JetIdeal {
 public:
  explicit JetIdeal(RingSpec ring) : ring_(std::move(ring)) {}

  static JetIdeal generate(const RingSpec& ring, const std::vector<Jet>& gens);
  static JetIdeal zero_ideal(const RingSpec& ring) { return generate(ring, {}); }
  static JetIdeal full_ideal(const RingSpec& ring);
  // Span of the given jets, closed under nothing: only valid when the span is
  // already an ideal; generate() is the safe constructor.
  static JetIdeal from_span_unchecked(const RingSpec& ring, const std::vector<Jet>& span);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Jet>& generators() const { return generators_; }
  const std::vector<Jet>& basis() const { return basis_; }
  size_t dim() const { return basis_.size(); }

  bool contains(const Jet& p) const;
  bool operator==(const JetIdeal& o) const;
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ring_.dimension(); }

  // Minimal order of vanishing over nonzero members; nullopt for the zero ideal.
  std::optional<int> min_order() const;

  // Reduce p against the basis; the remainder is zero iff p is a member.
  Jet reduce(const Jet& p) const;

  // Substitute 0 for the variables outside keep (indices into 0..n-1) and
  // re-span in P_0^m(R^k).
  JetIdeal restrict_to(const std::vector<int>& keep) const;

  // View this ideal in a ring with one extra variable and adjoin that
  // coordinate as a generator.
  JetIdeal extend_with_coordinate() const;

  // The degree-d slice I ∩ {homogeneous of degree d}, as jets.
  std::vector<Jet> graded_slice(int d) const;
  // True when every basis element is homogeneous.
  bool is_graded() const;

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::vector<Jet> generators_;
  std::vector<Jet> basis_;  // rows of the RREF, as jets, in row order
  void set_basis_from_rows(ScalarMatrix m);
};

}  // namespace jetclass

#endif
