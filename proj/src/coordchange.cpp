#include "jetclass/coordchange.hpp"

#include <stdexcept>

namespace jetclass {

CoordinateChange::CoordinateChange(RingSpec ring, std::vector<Jet> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if ((int)components_.size() != ring_.n)
    throw std::invalid_argument("coordinate change needs one component per variable");
  linear_ = ScalarMatrix(ring_.n, ring_.n);
  for (int i = 0; i < ring_.n; ++i) {
    if (components_[i].ring() != ring_) throw std::invalid_argument("component ring mismatch");
    for (int j = 0; j < ring_.n; ++j) {
      Monomial mono(ring_.n);
      mono.e[j] = 1;
      linear_(i, j) = components_[i].coeff(mono);
    }
  }
  // Invertibility check.
  ScalarMatrix copy = linear_;
  if (rank_of(copy) != (size_t)ring_.n)
    throw std::domain_error("coordinate change has singular linear part");
}

CoordinateChange CoordinateChange::identity(const RingSpec& ring) {
  std::vector<Jet> comps;
  for (int i = 0; i < ring.n; ++i) comps.push_back(Jet::variable(ring, i));
  return CoordinateChange(ring, std::move(comps));
}

CoordinateChange CoordinateChange::linear(const RingSpec& ring, const ScalarMatrix& matrix) {
  if (matrix.rows() != (size_t)ring.n || matrix.cols() != (size_t)ring.n)
    throw std::invalid_argument("linear part shape mismatch");
  std::vector<Jet> comps;
  for (int i = 0; i < ring.n; ++i) {
    Jet c(ring);
    for (int j = 0; j < ring.n; ++j) {
      Monomial mono(ring.n);
      mono.e[j] = 1;
      if (!(matrix(i, j) == Scalar(0))) c.set_coeff(mono, matrix(i, j));
    }
    comps.push_back(std::move(c));
  }
  return CoordinateChange(ring, std::move(comps));
}

CoordinateChange CoordinateChange::scaling(const RingSpec& ring, const std::vector<Scalar>& factors) {
  ScalarMatrix m(ring.n, ring.n);
  for (int i = 0; i < ring.n; ++i) m(i, i) = factors[i];
  return linear(ring, m);
}

CoordinateChange CoordinateChange::permutation(const RingSpec& ring, const std::vector<int>& perm) {
  // x_i -> x_{perm[i]}
  ScalarMatrix m(ring.n, ring.n);
  for (int i = 0; i < ring.n; ++i) m(i, perm[i]) = Scalar(1);
  return linear(ring, m);
}

CoordinateChange CoordinateChange::swap_vars(const RingSpec& ring, int a, int b) {
  std::vector<int> perm(ring.n);
  for (int i = 0; i < ring.n; ++i) perm[i] = i;
  std::swap(perm[a], perm[b]);
  return permutation(ring, perm);
}

CoordinateChange CoordinateChange::shear(const RingSpec& ring, int target, const Monomial& mono,
                                         const Scalar& coef) {
  if (mono.e[target] != 0) throw std::invalid_argument("shear monomial must not involve the target");
  std::vector<Jet> comps;
  for (int i = 0; i < ring.n; ++i) comps.push_back(Jet::variable(ring, i));
  comps[target] += Jet::monomial_jet(ring, mono, coef);
  return CoordinateChange(ring, std::move(comps));
}

std::string CoordinateChange::to_string() const {
  std::string s = "(";
  for (int i = 0; i < ring_.n; ++i) {
    if (i) s += ", ";
    s += ring_.vars[i] + " -> " + components_[i].to_string();
  }
  return s + ")";
}

Jet compose(const Jet& p, const CoordinateChange& phi) {
  if (p.ring().n != phi.ring().n) throw std::invalid_argument("compose dimension mismatch");
  if (p.ring() != phi.ring()) throw std::invalid_argument("compose ring mismatch");
  return p.substitute(phi.components());
}

CoordinateChange compose_changes(const CoordinateChange& phi, const CoordinateChange& psi) {
  if (phi.ring() != psi.ring()) throw std::invalid_argument("compose_changes ring mismatch");
  std::vector<Jet> comps;
  for (auto& c : phi.components()) comps.push_back(c.substitute(psi.components()));
  return CoordinateChange(phi.ring(), std::move(comps));
}

CoordinateChange truncated_inverse(const CoordinateChange& phi) {
  const RingSpec& ring = phi.ring();
  ScalarMatrix linv = inverse(phi.linear_part());
  CoordinateChange psi = CoordinateChange::linear(ring, linv);
  if (ring.m == 1) return psi;

  // phi = L + H with H of order >= 2; iterate psi <- Linv o (id - H o psi).
  std::vector<Jet> higher;
  for (int i = 0; i < ring.n; ++i) {
    Jet h = phi.components()[i];
    for (int j = 0; j < ring.n; ++j) {
      Monomial mono(ring.n);
      mono.e[j] = 1;
      Scalar c = h.coeff(mono);
      if (!c.is_zero()) h -= Jet::monomial_jet(ring, mono, c);
    }
    higher.push_back(std::move(h));
  }
  for (int iter = 1; iter < ring.m; ++iter) {
    std::vector<Jet> comps;
    for (int i = 0; i < ring.n; ++i) {
      Jet acc = Jet::variable(ring, i);
      if (!higher[i].is_zero()) acc -= higher[i].substitute(psi.components());
      comps.push_back(std::move(acc));
    }
    // Apply Linv row-wise.
    std::vector<Jet> out;
    for (int i = 0; i < ring.n; ++i) {
      Jet acc(ring);
      for (int j = 0; j < ring.n; ++j) {
        if (linv(i, j) == Scalar(0)) continue;
        acc += comps[j].scaled(linv(i, j));
      }
      out.push_back(std::move(acc));
    }
    psi = CoordinateChange(ring, std::move(out));
  }
  return psi;
}

}  // namespace jetclass
