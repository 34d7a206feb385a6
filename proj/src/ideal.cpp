#include "jetclass/ideal.hpp"

#include <stdexcept>

namespace jetclass {

void JetIdeal::set_basis_from_rows(ScalarMatrix m) {
  auto [rank, piv] = rref_inplace(m);
  (void)piv;
  basis_.clear();
  auto monos = monomial_basis(ring_.m, ring_.n);
  for (size_t r = 0; r < rank; ++r) {
    std::vector<Scalar> row(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) row[j] = m(r, j);
    basis_.push_back(Jet::from_coefficient_vector(ring_, row));
  }
}

JetIdeal JetIdeal::generate(const RingSpec& ring, const std::vector<Jet>& gens) {
  JetIdeal ideal(ring);
  std::vector<Jet> products;
  std::vector<Monomial> mults;
  mults.push_back(Monomial(ring.n));  // the unit multiplier
  for (auto& mono : monomial_basis(ring.m - 1 >= 1 ? ring.m - 1 : 0, ring.n)) mults.push_back(mono);
  for (auto& g : gens) {
    if (g.ring() != ring) throw std::invalid_argument("generator ring mismatch");
    if (g.is_zero()) continue;
    ideal.generators_.push_back(g);
    for (auto& mult : mults) {
      if (mult.degree() == 0) {
        products.push_back(g);
      } else {
        Jet p = g * Jet::monomial_jet(ring, mult);
        if (!p.is_zero()) products.push_back(p);
      }
    }
  }
  ScalarMatrix m(products.size(), ring.dimension());
  for (size_t i = 0; i < products.size(); ++i) {
    auto v = products[i].coefficient_vector();
    for (size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  ideal.set_basis_from_rows(std::move(m));
  return ideal;
}

JetIdeal JetIdeal::full_ideal(const RingSpec& ring) {
  std::vector<Jet> gens;
  for (int i = 0; i < ring.n; ++i) gens.push_back(Jet::variable(ring, i));
  return generate(ring, gens);
}

JetIdeal JetIdeal::from_span_unchecked(const RingSpec& ring, const std::vector<Jet>& span) {
  JetIdeal ideal(ring);
  ideal.generators_ = span;
  ScalarMatrix m(span.size(), ring.dimension());
  for (size_t i = 0; i < span.size(); ++i) {
    auto v = span[i].coefficient_vector();
    for (size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  ideal.set_basis_from_rows(std::move(m));
  return ideal;
}

Jet JetIdeal::reduce(const Jet& p) const {
  if (p.ring() != ring_) throw std::invalid_argument("membership ring mismatch");
  Jet r = p;
  for (auto& b : basis_) {
    if (r.is_zero()) break;
    // Basis rows are RREF: eliminate the pivot monomial of b from r.
    const Monomial& lead = b.terms().begin()->first;
    Scalar c = r.coeff(lead);
    if (!c.is_zero()) r -= b.scaled(c);
  }
  return r;
}

bool JetIdeal::contains(const Jet& p) const { return reduce(p).is_zero(); }

bool JetIdeal::operator==(const JetIdeal& o) const {
  // RREF is canonical for a subspace.
  return ring_ == o.ring_ && basis_ == o.basis_;
}

std::optional<int> JetIdeal::min_order() const {
  std::optional<int> best;
  for (auto& b : basis_) {
    int d = b.terms().begin()->first.degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

JetIdeal JetIdeal::restrict_to(const std::vector<int>& keep) const {
  if (keep.empty()) throw std::invalid_argument("restriction needs a nonempty variable set");
  RingSpec small(ring_.m, (int)keep.size());
  auto restrict_jet = [&](const Jet& p) {
    Jet out(small);
    for (auto& [mono, c] : p.terms()) {
      bool outside = false;
      std::vector<bool> kept(ring_.n, false);
      for (int k : keep) kept[k] = true;
      for (int i = 0; i < ring_.n; ++i)
        if (mono.e[i] > 0 && !kept[i]) outside = true;
      if (outside) continue;
      Monomial mo(small.n);
      for (size_t k = 0; k < keep.size(); ++k) mo.e[k] = mono.e[keep[k]];
      out += Jet::monomial_jet(small, mo, c);
    }
    return out;
  };
  std::vector<Jet> rows;
  for (auto& b : basis_) {
    Jet r = restrict_jet(b);
    if (!r.is_zero()) rows.push_back(r);
  }
  JetIdeal out = from_span_unchecked(small, rows);
  out.generators_.clear();
  for (auto& g : generators_) {
    Jet r = restrict_jet(g);
    if (!r.is_zero()) out.generators_.push_back(r);
  }
  return out;
}

JetIdeal JetIdeal::extend_with_coordinate() const {
  RingSpec big(ring_.m, ring_.n + 1);
  std::vector<Jet> gens;
  for (auto& g : generators_.empty() ? basis_ : generators_) {
    Jet e(big);
    for (auto& [mono, c] : g.terms()) {
      Monomial mo(big.n);
      for (int i = 0; i < ring_.n; ++i) mo.e[i] = mono.e[i];
      e += Jet::monomial_jet(big, mo, c);
    }
    gens.push_back(e);
  }
  gens.push_back(Jet::variable(big, big.n - 1));
  return generate(big, gens);
}

std::vector<Jet> JetIdeal::graded_slice(int d) const {
  if (basis_.empty()) return {};
  // Combinations c of basis rows whose coefficients vanish outside degree d:
  // c lies in the null space of M_outside^T.
  auto monos = monomial_basis(ring_.m, ring_.n);
  std::vector<size_t> outside;
  for (size_t j = 0; j < monos.size(); ++j)
    if (monos[j].degree() != d) outside.push_back(j);
  size_t k = basis_.size();
  std::vector<std::vector<Scalar>> rowvecs;
  for (auto& b : basis_) rowvecs.push_back(b.coefficient_vector());
  ScalarMatrix mt(outside.size(), k);
  for (size_t a = 0; a < outside.size(); ++a)
    for (size_t r = 0; r < k; ++r) mt(a, r) = rowvecs[r][outside[a]];
  std::vector<Jet> out;
  for (auto& c : null_space(mt)) {
    Jet e(ring_);
    for (size_t r = 0; r < k; ++r)
      if (!(c[r] == Scalar(0))) e += basis_[r].scaled(c[r]);
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

bool JetIdeal::is_graded() const {
  for (auto& b : basis_)
    if (!b.is_homogeneous()) return false;
  return true;
}

std::string JetIdeal::to_string() const {
  std::string s = "<";
  const std::vector<Jet>& shown = generators_.empty() ? basis_ : generators_;
  for (size_t i = 0; i < shown.size(); ++i) {
    if (i) s += ", ";
    s += shown[i].to_string();
  }
  return s + ">";
}

}  // namespace jetclass
