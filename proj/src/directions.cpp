#include "jetclass/directions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace jetclass {

namespace {

std::vector<Scalar> canonical_ray(std::vector<Scalar> v) {
  size_t lead = v.size();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == v.size()) throw std::logic_error("zero ray");
  Scalar inv = v[lead].inverse();
  for (auto& x : v) x = x * inv;
  return v;
}

// Canonical 2-plane representation: RREF rows of the basis matrix.
std::vector<std::vector<Scalar>> canonical_plane(const std::vector<std::vector<Scalar>>& basis) {
  ScalarMatrix m(basis.size(), basis[0].size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis[i].size(); ++j) m(i, j) = basis[i][j];
  rref_inplace(m);
  std::vector<std::vector<Scalar>> out;
  for (size_t i = 0; i < basis.size(); ++i) {
    std::vector<Scalar> row(basis[0].size());
    bool nonzero = false;
    for (size_t j = 0; j < row.size(); ++j) {
      row[j] = m(i, j);
      nonzero = nonzero || !row[j].is_zero();
    }
    if (nonzero) out.push_back(std::move(row));
  }
  return out;
}

bool ray_in_span(const std::vector<Scalar>& ray, const std::vector<std::vector<Scalar>>& span) {
  ScalarMatrix m(span.size() + 1, ray.size());
  for (size_t i = 0; i < span.size(); ++i)
    for (size_t j = 0; j < ray.size(); ++j) m(i, j) = span[i][j];
  for (size_t j = 0; j < ray.size(); ++j) m(span.size(), j) = ray[j];
  ScalarMatrix base(span.size(), ray.size());
  for (size_t i = 0; i < span.size(); ++i)
    for (size_t j = 0; j < ray.size(); ++j) base(i, j) = span[i][j];
  return rank_of(m) == rank_of(base);
}

// ---------- binary (two-variable) systems ----------

struct BinarySolution {
  bool whole_circle = false;
  // Finite solutions as (slope, 1) plus possibly the infinite direction (1, 0).
  std::vector<Rational> rational_slopes;
  std::vector<AlgebraicNumber> algebraic_slopes;
  bool at_infinity = false;
};

// f(u, 1) as a univariate polynomial in u; requires rational coefficients.
QPoly dehomogenize(const Jet& form) {
  QPoly p;
  for (auto& [mono, c] : form.terms()) {
    if (!c.is_rational()) throw UnsupportedVarietyError("irrational coefficients in direction form");
    size_t k = (size_t)mono.e[0];
    if (p.c.size() <= k) p.c.resize(k + 1, Rational(0));
    p.c[k] += c.rational_value();
  }
  p.trim();
  return p;
}

// Coefficient of u^deg(form) (value at the direction (1,0)).
Rational coeff_at_infinity(const Jet& form) {
  int d = form.terms().begin()->first.degree();
  Monomial pure(2);
  pure.e[0] = d;
  Scalar c = form.coeff(pure);
  if (!c.is_rational()) throw UnsupportedVarietyError("irrational coefficients in direction form");
  return c.rational_value();
}

BinarySolution solve_binary(const std::vector<Jet>& forms_in) {
  std::vector<Jet> forms;
  for (auto& f : forms_in)
    if (!f.is_zero()) forms.push_back(f);
  BinarySolution out;
  if (forms.empty()) {
    out.whole_circle = true;
    return out;
  }
  // Candidates from the first form, filtered by the rest.
  const Jet& f0 = forms[0];
  QPoly p0 = dehomogenize(f0);
  std::vector<QPoly> others;
  std::vector<Rational> others_inf;
  for (size_t i = 1; i < forms.size(); ++i) {
    others.push_back(dehomogenize(forms[i]));
    others_inf.push_back(coeff_at_infinity(forms[i]));
  }
  if (coeff_at_infinity(f0) == 0) {
    bool ok = true;
    for (auto& c : others_inf) ok = ok && c == 0;
    if (ok) out.at_infinity = true;
  }
  if (!p0.is_zero() && p0.degree() >= 1) {
    for (auto& root : isolate_real_roots(p0)) {
      if (root.is_rational) {
        bool ok = true;
        for (auto& q : others) ok = ok && q.eval(root.value) == 0;
        if (ok) out.rational_slopes.push_back(root.value);
      } else {
        bool ok = true;
        for (auto& q : others) ok = ok && root.alg[0].sign_at(q) == 0;
        if (ok) out.algebraic_slopes.push_back(root.alg[0]);
      }
    }
  }
  // p0 constant and nonzero: only the at-infinity candidate may survive; a
  // zero p0 with nonzero form means the form is u^d * c: slope 0 line only.
  if (p0.is_zero()) {
    // form = c*u^d: vanishes on u = 0.
    bool ok = true;
    for (auto& q : others) ok = ok && (q.is_zero() || q.eval(Rational(0)) == 0);
    if (ok) out.rational_slopes.push_back(Rational(0));
  }
  return out;
}

// ---------- three-variable quadric systems ----------

RationalMatrix form_matrix(const Jet& form) {
  int n = form.ring().n;
  RationalMatrix q(n, n);
  for (auto& [mono, c] : form.terms()) {
    if (!c.is_rational()) throw UnsupportedVarietyError("irrational quadric coefficients");
    Rational r = c.rational_value();
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (mono.e[i] == 2) a = b = i;
      else if (mono.e[i] == 1) (a < 0 ? a : b) = i;
    }
    if (a == b) q(a, a) = r;
    else {
      q(a, b) = r / 2;
      q(b, a) = r / 2;
    }
  }
  return q;
}

struct Solve3 {
  std::vector<DirectionPoint> points;
  std::vector<CurveComponent> curves;
};

Jet restrict_to_plane(const Jet& form, const std::vector<Scalar>& b0, const std::vector<Scalar>& b1) {
  RingSpec plane_ring(form.ring().m, 2);
  std::vector<Jet> subs;
  for (int i = 0; i < form.ring().n; ++i) {
    Jet s(plane_ring);
    if (!b0[i].is_zero()) s += Jet::variable(plane_ring, 0).scaled(b0[i]);
    if (!b1[i].is_zero()) s += Jet::variable(plane_ring, 1).scaled(b1[i]);
    subs.push_back(std::move(s));
  }
  return form.substitute(subs);
}

bool all_rational(const std::vector<Scalar>& v) {
  for (auto& x : v)
    if (!x.is_rational()) return false;
  return true;
}

// Solve the full system restricted to the plane span{b0, b1}; exact.
void solve_on_plane(const std::vector<Jet>& forms, const std::vector<Scalar>& b0,
                    const std::vector<Scalar>& b1, Solve3& out) {
  std::vector<Jet> restricted;
  bool all_zero = true;
  for (auto& f : forms) {
    Jet r = restrict_to_plane(f, b0, b1);
    all_zero = all_zero && r.is_zero();
    restricted.push_back(std::move(r));
  }
  if (all_zero) {
    CurveComponent c;
    c.kind = CurveKind::great_circle;
    c.plane_basis = {b0, b1};
    out.curves.push_back(std::move(c));
    return;
  }
  if (!all_rational(b0) || !all_rational(b1))
    throw UnsupportedVarietyError("nontrivial system on an irrational plane");
  BinarySolution sol = solve_binary(restricted);
  if (sol.whole_circle) throw std::logic_error("inconsistent plane restriction");
  auto combine = [&](const Scalar& s, const Scalar& t) {
    std::vector<Scalar> ray(3);
    for (int i = 0; i < 3; ++i) ray[i] = b0[i] * s + b1[i] * t;
    return ray;
  };
  for (auto& u : sol.rational_slopes) {
    DirectionPoint p;
    p.ray = canonical_ray(combine(Scalar(u), Scalar(1)));
    out.points.push_back(std::move(p));
  }
  if (sol.at_infinity) {
    DirectionPoint p;
    p.ray = canonical_ray(combine(Scalar(1), Scalar(0)));
    out.points.push_back(std::move(p));
  }
  for (auto& alg : sol.algebraic_slopes) {
    DirectionPoint p;
    p.embed_basis = {b0, b1};
    p.slope = alg;
    out.points.push_back(std::move(p));
  }
}

std::vector<std::vector<Scalar>> rational_plane_basis_from_normal(const std::vector<Rational>& normal) {
  RationalMatrix m(1, 3);
  for (int j = 0; j < 3; ++j) m(0, j) = normal[j];
  auto basis = null_space(m);
  std::vector<std::vector<Scalar>> out;
  for (auto& v : basis) {
    std::vector<Scalar> w;
    for (auto& q : v) w.push_back(Scalar(q));
    out.push_back(std::move(w));
  }
  return out;
}

// Try to decompose the zero set of a single rank<=2 quadric; on success solve
// the whole system on each component and return true.
bool try_split(const std::vector<Jet>& forms, const RationalMatrix& q, Solve3& out) {
  RationalMatrix copy = q;
  size_t r = rank_of(copy);
  if (r == 0 || r == 3) return false;
  if (r == 1) {
    std::vector<Rational> v(3);
    for (size_t i = 0; i < 3; ++i) {
      bool nonzero = false;
      for (size_t j = 0; j < 3; ++j) nonzero = nonzero || q(i, j) != 0;
      if (nonzero) {
        for (size_t j = 0; j < 3; ++j) v[j] = q(i, j);
        break;
      }
    }
    auto basis = rational_plane_basis_from_normal(v);
    solve_on_plane(forms, basis[0], basis[1], out);
    return true;
  }
  // rank 2: kernel line plus a nondegenerate binary restriction.
  auto ker = null_space(q);
  std::vector<Rational> k = ker[0];
  // Complement pair of coordinate vectors.
  int a = -1, b = -1;
  for (int i = 0; i < 3 && a < 0; ++i)
    for (int j = i + 1; j < 3; ++j) {
      RationalMatrix t(3, 3);
      for (int c = 0; c < 3; ++c) {
        t(0, c) = k[c];
        t(1, c) = c == i ? 1 : 0;
        t(2, c) = c == j ? 1 : 0;
      }
      if (rank_of(t) == 3) {
        a = i;
        b = j;
        break;
      }
    }
  Rational r00 = q(a, a), r01 = q(a, b), r11 = q(b, b);
  Rational det = r00 * r11 - r01 * r01;
  auto scalar_vec = [](const std::vector<Rational>& v) {
    std::vector<Scalar> w;
    for (auto& x : v) w.push_back(Scalar(x));
    return w;
  };
  if (det > 0) {
    // Zero set is the kernel line.
    bool on_all = true;
    std::vector<Scalar> ray = scalar_vec(k);
    for (auto& f : forms) on_all = on_all && f.eval(ray).is_zero();
    if (on_all) {
      DirectionPoint p;
      p.ray = canonical_ray(ray);
      out.points.push_back(std::move(p));
    }
    return true;
  }
  // Indefinite restriction: two planes span{k, d} with d a root direction of
  // r00 u^2 + 2 r01 u + r11 in d = u e_a + e_b (plus e_a when r00 = 0).
  std::vector<std::vector<Scalar>> dirs;
  if (r00 == 0) {
    std::vector<Scalar> da(3, Scalar(0));
    da[a] = Scalar(1);
    dirs.push_back(da);
    if (r01 != 0) {
      std::vector<Scalar> d(3, Scalar(0));
      Rational u = -r11 / (2 * r01);
      d[a] = Scalar(u);
      d[b] = Scalar(1);
      dirs.push_back(d);
    }
  } else {
    Rational disc = r01 * r01 - r00 * r11;  // > 0 here
    Integer nn = num(disc), dd = den(disc);
    Integer sn = boost::multiprecision::sqrt(nn), sd = boost::multiprecision::sqrt(dd);
    bool square = sn * sn == nn && sd * sd == dd;
    if (square) {
      for (int s : {1, -1}) {
        Rational u = (-r01 + s * Rational(sn, sd)) / r00;
        std::vector<Scalar> d(3, Scalar(0));
        d[a] = Scalar(u);
        d[b] = Scalar(1);
        dirs.push_back(d);
      }
    } else {
      Scalar root = Scalar::sqrt_of(disc);
      for (int s : {1, -1}) {
        Scalar u = (Scalar(-r01) + (s > 0 ? root : -root)) * Scalar(Rational(1) / r00);
        std::vector<Scalar> d(3, Scalar(0));
        d[a] = u;
        d[b] = Scalar(1);
        dirs.push_back(d);
      }
    }
  }
  std::vector<Scalar> ks = scalar_vec(k);
  for (auto& d : dirs) solve_on_plane(forms, ks, d, out);
  return true;
}

// Rational-root sweep through the pencil det(l*Qi + Qj).
std::vector<RationalMatrix> pencil_candidates(const std::vector<RationalMatrix>& mats) {
  std::vector<RationalMatrix> out = mats;
  auto det3 = [](const RationalMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  };
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = 0; j < mats.size(); ++j) {
      if (i == j) continue;
      // det(l*A + B) as a cubic in l.
      QPoly p;
      p.c.assign(4, Rational(0));
      // Evaluate at 4 points and interpolate (degree <= 3).
      std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1), Rational(2)};
      std::vector<Rational> ys;
      for (auto& x : xs) {
        RationalMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) m(r, c) = x * mats[i](r, c) + mats[j](r, c);
        ys.push_back(det3(m));
      }
      // Lagrange interpolation.
      QPoly acc;
      for (size_t t = 0; t < xs.size(); ++t) {
        QPoly term;
        term.c = {Rational(1)};
        Rational denom(1);
        for (size_t s = 0; s < xs.size(); ++s) {
          if (s == t) continue;
          QPoly lin;
          lin.c = {-xs[s], Rational(1)};
          term = term * lin;
          denom *= xs[t] - xs[s];
        }
        for (auto& c : term.c) c *= ys[t] / denom;
        acc = acc + term;
      }
      acc.trim();
      if (acc.is_zero()) continue;
      if (acc.degree() >= 1) {
        for (auto& root : isolate_real_roots(acc)) {
          if (!root.is_rational) continue;
          RationalMatrix m(3, 3);
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = root.value * mats[i](r, c) + mats[j](r, c);
          out.push_back(std::move(m));
        }
      }
    }
  return out;
}

QPoly resultant_in_second(const std::vector<QPoly>& f, const std::vector<QPoly>& g);

// f(x, y) with z = 1 as coefficients-in-x arrays indexed by y-degree.
std::vector<QPoly> affine_in_y(const Jet& form) {
  std::vector<QPoly> out(3);
  for (auto& [mono, c] : form.terms()) {
    int ex = mono.e[0], ey = mono.e[1];
    QPoly& p = out[ey];
    if ((int)p.c.size() <= ex) p.c.resize(ex + 1, Rational(0));
    p.c[ex] += c.rational_value();
  }
  for (auto& p : out) p.trim();
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

QPoly resultant_in_second(const std::vector<QPoly>& f, const std::vector<QPoly>& g) {
  int df = (int)f.size() - 1, dg = (int)g.size() - 1;
  if (df == 0 || dg == 0) throw std::logic_error("resultant of constant");
  int n = df + dg;
  // Sylvester matrix over QPoly; determinant by cofactor expansion.
  std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) m[r][r + (df - k)] = f[k];
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) m[dg + r][r + (dg - k)] = g[k];
  std::function<QPoly(std::vector<std::vector<QPoly>>&)> det = [&](std::vector<std::vector<QPoly>>& a) {
    size_t sz = a.size();
    if (sz == 1) return a[0][0];
    QPoly acc;
    for (size_t i = 0; i < sz; ++i) {
      if (a[i][0].is_zero()) continue;
      std::vector<std::vector<QPoly>> minor;
      for (size_t r = 0; r < sz; ++r) {
        if (r == i) continue;
        minor.push_back(std::vector<QPoly>(a[r].begin() + 1, a[r].end()));
      }
      QPoly sub = det(minor);
      QPoly term = a[i][0] * sub;
      if (i % 2 == 1)
        for (auto& c : term.c) c = -c;
      acc = acc + term;
    }
    return acc;
  };
  return det(m);
}

Solve3 solve_quadrics(const std::vector<Jet>& forms) {
  Solve3 out;
  std::vector<RationalMatrix> mats;
  for (auto& f : forms) mats.push_back(form_matrix(f));

  for (auto& cand : pencil_candidates(mats)) {
    Solve3 attempt;
    try {
      if (try_split(forms, cand, attempt)) return attempt;
    } catch (const UnsupportedVarietyError&) {
      // An irrational plane carried a nontrivial residual system; another
      // candidate or the rational sweep may still decide the variety.
    }
  }

  if (forms.size() == 1) {
    auto sig = signature(mats[0]);
    if (sig.zeros == 0 && (sig.positives == 0 || sig.negatives == 0)) return out;  // definite: empty
    // rank 3 indefinite: a cone; rank <= 2 was handled by try_split.
    CurveComponent c;
    c.kind = CurveKind::conic;
    c.conic = mats[0];
    out.curves.push_back(std::move(c));
    return out;
  }

  // No splittable element: finite variety; sweep the z = 0 section and the
  // rational x-roots of the z = 1 eliminant.
  {
    std::vector<Scalar> e1 = {Scalar(1), Scalar(0), Scalar(0)};
    std::vector<Scalar> e2 = {Scalar(0), Scalar(1), Scalar(0)};
    solve_on_plane(forms, e1, e2, out);
  }
  auto fy = affine_in_y(forms[0]);
  auto gy = affine_in_y(forms[1]);
  QPoly eliminant;
  if (fy.size() == 1) eliminant = fy[0];
  else if (gy.size() == 1) eliminant = gy[0];
  else eliminant = resultant_in_second(fy, gy);
  if (eliminant.is_zero())
    throw UnsupportedVarietyError("quadric system with a shared component and no rational splitting");
  if (eliminant.degree() >= 1) {
    for (auto& root : isolate_real_roots(eliminant)) {
      if (!root.is_rational)
        throw UnsupportedVarietyError("irrational eliminant root in quadric system");
      // All solutions with x = x0 * z lie on the rational plane span{(x0,0,1),(0,1,0)}.
      std::vector<Scalar> b0 = {Scalar(root.value), Scalar(0), Scalar(1)};
      std::vector<Scalar> b1 = {Scalar(0), Scalar(1), Scalar(0)};
      Solve3 sub;
      solve_on_plane(forms, b0, b1, sub);
      if (!sub.curves.empty()) throw std::logic_error("unexpected curve in finite sweep");
      for (auto& p : sub.points) {
        // Keep only z != 0 representatives; z = 0 was already covered.
        out.points.push_back(p);
      }
    }
  }
  return out;
}

void dedupe(DirectionReport& rep) {
  // Curves first.
  std::vector<CurveComponent> curves;
  for (auto& c : rep.curves) {
    if (c.kind == CurveKind::great_circle) c.plane_basis = canonical_plane(c.plane_basis);
    bool dup = false;
    for (auto& d : curves)
      dup = dup || (c.kind == d.kind && c.plane_basis == d.plane_basis &&
                    (c.kind != CurveKind::conic || c.conic == d.conic));
    if (!dup) curves.push_back(c);
  }
  rep.curves = std::move(curves);
  std::vector<DirectionPoint> pts;
  for (auto& p : rep.points) {
    bool absorbed = false;
    for (auto& c : rep.curves) {
      if (c.kind == CurveKind::full_sphere) absorbed = true;
      if (c.kind != CurveKind::great_circle) continue;
      if (!p.embedded() && ray_in_span(p.ray, c.plane_basis)) absorbed = true;
      if (p.embedded()) {
        auto cp = canonical_plane(p.embed_basis);
        if (cp == c.plane_basis) absorbed = true;
      }
    }
    if (absorbed) continue;
    bool dup = false;
    for (auto& q : pts) {
      if (!p.embedded() && !q.embedded()) {
        dup = dup || p.ray == q.ray;
      } else if (p.embedded() && q.embedded()) {
        if (canonical_plane(p.embed_basis) == canonical_plane(q.embed_basis) &&
            p.slope->compare(*q.slope) == 0)
          dup = true;
      }
    }
    if (!dup) pts.push_back(p);
  }
  rep.points = std::move(pts);
}

int compute_span(const DirectionReport& rep, int n) {
  for (auto& c : rep.curves)
    if (c.kind == CurveKind::full_sphere || c.kind == CurveKind::conic) return n;
  std::vector<std::vector<Scalar>> rows;
  for (auto& c : rep.curves)
    for (auto& b : c.plane_basis) rows.push_back(b);
  std::vector<const DirectionPoint*> singles;
  for (auto& p : rep.points) {
    if (!p.embedded()) {
      rows.push_back(p.ray);
      continue;
    }
    singles.push_back(&p);
  }
  // Embedded points with a shared plane and distinct slopes span their plane.
  for (size_t i = 0; i < singles.size(); ++i)
    for (size_t j = i + 1; j < singles.size(); ++j) {
      if (canonical_plane(singles[i]->embed_basis) == canonical_plane(singles[j]->embed_basis)) {
        for (auto& b : singles[i]->embed_basis) rows.push_back(b);
      }
    }
  auto rank_rows = [&](const std::vector<std::vector<Scalar>>& rs) {
    if (rs.empty()) return (size_t)0;
    ScalarMatrix m(rs.size(), n);
    for (size_t i = 0; i < rs.size(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rs[i][j];
    return rank_of(m);
  };
  size_t r = rank_rows(rows);
  // A lone irrational point inside a rational plane adds one dimension unless
  // its plane already lies in the span.
  int extra = 0;
  for (auto* p : singles) {
    auto with_plane = rows;
    for (auto& b : p->embed_basis) with_plane.push_back(b);
    if (rank_rows(with_plane) > r) ++extra;
  }
  if (extra > 1)
    throw UnsupportedVarietyError("span of multiple isolated irrational directions");
  return std::min((int)r + extra, n);
}

}  // namespace

std::vector<double> DirectionPoint::unit() const {
  std::vector<double> v;
  if (!embedded()) {
    for (auto& s : ray) v.push_back(s.to_double());
  } else {
    double t = slope->to_double();
    for (size_t i = 0; i < embed_basis[0].size(); ++i)
      v.push_back(embed_basis[0][i].to_double() * t + embed_basis[1][i].to_double());
  }
  double norm = 0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  for (double x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (double& y : v) y = -y;
      break;
    }
  }
  return v;
}

std::string DirectionPoint::to_string() const {
  std::string s = "(";
  if (!embedded()) {
    for (size_t i = 0; i < ray.size(); ++i) {
      if (i) s += ", ";
      s += ray[i].to_string();
    }
    return s + ")";
  }
  auto u = unit();
  char buf[64];
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += ", ";
    snprintf(buf, sizeof buf, "%.6f", u[i]);
    s += buf;
  }
  return s + ") [" + slope->to_string() + "]";
}

std::string CurveComponent::to_string(const RingSpec& ring) const {
  if (kind == CurveKind::full_sphere) return "S^" + std::to_string(ring.n - 1);
  if (kind == CurveKind::conic) {
    std::string s = "conic {";
    bool first = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Rational c = i == j ? conic(i, i) : conic(i, j) * 2;
        if (c == 0) continue;
        if (!first) s += " + ";
        first = false;
        s += rational_to_string(c) + "*" + ring.vars[i] + (i == j ? "^2" : "*" + ring.vars[j]);
      }
    return s + " = 0}";
  }
  std::string s = "circle span{";
  for (size_t k = 0; k < plane_basis.size(); ++k) {
    if (k) s += "; ";
    s += "(";
    for (size_t i = 0; i < plane_basis[k].size(); ++i) {
      if (i) s += ", ";
      s += plane_basis[k][i].to_string();
    }
    s += ")";
  }
  return s + "}";
}

bool is_forbidden(const Jet& p, const std::vector<Scalar>& ray) {
  if (p.is_zero()) throw std::domain_error("is_forbidden: zero jet");
  auto [low, k] = p.lowest_homogeneous_part();
  (void)k;
  return !low.eval(ray).is_zero();
}

DirectionReport allow_exact(const JetIdeal& ideal) {
  const RingSpec& ring = ideal.ring();
  int n = ring.n;
  if (n > 3) throw UnsupportedVarietyError("allow_exact supports n <= 3");
  DirectionReport rep;

  if (ideal.basis().empty()) {
    CurveComponent c;
    c.kind = CurveKind::full_sphere;
    rep.curves.push_back(c);
    rep.span_dim = n;
    return rep;
  }

  std::vector<Jet> forms;
  rep.exact = true;
  for (auto& b : ideal.basis()) {
    if (b.is_homogeneous()) {
      forms.push_back(b);
    } else {
      rep.exact = false;
      forms.push_back(b.lowest_homogeneous_part().first);
    }
  }

  if (n == 1) {
    // A nonzero form c*t^k never vanishes at t = +-1.
    rep.span_dim = 0;
    return rep;
  }

  if (n == 2) {
    BinarySolution sol = solve_binary(forms);
    if (sol.whole_circle) {
      CurveComponent c;
      c.kind = CurveKind::full_sphere;
      rep.curves.push_back(c);
    }
    for (auto& u : sol.rational_slopes) {
      DirectionPoint p;
      p.ray = canonical_ray({Scalar(u), Scalar(1)});
      rep.points.push_back(std::move(p));
    }
    if (sol.at_infinity) {
      DirectionPoint p;
      p.ray = {Scalar(1), Scalar(0)};
      rep.points.push_back(std::move(p));
    }
    for (auto& alg : sol.algebraic_slopes) {
      DirectionPoint p;
      p.embed_basis = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
      p.slope = alg;
      rep.points.push_back(std::move(p));
    }
    dedupe(rep);
    rep.span_dim = compute_span(rep, n);
    return rep;
  }

  // n == 3. Peel off linear forms first.
  std::vector<Jet> linear, rest;
  for (auto& f : forms) {
    int d = f.terms().begin()->first.degree();
    if (d == 1) linear.push_back(f);
    else rest.push_back(f);
  }
  if (!linear.empty()) {
    RationalMatrix lm(linear.size(), 3);
    for (size_t i = 0; i < linear.size(); ++i) {
      auto q = linear[i];
      for (int j = 0; j < 3; ++j) {
        Monomial mono(3);
        mono.e[j] = 1;
        Scalar c = q.coeff(mono);
        if (!c.is_rational()) throw UnsupportedVarietyError("irrational linear form");
        lm(i, j) = c.rational_value();
      }
    }
    auto ker = null_space(lm);
    if (ker.empty()) {
      rep.span_dim = 0;
      return rep;
    }
    if (ker.size() == 1) {
      std::vector<Scalar> ray;
      for (auto& q : ker[0]) ray.push_back(Scalar(q));
      bool on_all = true;
      for (auto& f : rest) on_all = on_all && f.eval(ray).is_zero();
      if (on_all) {
        DirectionPoint p;
        p.ray = canonical_ray(ray);
        rep.points.push_back(std::move(p));
      }
    } else {  // ker.size() == 2
      std::vector<Scalar> b0, b1;
      for (auto& q : ker[0]) b0.push_back(Scalar(q));
      for (auto& q : ker[1]) b1.push_back(Scalar(q));
      Solve3 sub;
      solve_on_plane(rest, b0, b1, sub);
      rep.points = std::move(sub.points);
      rep.curves = std::move(sub.curves);
    }
    dedupe(rep);
    rep.span_dim = compute_span(rep, n);
    return rep;
  }

  for (auto& f : rest)
    if (f.terms().begin()->first.degree() != 2)
      throw UnsupportedVarietyError("three-variable systems support quadratic forms only");
  Solve3 sub = solve_quadrics(rest);
  rep.points = std::move(sub.points);
  rep.curves = std::move(sub.curves);
  dedupe(rep);
  rep.span_dim = compute_span(rep, n);
  return rep;
}

int allow_span_dim(const JetIdeal& ideal) { return allow_exact(ideal).span_dim; }
bool allow_is_empty(const JetIdeal& ideal) { return allow_exact(ideal).empty(); }

// ---------- numeric estimator ----------

namespace {

double cone_ratio(const std::vector<Jet>& gens, int m, const std::vector<double>& dir, double r) {
  double sum = 0;
  std::vector<double> x(dir.size());
  for (size_t i = 0; i < dir.size(); ++i) x[i] = dir[i] * r;
  for (auto& g : gens) sum += std::fabs(g.eval_double(x));
  return sum / std::pow(r, m);
}

}  // namespace

std::vector<EstimateCell> allow_estimate(const JetIdeal& ideal, int grid, ConeSpec cone) {
  const RingSpec& ring = ideal.ring();
  int n = ring.n;
  const std::vector<Jet>& gens = ideal.generators().empty() ? ideal.basis() : ideal.generators();
  std::vector<double> radii;
  for (double r = cone.radius; r >= cone.radius_min * 0.999; r /= 10) radii.push_back(r);

  std::vector<EstimateCell> cells;
  if (n == 1) {
    for (double s : {1.0, -1.0}) {
      EstimateCell c;
      c.direction = {s};
      double best = 1e300;
      for (double r : radii) best = std::min(best, cone_ratio(gens, ring.m, c.direction, r));
      if (gens.empty()) best = 0;
      c.min_ratio = best;
      c.forbidden = best > cone.threshold;
      cells.push_back(std::move(c));
    }
    return cells;
  }

  if (n == 2) {
    int k = grid > 0 ? grid : 720;
    double h = cone.delta > 0 ? cone.delta : M_PI / k;  // cell half-width
    for (int i = 0; i < k; ++i) {
      double theta = 2 * M_PI * i / k;
      EstimateCell c;
      c.direction = {std::cos(theta), std::sin(theta)};
      double best = 1e300;
      if (gens.empty()) best = 0;
      for (double r : radii) {
        if (gens.empty()) break;
        auto f = [&](double t) {
          std::vector<double> d = {std::cos(t), std::sin(t)};
          return cone_ratio(gens, ring.m, d, r);
        };
        // Coarse scan then golden-section refinement around the best sample.
        const int seeds = 9;
        double bt = theta, bv = f(theta);
        for (int s = 0; s < seeds; ++s) {
          double t = theta - h + 2 * h * s / (seeds - 1);
          double v = f(t);
          if (v < bv) {
            bv = v;
            bt = t;
          }
        }
        double lo = std::max(theta - h, bt - 2 * h / (seeds - 1));
        double hi = std::min(theta + h, bt + 2 * h / (seeds - 1));
        const double gr = 0.6180339887498949;
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 60; ++it) {
          if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
          } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
          }
        }
        best = std::min({best, bv, f1, f2});
      }
      c.min_ratio = best;
      c.forbidden = best > cone.threshold;
      cells.push_back(std::move(c));
    }
    return cells;
  }

  if (n == 3) {
    int k = grid > 0 ? grid : 16200;
    double h = cone.delta > 0 ? cone.delta : 2.2 / std::sqrt((double)k);
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < k; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / k;
      double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = golden_angle * i;
      std::vector<double> dir = {rho * std::cos(phi), rho * std::sin(phi), z};
      EstimateCell c;
      c.direction = dir;
      double best = 1e300;
      if (gens.empty()) best = 0;
      // Local frame for dome offsets.
      std::vector<double> u = {-dir[1], dir[0], 0};
      double un = std::hypot(u[0], u[1]);
      if (un < 1e-9) u = {1, 0, 0};
      else {
        u[0] /= un;
        u[1] /= un;
      }
      std::vector<double> v = {dir[1] * u[2] - dir[2] * u[1], dir[2] * u[0] - dir[0] * u[2],
                               dir[0] * u[1] - dir[1] * u[0]};
      auto at_offset = [&](double a, double b) {
        std::vector<double> d(3);
        for (int t = 0; t < 3; ++t) d[t] = dir[t] + a * u[t] + b * v[t];
        double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        for (auto& x : d) x /= norm;
        return d;
      };
      for (double r : radii) {
        if (gens.empty()) break;
        double ca = 0, cb = 0, step = h / 2;
        double cur = cone_ratio(gens, ring.m, at_offset(0, 0), r);
        for (int it = 0; it < 24; ++it) {
          bool moved = false;
          for (auto [da, db] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
            double na = ca + da, nb = cb + db;
            if (na * na + nb * nb > h * h) continue;
            double val = cone_ratio(gens, ring.m, at_offset(na, nb), r);
            if (val < cur) {
              cur = val;
              ca = na;
              cb = nb;
              moved = true;
            }
          }
          if (!moved) step /= 2;
          if (step < h * 1e-6) break;
        }
        best = std::min(best, cur);
      }
      c.min_ratio = best;
      c.forbidden = best > cone.threshold;
      cells.push_back(std::move(c));
    }
    return cells;
  }
  throw std::invalid_argument("allow_estimate supports n <= 3");
}

std::string estimate_to_csv(const std::vector<EstimateCell>& cells) {
  std::ostringstream os;
  if (!cells.empty()) {
    for (size_t i = 0; i < cells[0].direction.size(); ++i) os << "d" << i + 1 << ",";
    os << "forbidden,witness_c\n";
  }
  for (auto& c : cells) {
    for (double d : c.direction) os << d << ",";
    os << (c.forbidden ? 1 : 0) << "," << c.min_ratio << "\n";
  }
  return os.str();
}

}  // namespace jetclass
