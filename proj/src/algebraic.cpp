#include "jetclass/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetclass {

QPoly qpoly_from_integers(const std::vector<Integer>& coeffs) {
  QPoly p;
  for (auto& a : coeffs) p.c.push_back(Rational(a));
  p.trim();
  return p;
}

std::vector<Integer> primitive_integer_poly(const QPoly& p) {
  Integer l(1);
  for (auto& q : p.c) l = boost::multiprecision::lcm(l, den(q));
  std::vector<Integer> out;
  Integer g(0);
  for (auto& q : p.c) {
    Integer v = num(q * Rational(l));
    out.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (!out.empty() && out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    Rational c = p.c[i];
    if (s.empty()) {
      if (c < 0) s += "-", c = -c;
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = (c == 1 && i > 0);
    if (!unit) s += rational_to_string(c);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

QPoly squarefree_part(const QPoly& f) {
  if (f.is_zero()) return f;
  QPoly g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return f;
  return divrem(f, g).first;
}

namespace {

using IPoly = std::vector<Integer>;  // ascending, no trailing zeros

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer ieval(const IPoly& p, const Integer& n, const Integer& d, int deg) {
  // d^deg * p(n/d)
  Integer out = 0, dp = 1;
  for (int i = deg; i >= 0; --i) {
    out = out * n + ((size_t)i < p.size() ? p[i] : Integer(0)) * dp * 1;
    if (i > 0) dp *= d;
  }
  return out;
}

int sign_at(const IPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  Integer v = 0;
  Integer n = num(x), d = den(x);
  Integer pw = 1;
  std::vector<Integer> powsd(p.size());
  powsd[p.size() - 1] = 1;
  for (size_t i = p.size() - 1; i-- > 0;) powsd[i] = powsd[i + 1] * d;
  Integer xn = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    v += p[i] * xn * powsd[i];
    xn *= n;
  }
  return v.sign();
}

// Taylor shift: q(x) = p(x + a), integer a.
IPoly shift(const IPoly& p, const Integer& a) {
  IPoly q = p;
  int n = (int)q.size();
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) q[j] += a * q[j + 1];
  return q;
}

// q(x) = p(s*x), integer s != 0.
IPoly scale_arg(const IPoly& p, const Integer& s) {
  IPoly q = p;
  Integer f = 1;
  for (size_t i = 1; i < q.size(); ++i) {
    f *= s;
    q[i] *= f;
  }
  itrim(q);
  return q;
}

int descartes_bound(const IPoly& p) {
  int v = 0, last = 0;
  for (auto& a : p) {
    int s = a.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Sign variations of (x+1)^n p(1/(x+1)): reverse then shift by 1.
int variations_01(const IPoly& p) {
  IPoly r(p.rbegin(), p.rend());
  itrim(r);
  return descartes_bound(shift(r, 1));
}

// Isolating intervals for the roots of squarefree p (no rational roots) in (0,1),
// reported as subintervals (a/2^k, (a+1)/2^k) mapped through interval (lo,hi).
void vca01(const IPoly& p, const Rational& lo, const Rational& hi,
           std::vector<std::pair<Rational, Rational>>& out, int depth) {
  if (depth > 128) throw std::logic_error("root isolation: excessive recursion");
  int v = variations_01(p);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  // p_left(x) = 2^n p(x/2) up to content; p_right(x) = p_left(x+1).
  IPoly pl = p;
  int n = (int)p.size() - 1;
  for (int i = 0; i <= n; ++i) pl[i] <<= (unsigned)(n - i);
  IPoly pr = shift(pl, 1);
  vca01(pl, lo, mid, out, depth + 1);
  // No rational roots remain, so p(mid) != 0.
  vca01(pr, mid, hi, out, depth + 1);
}

Rational cauchy_bound(const IPoly& p) {
  Integer lead = boost::multiprecision::abs(p.back());
  Rational mx(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rational r(boost::multiprecision::abs(p[i]), lead);
    if (r > mx) mx = r;
  }
  Rational b = mx + 1;
  Rational pow2(1);
  while (pow2 < b) pow2 *= 2;
  return pow2;
}

// All rational roots of primitive integer squarefree p; deflates p in place.
std::vector<Rational> extract_rational_roots(IPoly& p) {
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  // x = 0
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    roots.push_back(Rational(0));
  }
  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds;
    Integer a = boost::multiprecision::abs(n);
    for (Integer i = 1; i * i <= a; ++i) {
      if (a % i == 0) {
        ds.push_back(i);
        if (i * i != a) ds.push_back(a / i);
      }
    }
    return ds;
  };
  if (p.size() <= 1) return roots;
  // Squarefree input: each rational root is simple.
  auto p0d = divisors(p.front());
  auto pnd = divisors(p.back());
  for (auto& a : p0d)
    for (auto& b : pnd) {
      for (int s : {1, -1}) {
        if (p.size() <= 1) break;
        Rational cand(s * a, b);
        if (sign_at(p, cand) == 0) {
          // Deflate by (b*x - s*a).
          IPoly q(p.size() - 1);
          Integer rem = 0;
          // synthetic division by (x - cand) over rationals, staying integral:
          QPoly qp;
          for (auto& c : p) qp.c.push_back(Rational(c));
          QPoly lin;
          lin.c = {-cand, Rational(1)};
          auto [quo, r] = divrem(qp, lin);
          (void)r;
          auto ip = primitive_integer_poly(quo);
          p = ip;
          roots.push_back(cand);
        }
      }
    }
  return roots;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(std::vector<Integer> defining, Rational lo, Rational hi)
    : poly_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  itrim(poly_);
  if (poly_.size() < 2) throw std::invalid_argument("algebraic number needs degree >= 1");
  if (sign_at(poly_, lo_) == 0 || sign_at(poly_, hi_) == 0 ||
      sign_at(poly_, lo_) == sign_at(poly_, hi_))
    throw std::invalid_argument("interval does not isolate a sign change");
}

int AlgebraicNumber::sign_at_endpoint(const Rational& x) const { return jetclass::sign_at(poly_, x); }

void AlgebraicNumber::refine(const Rational& width) const {
  int slo = sign_at_endpoint(lo_);
  while (hi_ - lo_ > width) {
    Rational mid = (lo_ + hi_) / 2;
    int sm = jetclass::sign_at(poly_, mid);
    if (sm == 0) {
      // Rational midpoint hit a root: squeeze around it.
      Rational eps = (hi_ - lo_) / 4;
      while (jetclass::sign_at(poly_, mid - eps) == 0 || jetclass::sign_at(poly_, mid + eps) == 0)
        eps /= 2;
      if (jetclass::sign_at(poly_, mid - eps) == slo) {
        lo_ = mid - eps;
        hi_ = mid + eps;
      }
      continue;
    }
    if (sm == slo) lo_ = mid;
    else hi_ = mid;
  }
}

double AlgebraicNumber::to_double() const {
  refine_bits(80);
  return jetclass::to_double((lo_ + hi_) / 2);
}

int AlgebraicNumber::compare(const Rational& q) const {
  for (int rounds = 0; rounds < 512; ++rounds) {
    if (lo_ >= q) {
      // value > lo_ >= q unless value == q; endpoints are non-roots so value > lo_.
      if (lo_ > q) return 1;
      return 1;
    }
    if (hi_ <= q) return -1;
    // q inside the interval: decide by sign of poly at q.
    int sq = jetclass::sign_at(poly_, q);
    if (sq == 0) return 0;
    if (sq == sign_at_endpoint(lo_)) return 1;  // root lies in (q, hi)
    return -1;
  }
  throw std::logic_error("algebraic compare failed");
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
  for (unsigned bits = 8; bits <= 512; bits *= 2) {
    refine_bits(bits);
    o.refine_bits(bits);
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    // Overlap persists: check for a shared root of gcd in the overlap.
    QPoly a = qpoly_from_integers(poly_), b = qpoly_from_integers(o.poly_);
    QPoly g = poly_gcd(a, b);
    if (g.degree() >= 1) {
      Rational l = std::max(lo_, o.lo_), h = std::min(hi_, o.hi_);
      auto gi = primitive_integer_poly(g);
      if (jetclass::sign_at(gi, l) != 0 && jetclass::sign_at(gi, h) != 0 &&
          jetclass::sign_at(gi, l) != jetclass::sign_at(gi, h))
        return 0;
    }
  }
  throw std::logic_error("algebraic compare failed to separate");
}

int AlgebraicNumber::sign_at(const QPoly& q) const {
  if (q.is_zero()) return 0;
  QPoly p = qpoly_from_integers(poly_);
  QPoly g = poly_gcd(p, q);
  if (g.degree() >= 1) {
    auto gi = primitive_integer_poly(g);
    int sl = jetclass::sign_at(gi, lo_), sh = jetclass::sign_at(gi, hi_);
    if (sl == 0 || sh == 0) {
      // Nudge inside; endpoints are non-roots of poly_ but may be roots of g
      // that are not this number.
      refine_bits(16);
      sl = jetclass::sign_at(gi, lo_);
      sh = jetclass::sign_at(gi, hi_);
    }
    if (sl != sh) return 0;  // the unique root of p here is also a root of g
  }
  // q(alpha) != 0: interval arithmetic until sign-definite.
  for (unsigned bits = 16; bits <= 2048; bits *= 2) {
    refine_bits(bits);
    Rational l(0), h(0);
    // Horner with interval [lo_, hi_].
    for (size_t i = q.c.size(); i-- > 0;) {
      Rational cands[4] = {l * lo_, l * hi_, h * lo_, h * hi_};
      Rational nl = cands[0], nh = cands[0];
      for (auto& cd : cands) {
        nl = std::min(nl, cd);
        nh = std::max(nh, cd);
      }
      l = nl + q.c[i];
      h = nh + q.c[i];
    }
    if (l > 0) return 1;
    if (h < 0) return -1;
  }
  throw std::logic_error("sign_at refinement failed");
}

std::string AlgebraicNumber::to_string() const {
  return "root of " + qpoly_to_string(qpoly_from_integers(poly_)) + " in (" +
         rational_to_string(lo_) + ", " + rational_to_string(hi_) + ")";
}

int RealRoot::compare(const RealRoot& o) const {
  if (is_rational && o.is_rational) {
    if (value < o.value) return -1;
    return value == o.value ? 0 : 1;
  }
  if (is_rational) return -o.alg[0].compare(value);
  if (o.is_rational) return alg[0].compare(o.value);
  return alg[0].compare(o.alg[0]);
}

std::vector<RealRoot> isolate_real_roots(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("indeterminate roots");
  std::vector<RealRoot> out;
  if (f.degree() == 0) return out;

  // Yun's square-free decomposition: f = prod S_k^k.
  std::vector<QPoly> sf;  // sf[k-1] = S_k
  {
    QPoly a = f, d = f.derivative();
    QPoly g = poly_gcd(a, d);
    if (g.degree() == 0) {
      sf.push_back(f);
    } else {
      QPoly b = divrem(a, g).first;
      QPoly c = divrem(d, g).first;
      QPoly e = c - b.derivative();
      while (true) {
        QPoly s = poly_gcd(b, e);
        sf.push_back(s);
        QPoly b2 = divrem(b, s).first;
        QPoly c2 = divrem(e, s).first;
        if (b2.degree() == 0) break;
        b = b2;
        e = c2 - b.derivative();
      }
    }
  }

  for (size_t k = 0; k < sf.size(); ++k) {
    if (sf[k].degree() <= 0) continue;
    unsigned mult = (unsigned)k + 1;
    IPoly p = primitive_integer_poly(sf[k]);
    for (auto& r : extract_rational_roots(p)) {
      RealRoot rr;
      rr.is_rational = true;
      rr.value = r;
      rr.multiplicity = mult;
      out.push_back(rr);
    }
    itrim(p);
    if (p.size() > 1) {
      Rational b = cauchy_bound(p);
      // Map (0,1) -> (-B, B): q(x) = p(2B x - B).
      Integer bi = num(b);  // power of two
      IPoly q = scale_arg(shift(p, -bi), 2 * bi);
      std::vector<std::pair<Rational, Rational>> iv;
      vca01(q, Rational(-bi), Rational(bi), iv, 0);
      for (auto& [lo, hi] : iv) {
        RealRoot rr;
        rr.is_rational = false;
        rr.alg.emplace_back(p, lo, hi);
        rr.multiplicity = mult;
        out.push_back(rr);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.compare(b) < 0; });
  return out;
}

}  // namespace jetclass
