#include "jetclass/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jetclass {

namespace {

using std::int64_t;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    uint64_t x = powmod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(uint64_t n, std::map<int64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[(int64_t)n]++;
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<int64_t, unsigned>> factor_positive(const Integer& n_in) {
  if (n_in <= 0) throw std::domain_error("factor_positive: nonpositive input");
  if (n_in > Integer("18446744073709551615"))
    throw std::domain_error("factor_positive: base too large to factor: " + n_in.str());
  uint64_t n = n_in.convert_to<uint64_t>();
  std::map<int64_t, unsigned> m;
  for (uint64_t p = 2; p < 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      m[(int64_t)p]++;
      n /= p;
    }
  }
  factor_u64(n, m);
  return {m.begin(), m.end()};
}

Scalar::Scalar(Rational v) {
  if (v != 0) terms_.push_back({RadicalPart{}, std::move(v)});
}

void Scalar::add_term(const RadicalPart& r, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const auto& t, const RadicalPart& key) { return t.first < key; });
  if (it != terms_.end() && it->first == r) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {r, c});
  }
}

Scalar Scalar::rational_power(const Rational& base, const Rational& exponent) {
  if (base <= 0) throw std::domain_error("rational_power: base must be positive");
  if (exponent == 0 || base == 1) return Scalar(Rational(1));

  // Exponents of each prime in the base, scaled by the exponent; integer part
  // goes to the rational coefficient, fractional part to the radical.
  std::map<int64_t, Rational> exps;
  for (auto& [p, e] : factor_positive(num(base))) exps[p] += Rational(e) * exponent;
  for (auto& [p, e] : factor_positive(den(base))) exps[p] -= Rational(e) * exponent;

  Rational coef(1);
  RadicalPart rad;
  for (auto& [p, e] : exps) {
    Integer ipart = rat_floor(e);
    Rational frac = e - Rational(ipart);
    if (ipart != 0) {
      long k = ipart.convert_to<long>();
      coef *= rat_pow(Rational(p), k);
    }
    if (frac != 0) rad.factors.push_back({p, frac});
  }
  Scalar out;
  out.add_term(rad, coef);
  return out;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.trivial());
}

Rational Scalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("scalar is irrational: " + to_string());
  return terms_[0].second;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out = *this;
  for (auto& t : o.terms_) out.add_term(t.first, t.second);
  return out;
}

namespace {

// (radical product, rational carry) of two radical parts; exponents reduced
// mod 1 with integer carries multiplied into the coefficient.
std::pair<RadicalPart, Rational> radical_mul(const RadicalPart& a, const RadicalPart& b) {
  RadicalPart out;
  Rational carry(1);
  size_t i = 0, j = 0;
  auto push = [&](int64_t p, Rational e) {
    Integer ipart = rat_floor(e);
    Rational frac = e - Rational(ipart);
    if (ipart != 0) carry *= rat_pow(Rational(p), ipart.convert_to<long>());
    if (frac != 0) out.factors.push_back({p, frac});
  };
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      out.factors.push_back(b.factors[j++]);
    } else {
      push(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i, ++j;
    }
  }
  return {std::move(out), std::move(carry)};
}

}  // namespace

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  for (auto& s : terms_)
    for (auto& t : o.terms_) {
      auto [rad, carry] = radical_mul(s.first, t.first);
      out.add_term(rad, s.second * t.second * carry);
    }
  return out;
}

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero scalar");
  if (terms_.size() == 1) {
    Scalar out;
    RadicalPart rad;
    Rational coef = Rational(1) / terms_[0].second;
    for (auto& [p, e] : terms_[0].first.factors) {
      rad.factors.push_back({p, Rational(1) - e});
      coef /= Rational(p);
    }
    out.add_term(rad, coef);
    return out;
  }

  // Work in the finite-dimensional Q-algebra spanned by all monomials in the
  // primes of this scalar with exponent denominators dividing the observed
  // lcm; invert by solving (this * x) = 1 as a linear system.
  std::map<int64_t, Integer> denlcm;
  for (auto& t : terms_)
    for (auto& [p, e] : t.first.factors) {
      Integer d = den(e);
      Integer& cur = denlcm[p];
      cur = cur == 0 ? d : boost::multiprecision::lcm(cur, d);
    }
  std::vector<int64_t> primes;
  std::vector<long> dims;
  size_t total = 1;
  for (auto& [p, d] : denlcm) {
    primes.push_back(p);
    dims.push_back(d.convert_to<long>());
    total *= (size_t)d.convert_to<long>();
    if (total > 4096) throw std::domain_error("scalar inverse: radical basis too large");
  }
  auto index_of = [&](const RadicalPart& r) -> size_t {
    size_t idx = 0;
    size_t k = 0;
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      long a = 0;
      if (k < r.factors.size() && r.factors[k].first == primes[pi]) {
        Rational e = r.factors[k].second;  // a_i / dims[pi]
        a = (num(e) * dims[pi] / den(e)).convert_to<long>();
        ++k;
      }
      idx = idx * (size_t)dims[pi] + (size_t)a;
    }
    return idx;
  };
  auto monomial_of = [&](size_t idx) {
    RadicalPart r;
    std::vector<long> a(primes.size());
    for (size_t pi = primes.size(); pi-- > 0;) {
      a[pi] = (long)(idx % (size_t)dims[pi]);
      idx /= (size_t)dims[pi];
    }
    for (size_t pi = 0; pi < primes.size(); ++pi)
      if (a[pi] != 0) r.factors.push_back({primes[pi], Rational(a[pi], dims[pi])});
    return r;
  };

  size_t n = total;
  // Columns: coordinates of this * basis_j; solve M x = e_0 (monomial "1").
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    RadicalPart bj = monomial_of(j);
    for (auto& t : terms_) {
      auto [rad, carry] = radical_mul(t.first, bj);
      m[index_of(rad)][j] += t.second * carry;
    }
  }
  m[0][n] = 1;
  for (size_t col = 0, row = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= n; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  Scalar out;
  for (size_t i = 0; i < n; ++i)
    if (m[i][n] != 0) out.add_term(monomial_of(i), m[i][n]);
  // A nonzero field element always has an inverse; check the solve.
  if ((*this * out).is_rational() && (*this * out).rational_value() == 1) return out;
  throw std::logic_error("scalar inverse solve failed");
}

std::pair<Rational, Rational> kth_root_bounds(const Rational& x, unsigned long k, unsigned bits) {
  if (x <= 0) throw std::domain_error("kth_root_bounds: nonpositive");
  if (k == 1) return {x, x};
  Integer scale = Integer(1) << bits;
  // Bracket n with (n/scale)^k <= x < ((n+1)/scale)^k by doubling then bisecting.
  double guess = std::pow(to_double(x), 1.0 / (double)k);
  Integer lo = 0, hi;
  if (std::isfinite(guess) && guess > 0) {
    hi = Integer(guess * (double)(1ull << 20)) * (scale >> 20) / 1 + scale;  // loose upper seed
  } else {
    hi = scale;
  }
  auto leq_x = [&](const Integer& n) {  // (n/scale)^k <= x
    return rat_pow(Rational(n, scale), (long)k) <= x;
  };
  while (!leq_x(lo)) lo = 0;  // lo=0 always satisfies for x>0
  while (leq_x(hi)) hi <<= 1;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) >> 1;
    if (leq_x(mid)) lo = mid;
    else hi = mid;
  }
  return {Rational(lo, scale), Rational(hi, scale)};
}

std::pair<Rational, Rational> Scalar::bounds(unsigned bits) const {
  Rational lo(0), hi(0);
  for (auto& [rad, coef] : terms_) {
    if (rad.trivial()) {
      lo += coef;
      hi += coef;
      continue;
    }
    // Radical value = R^(1/B) with B = lcm of exponent denominators.
    Integer b(1);
    for (auto& [p, e] : rad.factors) b = boost::multiprecision::lcm(b, den(e));
    Rational r(1);
    for (auto& [p, e] : rad.factors) {
      Rational scaled = e * Rational(b);  // integer
      r *= rat_pow(Rational(p), num(scaled).convert_to<long>());
    }
    auto [rlo, rhi] = kth_root_bounds(r, b.convert_to<unsigned long>(), bits);
    if (coef > 0) {
      lo += coef * rlo;
      hi += coef * rhi;
    } else {
      lo += coef * rhi;
      hi += coef * rlo;
    }
  }
  return {lo, hi};
}

int Scalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return jetclass::sign(terms_[0].second);
  for (unsigned bits = 32; bits <= 4096; bits *= 2) {
    auto [lo, hi] = bounds(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  // A canonical nonzero sum of independent radical monomials cannot be zero,
  // so refinement must separate it from 0.
  throw std::logic_error("scalar sign: refinement failed for " + to_string());
}

Scalar Scalar::pow(const Rational& e) const {
  if (den(e) == 1) {
    long k = num(e).convert_to<long>();
    if (k == 0) return Scalar(Rational(1));
    Scalar base = k > 0 ? *this : inverse();
    unsigned long n = (unsigned long)(k > 0 ? k : -k);
    Scalar out(Rational(1));
    while (n) {
      if (n & 1) out *= base;
      base *= base;
      n >>= 1;
    }
    return out;
  }
  if (terms_.size() != 1 || terms_[0].second <= 0)
    throw std::domain_error("fractional power needs a single positive term: " + to_string());
  Scalar out = rational_power(terms_[0].second, e);
  for (auto& [p, f] : terms_[0].first.factors) out *= rational_power(Rational(p), f * e);
  return out;
}

double Scalar::to_double() const {
  double out = 0;
  for (auto& [rad, coef] : terms_) {
    double v = jetclass::to_double(coef);
    for (auto& [p, e] : rad.factors) v *= std::pow((double)p, jetclass::to_double(e));
    out += v;
  }
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [rad, coef] : terms_) {
    Rational c = coef;
    if (!first) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (auto& [p, e] : rad.factors) {
      if (!mono.empty()) mono += "*";
      mono += std::to_string(p) + "^(" + rational_to_string(e) + ")";
    }
    if (mono.empty()) {
      s += rational_to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += rational_to_string(c) + "*" + mono;
    }
  }
  return s;
}

}  // namespace jetclass
