#include "jetclass/jet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace jetclass {

std::vector<std::string> default_var_names(int n) {
  if (n <= 4) {
    static const char* names[] = {"x", "y", "z", "w"};
    return std::vector<std::string>(names, names + n);
  }
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

RingSpec::RingSpec(int m_, int n_) : m(m_), n(n_), vars(default_var_names(n_)) {
  if (m < 1 || n < 1) throw std::invalid_argument("ring requires m >= 1 and n >= 1");
}

size_t RingSpec::dimension() const {
  // C(m+n, n) - 1
  size_t num = 1;
  for (int i = 1; i <= n; ++i) num = num * (size_t)(m + i) / (size_t)i;
  return num - 1;
}

std::string RingSpec::to_string() const {
  return "P(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string Monomial::to_string(const std::vector<std::string>& vars) const {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomial_basis(int m, int n) {
  std::vector<Monomial> out;
  Monomial cur(n);
  // Enumerate all exponent vectors with degree <= m, then sort.
  std::vector<Monomial> all;
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == n) {
      if (cur.degree() >= 1) all.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.e[idx] = e;
      rec(idx + 1, left - e);
    }
    cur.e[idx] = 0;
  };
  rec(0, m);
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return MonoCmp{}(a, b); });
  return all;
}

Jet Jet::variable(const RingSpec& ring, int i) {
  Monomial mono(ring.n);
  mono.e[i] = 1;
  return monomial_jet(ring, mono);
}

Jet Jet::monomial_jet(const RingSpec& ring, const Monomial& mono, Scalar coef) {
  Jet j(ring);
  j.set_coeff(mono, coef);
  return j;
}

Scalar Jet::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar() : it->second;
}

void Jet::set_coeff(const Monomial& mono, const Scalar& c) {
  if ((int)mono.e.size() != ring_.n) throw std::invalid_argument("monomial arity mismatch");
  int d = mono.degree();
  if (d < 1 || d > ring_.m)
    throw std::invalid_argument("monomial degree " + std::to_string(d) + " outside 1.." +
                                std::to_string(ring_.m));
  if (c.is_zero()) terms_.erase(mono);
  else terms_[mono] = c;
}

void Jet::check_same_ring(const Jet& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("jet ring mismatch");
}

Jet Jet::operator+(const Jet& o) const {
  check_same_ring(o);
  Jet r = *this;
  for (auto& [mono, c] : o.terms_) {
    Scalar s = r.coeff(mono) + c;
    if (s.is_zero()) r.terms_.erase(mono);
    else r.terms_[mono] = s;
  }
  return r;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator*(const Jet& o) const {
  check_same_ring(o);
  Jet r(ring_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      if (ma.degree() + mb.degree() > ring_.m) continue;
      Monomial mono(ring_.n);
      for (int i = 0; i < ring_.n; ++i) mono.e[i] = ma.e[i] + mb.e[i];
      Scalar s = r.coeff(mono) + ca * cb;
      if (s.is_zero()) r.terms_.erase(mono);
      else r.terms_[mono] = s;
    }
  return r;
}

Jet Jet::scaled(const Scalar& s) const {
  Jet r(ring_);
  if (s.is_zero()) return r;
  for (auto& [mono, c] : terms_) r.terms_[mono] = c * s;
  return r;
}

std::optional<int> Jet::order_of_vanishing() const {
  if (terms_.empty()) return std::nullopt;
  int best = ring_.m + 1;
  for (auto& [mono, c] : terms_) best = std::min(best, mono.degree());
  return best;
}

Jet Jet::homogeneous_part(int k) const {
  Jet r(ring_);
  for (auto& [mono, c] : terms_)
    if (mono.degree() == k) r.terms_[mono] = c;
  return r;
}

bool Jet::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (auto& [mono, c] : terms_)
    if (mono.degree() != d) return false;
  return true;
}

std::pair<Jet, int> Jet::lowest_homogeneous_part() const {
  auto k = order_of_vanishing();
  if (!k) throw std::domain_error("lowest homogeneous part of the zero jet");
  return {homogeneous_part(*k), *k};
}

int Jet::max_degree() const {
  int d = 0;
  for (auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

Scalar Jet::eval(const std::vector<Scalar>& point) const {
  if ((int)point.size() != ring_.n) throw std::invalid_argument("eval point arity mismatch");
  Scalar out;
  for (auto& [mono, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < ring_.n; ++i)
      for (int k = 0; k < mono.e[i]; ++k) t *= point[i];
    out += t;
  }
  return out;
}

double Jet::eval_double(const std::vector<double>& point) const {
  double out = 0;
  for (auto& [mono, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < ring_.n; ++i) t *= std::pow(point[i], mono.e[i]);
    out += t;
  }
  return out;
}

Jet Jet::substitute(const std::vector<Jet>& substitution) const {
  if ((int)substitution.size() != ring_.n) throw std::invalid_argument("substitution arity mismatch");
  const RingSpec& target = substitution.empty() ? ring_ : substitution[0].ring();
  Jet out(target);
  for (auto& [mono, c] : terms_) {
    Jet t(target);
    bool first = true;
    for (int i = 0; i < ring_.n; ++i)
      for (int k = 0; k < mono.e[i]; ++k) {
        if (first) {
          t = substitution[i];
          first = false;
        } else {
          t = t * substitution[i];
        }
        if (t.is_zero()) break;
      }
    if (first) throw std::logic_error("constant monomial in jet");
    out += t.scaled(c);
  }
  return out;
}

std::vector<Scalar> Jet::coefficient_vector() const {
  auto basis = monomial_basis(ring_.m, ring_.n);
  std::vector<Scalar> v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
  return v;
}

Jet Jet::from_coefficient_vector(const RingSpec& ring, const std::vector<Scalar>& v) {
  auto basis = monomial_basis(ring.m, ring.n);
  if (v.size() != basis.size()) throw std::invalid_argument("coefficient vector size mismatch");
  Jet j(ring);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!v[i].is_zero()) j.terms_[basis[i]] = v[i];
  return j;
}

bool Jet::has_rational_coefficients() const {
  for (auto& [mono, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

std::string Jet::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [mono, c] : terms_) {
    bool neg = false;
    Scalar cc = c;
    if (cc.is_rational()) {
      Rational r = cc.rational_value();
      if (r < 0) {
        neg = true;
        cc = Scalar(-r);
      }
    }
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string coefs;
    bool unit = cc.is_rational() && cc.rational_value() == 1;
    if (!unit) {
      coefs = cc.is_rational() ? rational_to_string(cc.rational_value()) : "(" + cc.to_string() + ")";
    }
    std::string monos = mono.to_string(ring_.vars);
    if (coefs.empty()) s += monos;
    else s += coefs + "*" + monos;
  }
  return s;
}

namespace {

struct PolyParser {
  const RingSpec& ring;
  const std::string& text;
  size_t pos = 0;

  explicit PolyParser(const RingSpec& r, const std::string& t) : ring(r), text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + msg);
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  Rational parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos) fail("expected number");
    Integer numerator(text.substr(start, pos - start));
    if (accept('/')) {
      skip_ws();
      size_t ds = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (ds == pos) fail("expected denominator");
      Integer denominator(text.substr(ds, pos - ds));
      if (denominator == 0) fail("zero denominator");
      return Rational(numerator, denominator);
    }
    return Rational(numerator);
  }

  int parse_var() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_')) ++pos;
    if (start == pos) fail("expected variable");
    std::string name = text.substr(start, pos - start);
    for (int i = 0; i < ring.n; ++i)
      if (ring.vars[i] == name) return i;
    fail("unknown variable '" + name + "' in ring " + ring.to_string());
  }

  // term := number ('/" number)? ('*' factor)* | factor ('*' factor)* ; factor := var ('^' int)?
  Jet parse_term() {
    skip_ws();
    Rational coef(1);
    Monomial mono(ring.n);
    bool any = false;
    bool expect_factor = true;
    if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      coef = parse_number();
      any = true;
      expect_factor = accept('*');
      if (!expect_factor && peek('(')) fail("unexpected '('");
    }
    while (expect_factor || (pos < text.size() && (std::isalpha((unsigned char)text[pos])))) {
      skip_ws();
      if (pos >= text.size() || !std::isalpha((unsigned char)text[pos])) {
        if (expect_factor && any && mono.degree() == 0 && coef != 1) break;  // bare number
        if (expect_factor) fail("expected variable after '*'");
        break;
      }
      int v = parse_var();
      int e = 1;
      if (accept('^')) {
        skip_ws();
        size_t ds = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (ds == pos) fail("expected exponent");
        e = std::stoi(text.substr(ds, pos - ds));
        if (e < 1) fail("exponent must be positive");
      }
      mono.e[v] += e;
      any = true;
      expect_factor = accept('*');
    }
    if (!any) fail("expected term");
    int d = mono.degree();
    if (d == 0) fail("constant terms are not allowed in a jet");
    if (d > ring.m)
      fail("monomial degree " + std::to_string(d) + " exceeds ring degree bound " +
           std::to_string(ring.m));
    return Jet::monomial_jet(ring, mono, Scalar(coef));
  }

  Jet parse_poly() {
    Jet out(ring);
    bool neg = false;
    skip_ws();
    if (accept('-')) neg = true;
    else accept('+');
    while (true) {
      Jet t = parse_term();
      out += neg ? -t : t;
      skip_ws();
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else break;
    }
    return out;
  }
};

}  // namespace

Jet parse_jet(const RingSpec& ring, const std::string& text) {
  PolyParser p(ring, text);
  Jet out = p.parse_poly();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace jetclass
