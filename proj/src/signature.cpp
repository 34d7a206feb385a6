#include "jetclass/matrix.hpp"

namespace jetclass {

SignatureResult signature(const RationalMatrix& q_in) {
  size_t n = q_in.rows();
  if (q_in.cols() != n) throw std::invalid_argument("signature: non-square matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (q_in(i, j) != q_in(j, i)) throw std::invalid_argument("signature: non-symmetric matrix");

  RationalMatrix q = q_in;
  RationalMatrix e = RationalMatrix::identity(n);  // accumulated column ops: Q := E^T Q E

  auto col_op = [&](size_t dst, size_t src, const Rational& f) {
    // x_dst stays, column dst += f * column src (and symmetric row op).
    for (size_t i = 0; i < n; ++i) q(i, dst) += f * q(i, src);
    for (size_t j = 0; j < n; ++j) q(dst, j) += f * q(src, j);
    for (size_t i = 0; i < n; ++i) e(i, dst) += f * e(i, src);
  };
  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; ++i) std::swap(q(i, a), q(i, b));
    for (size_t j = 0; j < n; ++j) std::swap(q(a, j), q(b, j));
    for (size_t i = 0; i < n; ++i) std::swap(e(i, a), e(i, b));
  };

  for (size_t k = 0; k < n; ++k) {
    if (q(k, k) == 0) {
      size_t j = k + 1;
      while (j < n && q(j, j) == 0) ++j;
      if (j < n) {
        col_swap(k, j);
      } else {
        // All remaining diagonal entries vanish; bring in an off-diagonal one.
        size_t a = n, b = n;
        for (size_t i = k; i < n && a == n; ++i)
          for (size_t l = i + 1; l < n; ++l)
            if (q(i, l) != 0) {
              a = i;
              b = l;
              break;
            }
        if (a == n) break;  // zero block
        col_op(a, b, Rational(1));  // makes q(a,a) = 2*q(a,b) != 0
        if (a != k) col_swap(k, a);
      }
    }
    Rational piv = q(k, k);
    for (size_t j = k + 1; j < n; ++j) {
      if (q(k, j) == 0) continue;
      col_op(j, k, -q(k, j) / piv);
    }
  }

  // Sort diagonal: positives, negatives, zeros.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    auto cls = [&](size_t i) { return q(i, i) > 0 ? 0 : (q(i, i) < 0 ? 1 : 2); };
    return cls(a) < cls(b);
  });

  SignatureResult out;
  out.transform = ScalarMatrix(n, n);
  for (size_t newcol = 0; newcol < n; ++newcol) {
    size_t old = order[newcol];
    Rational d = q(old, old);
    if (d > 0) out.positives++;
    else if (d < 0) out.negatives++;
    else out.zeros++;
    Scalar scale = d == 0 ? Scalar(1) : Scalar::rational_power(rat_abs(d), Rational(-1, 2));
    for (size_t i = 0; i < n; ++i) out.transform(i, newcol) = Scalar(e(i, old)) * scale;
  }
  return out;
}

}  // namespace jetclass
