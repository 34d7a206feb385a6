#ifndef JETCLASS_MATRIX_HPP
#define JETCLASS_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "jetclass/scalar.hpp"

namespace jetclass {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), d_(r * c, T(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == T(0)) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  size_t rows_, cols_;
  std::vector<T> d_;
};

using RationalMatrix = Mat<Rational>;
using ScalarMatrix = Mat<Scalar>;

// In-place reduced row echelon form; returns (rank, pivot columns).
template <class T>
std::pair<size_t, std::vector<size_t>> rref_inplace(Mat<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t piv = row;
    while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, row);
    T inv = T(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == T(0)) continue;
      T f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {row, pivots};
}

template <class T>
std::pair<Mat<T>, size_t> rref(Mat<T> m) {
  auto [rank, piv] = rref_inplace(m);
  (void)piv;
  return {m, rank};
}

template <class T>
size_t rank_of(Mat<T> m) {
  return rref_inplace(m).first;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = m.rows();
  Mat<T> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto [rank, piv] = rref_inplace(aug);
  (void)piv;
  if (rank != n) throw std::domain_error("singular matrix");
  Mat<T> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Basis of the right null space, as columns.
template <class T>
std::vector<std::vector<T>> null_space(Mat<T> m) {
  size_t n = m.cols();
  auto [rank, piv] = rref_inplace(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<T> v(n, T(0));
    v[free] = T(1);
    for (size_t r = 0; r < rank; ++r) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct SignatureResult {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  ScalarMatrix transform;  // C with C^T Q C = diag(+1...,-1...,0...)
};

// Sylvester signature of a symmetric rational matrix, with an explicit
// congruence to the canonical diagonal. Throws on non-symmetric input.
SignatureResult signature(const RationalMatrix& q);

}  // namespace jetclass

#endif
