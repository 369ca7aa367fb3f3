#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ramlift/errors.hpp"
#include "ramlift/ring.hpp"

namespace ramlift {

/// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    }
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0),
  /// adding to what is there.
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) += block(i, j);
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Coefficients of det(xI - A), lowest degree first, by Berkowitz's
/// division-free recurrence. Works over any commutative ring.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a) {
  if (!a.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // p holds the char poly of the leading k x k block, highest degree first.
  std::vector<T> p{T(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column t_0..t_{k+1}.
    std::vector<T> t(k + 2, T(0));
    t[0] = T(1);
    t[1] = -a(k, k);
    std::vector<T> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t s = 0; s < k; ++s) {
      T rv(0);
      for (std::size_t i = 0; i < k; ++i) rv = rv + a(k, i) * v[i];
      t[s + 2] = -rv;
      if (s + 1 < k) {
        std::vector<T> w(k, T(0));
        for (std::size_t i = 0; i < k; ++i) {
          T acc(0);
          for (std::size_t j = 0; j < k; ++j) acc = acc + a(i, j) * v[j];
          w[i] = acc;
        }
        v = std::move(w);
      }
    }
    std::vector<T> next(k + 2, T(0));
    for (std::size_t i = 0; i < k + 2; ++i) {
      T acc(0);
      for (std::size_t j = 0; j <= std::min(i, k); ++j) acc = acc + t[i - j] * p[j];
      next[i] = acc;
    }
    p = std::move(next);
  }
  return std::vector<T>(p.rbegin(), p.rend());
}

/// Division-free determinant (constant term of the characteristic polynomial).
template <class T>
T determinant(const Matrix<T>& a) {
  if (a.rows() == 0) return T(1);
  std::vector<T> cp = berkowitz_charpoly(a);
  return (a.rows() % 2 == 0) ? cp[0] : -cp[0];
}

/// Determinant of the submatrix on rows `rows` and columns `cols`
/// (equal-size index lists, taken in the given order).
template <class T>
T minor_det(const Matrix<T>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw PreconditionError("minor: row and column sets differ in size");
  Matrix<T> sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
  return determinant(sub);
}

/// rank(A) == 1 over an integral domain: A is nonzero and every 2x2 minor vanishes.
template <class T>
bool has_rank_one(const Matrix<T>& a) {
  bool nonzero = false;
  for (const T& x : a.data())
    if (!is_zero(x)) nonzero = true;
  if (!nonzero) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = i + 1; k < a.rows(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = j + 1; l < a.cols(); ++l)
          if (!is_zero(a(i, j) * a(k, l) - a(i, l) * a(k, j))) return false;
  return true;
}

template <class T>
T trace(const Matrix<T>& a) {
  T acc(0);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) acc = acc + a(i, i);
  return acc;
}

}  // namespace ramlift
