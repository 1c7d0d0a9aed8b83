#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/exactalg/ratfunc.hpp"

namespace hecke {

/// Dense row-major matrix over a ring-like T; T need not be default constructible,
/// so every matrix carries a zero prototype.
template <class T>
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const T& zero)
      : r_(rows), c_(cols), zero_(zero_like(zero)), d_(rows * cols, zero_) {}

  static Matrix identity(size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    if (d.empty()) throw std::invalid_argument("empty diagonal");
    Matrix m(d.size(), d.size(), d.front());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, size_t rows, const T& zero) {
    Matrix m(rows, cols.size(), zero);
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const T& zero() const { return zero_; }
  T& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }

  std::vector<T> col(size_t j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<T> row(size_t i) const {
    return std::vector<T>(d_.begin() + static_cast<std::ptrdiff_t>(i * c_),
                          d_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
  }
  void set_col(size_t j, const std::vector<T>& v) {
    if (v.size() != r_) throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }
  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    for (size_t j = 0; j < c_; ++j) out.push_back(col(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(c_, r_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(r_, o.c_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.c_; ++j)
          if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
      }
    return p;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (c_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(r_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k)
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
    return out;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (size_t i = 0; i < d_.size(); ++i) s.d_[i] += o.d_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (size_t i = 0; i < d_.size(); ++i) s.d_[i] -= o.d_[i];
    return s;
  }
  Matrix scaled(const T& a) const {
    Matrix s = *this;
    for (auto& x : s.d_) x = x * a;
    return s;
  }
  /// [this | o]
  Matrix hstack(const Matrix& o) const {
    if (r_ != o.r_) throw std::invalid_argument("hstack row mismatch");
    Matrix m(r_, c_ + o.c_, zero_);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
      for (size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
  }
  Matrix vstack(const Matrix& o) const {
    if (c_ != o.c_) throw std::invalid_argument("vstack column mismatch");
    Matrix m(r_ + o.r_, c_, zero_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (size_t i = 0; i < o.r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
    return m;
  }
  Matrix select_columns(const std::vector<size_t>& idx) const {
    Matrix m(r_, idx.size(), zero_);
    for (size_t j = 0; j < idx.size(); ++j)
      for (size_t i = 0; i < r_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < r_; ++i) {
      s += i ? "; " : "";
      for (size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  size_t r_, c_;
  T zero_;
  std::vector<T> d_;
};

/// Kronecker product.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

template <class T>
std::vector<T> kronecker(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination over a field-like T (scalars or rational functions).

template <class T>
struct Echelon {
  Matrix<T> R;                 // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column of each nonzero row
};

template <class T>
Echelon<T> rref(Matrix<T> m) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const T inv = m(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T factor = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(piv)};
}

template <class T>
size_t rank(const Matrix<T>& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel, as the columns of an (cols x k) matrix.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<T> k(m.cols(), free.size(), m.zero());
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = one_like(m.zero());
    for (size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.R(r, free[f]);
  }
  return k;
}

template <class T>
struct KernelRank {
  size_t rank;
  Matrix<T> kernel;
};

template <class T>
KernelRank<T> kernel_rank(const Matrix<T>& m) {
  Matrix<T> k = kernel(m);
  return {m.cols() - k.cols(), std::move(k)};
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  T det = one_like(m.zero());
  const size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return m.zero();
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const T inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const T factor = m(i, c) * inv;
      for (size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = m.rows();
  Echelon<T> e = rref(m.hstack(Matrix<T>::identity(n, m.zero())));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> inv(n, n, m.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

/// Canonical basis (rows of the RREF) of the column space; used to compare subspaces.
template <class T>
Matrix<T> column_space_canonical(const Matrix<T>& m) {
  Echelon<T> e = rref(m.transpose());
  Matrix<T> out(m.rows(), e.pivots.size(), m.zero());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (size_t i = 0; i < m.rows(); ++i) out(i, k) = e.R(k, i);
  return out;
}

/// Whether every column of `sub` lies in the column space of `ambient`.
template <class T>
bool column_space_contains(const Matrix<T>& ambient, const Matrix<T>& sub) {
  if (sub.cols() == 0) return true;
  return rank(ambient.hstack(sub)) == rank(ambient);
}

}  // namespace hecke
