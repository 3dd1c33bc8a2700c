#pragma once
// Deterministic dense linear algebra over a generic scalar (exact field
// element, rational, or double).  Exact scalars use first-nonzero pivoting
// so results are reproducible; doubles use scaled partial pivoting with a
// relative threshold.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cuspforge/numfield.hpp"

namespace cuspforge {

template <class T>
inline bool scalar_is_zero(const T& x, double /*tol*/, const T& /*scale*/) {
  return scalar_is_zero(x);
}
inline bool scalar_is_zero(const double& x, double tol, const double& scale) {
  return std::abs(x) <= tol * (scale > 1.0 ? scale : 1.0);
}

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t r, size_t c, T fill) : rows_(r), cols_(c), e_(r * c, fill) {}
  static Matrix zero_sized(size_t r, size_t c, const T& model) {
    Matrix m;
    m.rows_ = r;
    m.cols_ = c;
    m.e_.assign(r * c, zero_like(model));
    return m;
  }
  static Matrix identity_like(size_t n, const T& model) {
    Matrix m = zero_sized(n, n, model);
    for (size_t i = 0; i < n; ++i) m(i, i) = one_like(model);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return e_; }
  const T& model() const {
    if (e_.empty()) throw std::logic_error("empty matrix has no model scalar");
    return e_[0];
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
    Matrix r = zero_sized(rows_, o.cols_, model());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!scalar_is_zero(T(e_[i] - o.e_[i]))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r = zero_sized(cols_, rows_, model());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square");
    T s = zero_like(model());
    for (size_t i = 0; i < rows_; ++i) s = s + (*this)(i, i);
    return s;
  }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }
  size_t rows_, cols_;
  std::vector<T> e_;
};

// Row echelon reduction in place; returns pivot column indices.
// tol is only consulted for double scalars.
template <class T>
std::vector<size_t> rref(Matrix<T>& m, double tol = 1e-8) {
  std::vector<size_t> pivots;
  if (m.rows() == 0 || m.cols() == 0) return pivots;
  size_t r = 0;
  double colscale = 1.0;
  if constexpr (std::is_same_v<T, double>) {
    for (const auto& x : m.entries())
      if (std::abs(x) > colscale) colscale = std::abs(x);
  }
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // pivot selection
    size_t piv = m.rows();
    if constexpr (std::is_same_v<T, double>) {
      double best = 0;
      for (size_t i = r; i < m.rows(); ++i)
        if (std::abs(m(i, c)) > best) {
          best = std::abs(m(i, c));
          piv = i;
        }
      if (piv == m.rows() || scalar_is_zero(m(piv, c), tol, colscale))
        piv = m.rows();
    } else {
      for (size_t i = r; i < m.rows(); ++i)
        if (!scalar_is_zero(m(i, c))) {
          piv = i;
          break;
        }
    }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    T inv = one_like(m(r, c)) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      T f = m(i, c);
      if (scalar_is_zero(f)) continue;
      for (size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m, double tol = 1e-8) {
  return rref(m, tol).size();
}

// Basis of the right null space; deterministic (free variables in column
// order, each set to one with the others zero).
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m, double tol = 1e-8) {
  const size_t n = m.cols();
  T model = m.rows() && m.cols() ? m.model() : T();
  auto pivots = rref(m, tol);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(n, zero_like(model));
    v[f] = one_like(model);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b if consistent (free variables zero), else nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b,
                                    double tol = 1e-8) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: bad rhs size");
  T model = (m.rows() && m.cols()) ? m.model() : (b.empty() ? T() : b[0]);
  Matrix<T> aug = Matrix<T>::zero_sized(m.rows(), m.cols() + 1, model);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug, tol);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), zero_like(model));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

template <class T>
T det(Matrix<T> m, double tol = 1e-8) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  if (m.rows() == 0) throw std::invalid_argument("det of empty matrix");
  T d = one_like(m.model());
  for (size_t c = 0, r = 0; c < m.cols(); ++c, ++r) {
    size_t piv = m.rows();
    if constexpr (std::is_same_v<T, double>) {
      double best = 0;
      for (size_t i = r; i < m.rows(); ++i)
        if (std::abs(m(i, c)) > best) {
          best = std::abs(m(i, c));
          piv = i;
        }
      if (piv != m.rows() && scalar_is_zero(m(piv, c), tol, 1.0))
        piv = m.rows();
    } else {
      for (size_t i = r; i < m.rows(); ++i)
        if (!scalar_is_zero(m(i, c))) {
          piv = i;
          break;
        }
    }
    if (piv == m.rows()) return zero_like(m.model());
    if (piv != r) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      d = -d;
    }
    d = d * m(r, c);
    T inv = one_like(m(r, c)) / m(r, c);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      T f = m(i, c) * inv;
      if (scalar_is_zero(f)) continue;
      for (size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
  }
  return d;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m, double tol = 1e-8) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  const size_t n = m.rows();
  Matrix<T> aug = Matrix<T>::zero_sized(n, 2 * n, m.model());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one_like(m.model());
  }
  auto pivots = rref(aug, tol);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse of singular matrix");
  Matrix<T> r = Matrix<T>::zero_sized(n, n, m.model());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

}  // namespace cuspforge
