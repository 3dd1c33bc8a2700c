#pragma once
// Complex scalars over an exact (or floating) real scalar type, 2x2 complex
// matrices, and the two-to-one homomorphism SL(2,C) -> SO(3,1) realized on
// Hermitian forms.

#include <stdexcept>

#include "cuspforge/linalg.hpp"

namespace cuspforge {

template <class T>
struct CP {
  T re, im;
  CP() : re(), im() {}
  CP(const T& r) : re(r), im() {}  // NOLINT: implicit by design
  CP(const T& r, const T& i) : re(r), im(i) {}

  CP operator+(const CP& o) const { return {T(re + o.re), T(im + o.im)}; }
  CP operator-(const CP& o) const { return {T(re - o.re), T(im - o.im)}; }
  CP operator-() const { return {T(-re), T(-im)}; }
  CP operator*(const CP& o) const {
    return {T(re * o.re - im * o.im), T(re * o.im + im * o.re)};
  }
  CP conj() const { return {re, T(-im)}; }
  T norm() const { return T(re * re + im * im); }
  CP operator/(const CP& o) const {
    T n = o.norm();
    if (scalar_is_zero(n)) throw std::domain_error("complex division by zero");
    CP num = *this * o.conj();
    return {T(num.re / n), T(num.im / n)};
  }
  bool operator==(const CP& o) const {
    return scalar_is_zero(T(re - o.re)) && scalar_is_zero(T(im - o.im));
  }
  bool operator!=(const CP& o) const { return !(*this == o); }
};

template <class T>
CP<T> zero_like(const CP<T>& x) {
  return {zero_like(x.re), zero_like(x.re)};
}
template <class T>
CP<T> one_like(const CP<T>& x) {
  return {one_like(x.re), zero_like(x.re)};
}
template <class T>
bool scalar_is_zero(const CP<T>& x) {
  return scalar_is_zero(x.re) && scalar_is_zero(x.im);
}

// The real 4x4 image of a 2x2 complex matrix A acting on Hermitian forms
// h |-> A h A*, written in coordinates adapted so that [[1,1],[0,1]] maps to
// the standard parabolic with corner entry 1/2.  For det A = 1 the image
// preserves the signature-(3,1) form J, and A and -A map to the same matrix.
template <class T>
Matrix<T> lift(const Matrix<CP<T>>& A) {
  if (A.rows() != 2 || A.cols() != 2)
    throw std::invalid_argument("lift expects a 2x2 matrix");
  const T rzero = zero_like(A.model().re);
  const T rone = one_like(rzero);
  const T two = T(rone + rone);
  auto C = [&](const T& r, const T& i) { return CP<T>(r, i); };
  // Hermitian basis h1..h4 with coordinates
  //   h(x) = [[x1, x2 + i x3], [x2 - i x3, 2 x4]].
  std::vector<Matrix<CP<T>>> h;
  for (int k = 0; k < 4; ++k)
    h.push_back(Matrix<CP<T>>::zero_sized(2, 2, A.model()));
  h[0](0, 0) = C(rone, rzero);
  h[1](0, 1) = C(rone, rzero);
  h[1](1, 0) = C(rone, rzero);
  h[2](0, 1) = C(rzero, rone);
  h[2](1, 0) = C(rzero, T(-rone));
  h[3](1, 1) = C(two, rzero);

  Matrix<CP<T>> Astar = Matrix<CP<T>>::zero_sized(2, 2, A.model());
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) Astar(i, j) = A(j, i).conj();

  Matrix<T> L = Matrix<T>::zero_sized(4, 4, rzero);
  for (size_t k = 0; k < 4; ++k) {
    auto H = A * h[k] * Astar;
    L(0, k) = H(0, 0).re;
    L(1, k) = H(0, 1).re;
    L(2, k) = H(0, 1).im;
    L(3, k) = T(H(1, 1).re / two);
  }
  // rescale rows/columns by diag(1/2, 1, 1, 2) to match the standard
  // parabolic normal form
  const T scale[4] = {T(rone / two), rone, rone, two};
  Matrix<T> out = Matrix<T>::zero_sized(4, 4, rzero);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) out(i, j) = T(scale[i] * L(i, j) / scale[j]);
  return out;
}

template <class T>
CP<T> det2(const Matrix<CP<T>>& A) {
  if (A.rows() != 2 || A.cols() != 2)
    throw std::invalid_argument("det2 expects a 2x2 matrix");
  return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
}

}  // namespace cuspforge
