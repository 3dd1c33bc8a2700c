#pragma once
// Conjugating a commuting pair of parabolic 4x4 matrices into the standard
// cusp normal form (N(1,0), N(u,v)), where
//   N(x,y) = [[1,x,y,(x^2+y^2)/2],[0,1,0,x],[0,0,1,y],[0,0,0,1]].
// The pair (u,v) is the cusp shape in these coordinates.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cuspforge/linalg.hpp"
#include "cuspforge/scalar.hpp"

namespace cuspforge {

template <class T>
Matrix<T> standard_parabolic(const T& x, const T& y) {
  Matrix<T> m = Matrix<T>::identity_like(4, x);
  T two = T(one_like(x) + one_like(x));
  m(0, 1) = x;
  m(0, 2) = y;
  m(0, 3) = T((x * x + y * y) / two);
  m(1, 3) = x;
  m(2, 3) = y;
  return m;
}

template <class T>
struct NormalizedPeripheral {
  Matrix<T> conjugator;  // C with C P C^-1 = N(1,0) and C Q C^-1 = N(u,v)
  T u, v;
};

// True unless the shape argument is a multiple of pi/3, i.e. v(v^2-3u^2) != 0.
template <class T>
bool cusp_shape_argument_ok(const T& u, const T& v) {
  T three = T(one_like(u) + one_like(u) + one_like(u));
  return !scalar_is_zero(T(v * (v * v - three * u * u)));
}

namespace detail {

template <class T>
bool scalars_match(const T& a, const T& b, double tol) {
  if constexpr (std::is_same_v<T, double>) {
    double s = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * s;
  } else {
    (void)tol;
    return scalar_is_zero(T(a - b));
  }
}

template <class T>
bool matrices_match(const Matrix<T>& a, const Matrix<T>& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!scalars_match(a(i, j), b(i, j), tol)) return false;
  return true;
}

// matrix-vector product
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
  std::vector<T> r(m.rows(), zero_like(m.model()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i] = T(r[i] + m(i, j) * x[j]);
  return r;
}

template <class T>
Matrix<T> columns_matrix(const std::vector<std::vector<T>>& cols, const T& model) {
  Matrix<T> m = Matrix<T>::zero_sized(cols[0].size(), cols.size(), model);
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace detail

template <class T>
NormalizedPeripheral<T> normalize_peripheral(Matrix<T> P, Matrix<T> Q,
                                             double tol = 1e-8) {
  using detail::mat_vec;
  using detail::columns_matrix;
  using detail::matrices_match;
  using detail::scalars_match;

  if (P.rows() != 4 || P.cols() != 4 || Q.rows() != 4 || Q.cols() != 4)
    throw std::invalid_argument("normalize_peripheral expects 4x4 matrices");
  const T model = P.model();
  const T one = one_like(model);
  const T two = T(one + one);
  const auto I = Matrix<T>::identity_like(4, model);
  const auto Z = Matrix<T>::zero_sized(4, 4, model);

  // sign-normalize: a unipotent has trace 4, its negative trace -4
  if (scalar_sign(T(P.trace())) < 0) P = -P;
  if (scalar_sign(T(Q.trace())) < 0) Q = -Q;

  if (!matrices_match(P * Q, Q * P, tol))
    throw std::invalid_argument("peripheral matrices do not commute");

  // fast path: already in normal form
  if (matrices_match(P, standard_parabolic(one, zero_like(model)), tol)) {
    T u = Q(1, 3), v = Q(2, 3);
    if (scalar_sign(v) > 0 && matrices_match(Q, standard_parabolic(u, v), tol))
      return {I, u, v};
  }

  const Matrix<T> A = P - I;
  const Matrix<T> A2 = A * A;
  if (matrices_match(A2, Z, tol) || !matrices_match(A2 * A, Z, tol))
    throw std::invalid_argument(
        "first peripheral is not a parabolic of the required type");

  // f1 spans the image of (P-I)^2
  std::vector<T> f1;
  for (size_t j = 0; j < 4 && f1.empty(); ++j) {
    auto c = A2.col(j);
    for (auto& e : c)
      if (!scalar_is_zero(e)) {
        f1 = c;
        break;
      }
  }

  auto f4opt = solve(A2, f1, tol);
  if (!f4opt) throw std::invalid_argument("parabolic has unexpected structure");
  std::vector<T> f4 = *f4opt;

  std::vector<T> f2 = mat_vec(A, f4);
  for (size_t i = 0; i < 4; ++i) f2[i] = T(f2[i] - f1[i] / two);

  const Matrix<T> B = Q - I;

  // (Q-I) f2 = u f1
  auto usol = solve(columns_matrix<T>({f1}, model), mat_vec(B, f2), tol);
  if (!usol)
    throw std::invalid_argument("second peripheral does not share the flag");
  T u = (*usol)[0];

  // pick t in ker(P-I) independent of f1
  auto kern = kernel_basis(A, tol);
  std::vector<T> t;
  for (auto& k : kern)
    if (rank(columns_matrix<T>({f1, k}, model), tol) == 2) {
      t = k;
      break;
    }
  if (t.empty())
    throw std::invalid_argument("parabolic has unexpected kernel");

  // (Q-I) t = tau f1
  auto tausol = solve(columns_matrix<T>({f1}, model), mat_vec(B, t), tol);
  if (!tausol)
    throw std::invalid_argument("second peripheral does not share the flag");
  T tau = (*tausol)[0];
  if (scalar_is_zero(tau))
    throw std::invalid_argument("peripheral pair is degenerate");

  // (Q-I) f4 = p f1 + q f2 + r t
  auto pqr = solve(columns_matrix<T>({f1, f2, t}, model), mat_vec(B, f4), tol);
  if (!pqr)
    throw std::invalid_argument("second peripheral does not share the flag");
  T p = (*pqr)[0], q = (*pqr)[1], r = (*pqr)[2];
  if (!scalars_match(q, u, tol))
    throw std::invalid_argument("peripheral pair is not simultaneously normalizable");

  T w = T(tau * r);
  if (scalar_sign(w) <= 0)
    throw std::invalid_argument("cusp shape is degenerate (v^2 <= 0)");
  auto vopt = scalar_sqrt(w);
  if (!vopt)
    throw std::invalid_argument(
        "cusp shape leaves the coefficient field (v^2 is not a square)");
  T v = *vopt;
  if (scalar_sign(v) < 0) v = T(-v);

  std::vector<T> f3(4, zero_like(model));
  for (size_t i = 0; i < 4; ++i) f3[i] = T(v * t[i] / tau);

  // fix the corner entry of the normalized Q to (u^2+v^2)/2 by shifting f4
  // along f3 (which lies in ker(P-I), so the P normalization is unaffected)
  T ptarget = T((u * u + v * v) / two);
  T c = T((ptarget - p) / v);
  for (size_t i = 0; i < 4; ++i) f4[i] = T(f4[i] + c * f3[i]);

  Matrix<T> Cinv = columns_matrix<T>({f1, f2, f3, f4}, model);
  Matrix<T> C = inverse(Cinv, tol);

  NormalizedPeripheral<T> out{C, u, v};
  if (!matrices_match(C * P * Cinv, standard_parabolic(one, zero_like(model)),
                      tol) ||
      !matrices_match(C * Q * Cinv, standard_parabolic(u, v), tol))
    throw std::runtime_error("peripheral normalization failed verification");
  return out;
}

}  // namespace cuspforge
