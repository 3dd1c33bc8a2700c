#pragma once
// The slice of peripheral representations: slice points, the representation
// they induce on Z^2, the cusp-shape function, tangent cocycles, cusp model
// groups for types 0/1/2, normalizing conjugators, domains and foliations.

#include <array>
#include <cmath>
#include <stdexcept>

#include "cuspforge/cohomology.hpp"
#include "cuspforge/normalize.hpp"

namespace cuspforge {

template <class T>
struct SlicePoint {
  T a, b, x1, y1, x2, y2;
};

// validated construction: y1 x2 - x1 y2 = +-1
template <class T>
SlicePoint<T> make_slice_point(const T& a, const T& b, const T& x1, const T& y1,
                               const T& x2, const T& y2, double tol = 1e-8) {
  T d = T(y1 * x2 - x1 * y2);
  T one = one_like(d);
  if (!detail::scalars_match(d, one, tol) &&
      !detail::scalars_match(d, T(-one), tol))
    throw std::invalid_argument("slice point violates y1 x2 - x1 y2 = +-1");
  return {a, b, x1, y1, x2, y2};
}

template <class T>
bool on_center(const SlicePoint<T>& s) {
  return scalar_is_zero(s.a) && scalar_is_zero(s.b);
}

// infinitesimal generator m(x, y) of the abelian group at slice point s
template <class T>
Matrix<T> slice_generator(const SlicePoint<T>& s, const T& x, const T& y) {
  Matrix<T> m = Matrix<T>::zero_sized(4, 4, x);
  m(0, 1) = x;
  m(0, 2) = y;
  m(1, 1) = T(s.a * x);
  m(1, 3) = x;
  m(2, 2) = T(s.b * y);
  m(2, 3) = y;
  return m;
}

// exact mode: a = b = 0, where exp is the finite polynomial I + m + m^2/2
template <class T>
Representation<T> slice_rep(const SlicePoint<T>& s) {
  if (!on_center(s))
    throw std::invalid_argument("exact slice representation requires a = b = 0");
  return {torus_presentation(),
          {standard_parabolic(s.x1, s.y1), standard_parabolic(s.x2, s.y2)}};
}

// scaling-and-squaring matrix exponential (float work only)
inline Matrix<double> expm(const Matrix<double>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm of non-square");
  double norm = 0.0;
  for (const auto& e : m.entries()) norm = std::max(norm, std::abs(e));
  norm *= double(m.rows());
  int squarings = 0;
  while (norm > 0.5 && squarings < 60) {
    norm /= 2.0;
    ++squarings;
  }
  Matrix<double> x = m.scaled(std::ldexp(1.0, -squarings));
  Matrix<double> sum = Matrix<double>::identity_like(m.rows(), 0.0);
  Matrix<double> term = sum;
  for (int k = 1; k <= 24; ++k) {
    term = (term * x).scaled(1.0 / k);
    sum = sum + term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

// float mode: any slice point; emitted matrices are SL-normalized by
// M |-> |det M|^{-1/4} M (det exp(m) = e^{a x + b y})
inline Representation<double> slice_rep_float(const SlicePoint<double>& s) {
  auto imag = [&](double x, double y) {
    auto M = expm(slice_generator(s, x, y));
    return M.scaled(std::exp(-(s.a * x + s.b * y) / 4.0));
  };
  return {torus_presentation(), {imag(s.x1, s.y1), imag(s.x2, s.y2)}};
}

// cusp shape (x1 + i y1)/(x2 + i y2); requires a = b = 0
template <class T>
std::pair<T, T> cs(const SlicePoint<T>& s) {
  if (!on_center(s))
    throw std::invalid_argument("cusp shape is defined on the a = b = 0 locus");
  T n = T(s.x2 * s.x2 + s.y2 * s.y2);
  if (scalar_is_zero(n)) throw std::invalid_argument("degenerate slice point");
  return {T((s.x1 * s.x2 + s.y1 * s.y2) / n), T((s.y1 * s.x2 - s.x1 * s.y2) / n)};
}

namespace detail {
template <class T>
Matrix<T> diag4(const T& d0, const T& d1, const T& d2, const T& d3) {
  Matrix<T> m = Matrix<T>::zero_sized(4, 4, d0);
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}
template <class T>
Matrix<T> corner(const T& val) {
  Matrix<T> m = Matrix<T>::zero_sized(4, 4, val);
  m(0, 3) = val;
  return m;
}
}  // namespace detail

// d/da tangent cocycle value at (x, y): the derivative of the normalized
// exponential family composed with the inverse image matrix. Its diagonal
// part is diag(-x, 3x, -x, -x)/4 and the whole value lies in v.
template <class T>
Matrix<T> alpha_value(const T& x, const T& y) {
  T one = one_like(x);
  T two = T(one + one);
  T three = T(one + one + one);
  T four = T(two + two);
  Matrix<T> m = detail::diag4(T(-x / four), T(three * x / four), T(-x / four),
                              T(-x / four));
  m(0, 1) = T(x * x / two);
  m(1, 3) = T(-(x * x) / two);
  m(0, 3) = T(-(x * x * x) / three);
  (void)y;
  return m;
}

// d/db tangent cocycle value at (x, y); diagonal part diag(-y, -y, 3y, -y)/4
template <class T>
Matrix<T> beta_value(const T& x, const T& y) {
  T one = one_like(x);
  T two = T(one + one);
  T three = T(one + one + one);
  T four = T(two + two);
  Matrix<T> m = detail::diag4(T(-y / four), T(-y / four), T(three * y / four),
                              T(-y / four));
  m(0, 2) = T(y * y / two);
  m(2, 3) = T(-(y * y) / two);
  m(0, 3) = T(-(y * y * y) / three);
  (void)x;
  return m;
}

// the six slice tangent cocycles at s in C, in the order
// {d/da, d/db, d/dx1, d/dy1, d/dx2, d/dy2}; values lie in g
template <class T>
std::array<Cocycle<T>, 6> tangent_cocycles(const SlicePoint<T>& s) {
  if (!on_center(s))
    throw std::invalid_argument("tangent cocycles are computed at a = b = 0");
  const T zero = zero_like(s.x1);
  const T one = one_like(s.x1);
  auto Z = Matrix<T>::zero_sized(4, 4, zero);
  Matrix<T> xi = Z, eta = Z;
  xi(0, 1) = one;
  xi(1, 3) = one;
  eta(0, 2) = one;
  eta(2, 3) = one;
  return {Cocycle<T>{Module::G, {alpha_value(s.x1, s.y1), alpha_value(s.x2, s.y2)}},
          Cocycle<T>{Module::G, {beta_value(s.x1, s.y1), beta_value(s.x2, s.y2)}},
          Cocycle<T>{Module::G, {xi, Z}},
          Cocycle<T>{Module::G, {eta, Z}},
          Cocycle<T>{Module::G, {Z, xi}},
          Cocycle<T>{Module::G, {Z, eta}}};
}

// v-projections of d/da and d/db. The tangent values already lie in v, so
// the projections are the cocycles themselves; their diagonal parts are
// D_a(gamma_i) = diag(-x_i, 3x_i, -x_i, -x_i)/4 and
// D_b(gamma_i) = diag(-y_i, -y_i, 3y_i, -y_i)/4
template <class T>
std::pair<Cocycle<T>, Cocycle<T>> projected_Da_Db(const SlicePoint<T>& s) {
  if (!on_center(s))
    throw std::invalid_argument("slice basis is computed at a = b = 0");
  return {Cocycle<T>{Module::V,
                     {alpha_value(s.x1, s.y1), alpha_value(s.x2, s.y2)}},
          Cocycle<T>{Module::V,
                     {beta_value(s.x1, s.y1), beta_value(s.x2, s.y2)}}};
}

enum class CuspType { Type0 = 0, Type1 = 1, Type2 = 2 };

template <class T>
struct CuspClass {
  CuspType type;
  T lambda1, lambda2;       // Type1 uses lambda1 only; Type0 neither
  bool convexity_warning;   // Type2 with lambda1 * lambda2 < 0
};

template <class T>
CuspClass<T> classify_slice_point(const SlicePoint<T>& s) {
  bool za = scalar_is_zero(s.a), zb = scalar_is_zero(s.b);
  if (za && zb) return {CuspType::Type0, zero_like(s.a), zero_like(s.a), false};
  if (za || zb) {
    T lam = za ? s.b : s.a;
    return {CuspType::Type1, lam, zero_like(s.a), false};
  }
  return {CuspType::Type2, s.a, s.b, scalar_sign(T(s.a * s.b)) < 0};
}

// closed-form cusp model group elements M_0 / M_1 / M_2
inline Matrix<double> cusp_group_element(CuspType t, double x, double y,
                                         double z) {
  auto m = Matrix<double>::identity_like(4, 0.0);
  switch (t) {
    case CuspType::Type0:
      m(0, 1) = x;
      m(0, 2) = y;
      m(0, 3) = z + (x * x + y * y) / 2;
      m(1, 3) = x;
      m(2, 3) = y;
      return m;
    case CuspType::Type1:
      m(0, 0) = std::exp(x);
      m(1, 2) = y;
      m(1, 3) = z + y * y / 2;
      m(2, 3) = y;
      return m;
    case CuspType::Type2:
      m(0, 0) = std::exp(x);
      m(1, 1) = std::exp(y);
      m(2, 3) = z;
      return m;
  }
  throw std::logic_error("bad cusp type");
}

// conjugators carrying the slice group A_{a,b} to the model group T(...)
inline Matrix<double> conjugator(CuspType t, double a, double b = 0.0) {
  auto I = Matrix<double>::identity_like(4, 0.0);
  switch (t) {
    case CuspType::Type0:
      return I;
    case CuspType::Type1: {
      if (a == 0.0) throw std::invalid_argument("type-1 conjugator needs a != 0");
      auto C = I;
      C(0, 1) = -1.0 / a;
      C(1, 1) = a;
      C(1, 3) = 1.0;
      auto P = Matrix<double>::zero_sized(4, 4, 0.0);  // swap first two coords
      P(0, 1) = P(1, 0) = P(2, 2) = P(3, 3) = 1.0;
      return P * C;
    }
    case CuspType::Type2: {
      if (a == 0.0 || b == 0.0)
        throw std::invalid_argument("type-2 conjugator needs a, b != 0");
      auto D = I;
      D(0, 1) = -1.0 / a;
      D(0, 2) = -1.0 / b;
      D(1, 1) = a;
      D(1, 3) = 1.0;
      D(2, 2) = b;
      D(2, 3) = 1.0;
      auto P = Matrix<double>::zero_sized(4, 4, 0.0);  // cycle first 3 coords
      P(0, 1) = P(1, 2) = P(2, 0) = P(3, 3) = 1.0;
      return P * D;
    }
  }
  throw std::logic_error("bad cusp type");
}

// domain membership and the foliation parameter, affine patch [a:b:c:1]
inline double horosphere_value(CuspType t, double lambda1, double lambda2,
                               double a, double b, double c) {
  switch (t) {
    case CuspType::Type0:
      return a - (b * b + c * c) / 2;
    case CuspType::Type1:
      if (a <= 0.0)
        throw std::domain_error("type-1 domain requires a > 0");
      return b - c * c / 2 + std::log(a) / (lambda1 * lambda1);
    case CuspType::Type2:
      if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("type-2 domain requires a, b > 0");
      return c + std::log(a) / (lambda1 * lambda1) +
             std::log(b) / (lambda2 * lambda2);
  }
  throw std::logic_error("bad cusp type");
}

inline bool omega_contains(CuspType t, double lambda1, double lambda2, double a,
                           double b, double c) {
  switch (t) {
    case CuspType::Type0:
      return horosphere_value(t, lambda1, lambda2, a, b, c) > 0;
    case CuspType::Type1:
      return a > 0 && horosphere_value(t, lambda1, lambda2, a, b, c) > 0;
    case CuspType::Type2:
      return a > 0 && b > 0 &&
             horosphere_value(t, lambda1, lambda2, a, b, c) > 0;
  }
  throw std::logic_error("bad cusp type");
}

}  // namespace cuspforge
