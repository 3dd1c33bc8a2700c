#pragma once
// The sl(4) module structure used throughout: the signature-(3,1) form J,
// the involution sigma(a) = -J a^t J, the splitting sl(4) = so(3,1) + v,
// frozen ordered bases for both summands, the Killing pairing 4 tr(ab),
// and the adjoint action.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cuspforge/linalg.hpp"

namespace cuspforge {

enum class Module { G, SO31, V };

inline size_t module_dim(Module m) {
  switch (m) {
    case Module::G: return 15;
    case Module::SO31: return 6;
    case Module::V: return 9;
  }
  throw std::logic_error("bad module");
}

template <class T>
Matrix<T> form_j(const T& model) {
  Matrix<T> J = Matrix<T>::zero_sized(4, 4, model);
  T one = one_like(model);
  J(0, 3) = -one;
  J(3, 0) = -one;
  J(1, 1) = one;
  J(2, 2) = one;
  return J;
}

// sigma(a) = -J a^t J; involutive module map with 1-eigenspace so(3,1)
template <class T>
Matrix<T> sigma(const Matrix<T>& a) {
  auto J = form_j(a.model());
  return -(J * a.transpose() * J);
}

template <class T>
bool in_so31(const Matrix<T>& g) {
  if (g.rows() != 4 || g.cols() != 4) return false;
  auto J = form_j(g.model());
  return g.transpose() * J * g == J;
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> split(const Matrix<T>& a) {
  if (!scalar_is_zero(T(a.trace())))
    throw std::invalid_argument("split requires trace zero");
  auto s = sigma(a);
  T half = one_like(a.model()) / (one_like(a.model()) + one_like(a.model()));
  return {(a + s).scaled(half), (a - s).scaled(half)};
}

template <class T>
T killing(const Matrix<T>& a, const Matrix<T>& b) {
  T four = one_like(a.model()) + one_like(a.model()) + one_like(a.model()) +
           one_like(a.model());
  return four * (a * b).trace();
}

template <class T>
Matrix<T> adjoint(const Matrix<T>& g, const Matrix<T>& a) {
  return g * a * inverse(g);
}

namespace detail {
template <class T>
Matrix<T> from_pattern(const int (&p)[4][4], const T& model) {
  Matrix<T> m = Matrix<T>::zero_sized(4, 4, model);
  T one = one_like(model);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < p[i][j]; ++k) m(i, j) = m(i, j) + one;
  return m;
}
template <class T>
Matrix<T> from_pattern_signed(const int (&p)[4][4], const T& model) {
  Matrix<T> m = Matrix<T>::zero_sized(4, 4, model);
  T one = one_like(model);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int v = p[i][j];
      while (v > 0) { m(i, j) = m(i, j) + one; --v; }
      while (v < 0) { m(i, j) = m(i, j) - one; ++v; }
    }
  return m;
}
}  // namespace detail

// Ordered basis of so(3,1): generic element
//   [[ d,  p,  q, 0], [m, 0, r, p], [n, -r, 0, q], [0, m, n, -d]]
// with parameters ordered (d, p, q, m, n, r).
template <class T>
std::vector<Matrix<T>> so31_basis(const T& model) {
  using detail::from_pattern_signed;
  static const int D[4][4] = {{1,0,0,0},{0,0,0,0},{0,0,0,0},{0,0,0,-1}};
  static const int P[4][4] = {{0,1,0,0},{0,0,0,1},{0,0,0,0},{0,0,0,0}};
  static const int Q[4][4] = {{0,0,1,0},{0,0,0,0},{0,0,0,1},{0,0,0,0}};
  static const int Mm[4][4] = {{0,0,0,0},{1,0,0,0},{0,0,0,0},{0,1,0,0}};
  static const int N[4][4] = {{0,0,0,0},{0,0,0,0},{1,0,0,0},{0,0,1,0}};
  static const int R[4][4] = {{0,0,0,0},{0,0,1,0},{0,-1,0,0},{0,0,0,0}};
  return {from_pattern_signed(D, model), from_pattern_signed(P, model),
          from_pattern_signed(Q, model), from_pattern_signed(Mm, model),
          from_pattern_signed(N, model), from_pattern_signed(R, model)};
}

// Ordered basis of v: generic element with parameters u1..u9 reads
//   [[-(u5+u8)/2, u1, u2, u3], [u4, u5, u6, -u1],
//    [u7, u6, u8, -u2], [u9, -u4, -u7, -(u5+u8)/2]]
// The u5 and u8 vectors are scaled by 2 to stay integral.
template <class T>
std::vector<Matrix<T>> v_basis(const T& model) {
  using detail::from_pattern_signed;
  static const int U1[4][4] = {{0,1,0,0},{0,0,0,-1},{0,0,0,0},{0,0,0,0}};
  static const int U2[4][4] = {{0,0,1,0},{0,0,0,0},{0,0,0,-1},{0,0,0,0}};
  static const int U3[4][4] = {{0,0,0,1},{0,0,0,0},{0,0,0,0},{0,0,0,0}};
  static const int U4[4][4] = {{0,0,0,0},{1,0,0,0},{0,0,0,0},{0,-1,0,0}};
  static const int U5[4][4] = {{-1,0,0,0},{0,2,0,0},{0,0,0,0},{0,0,0,-1}};
  static const int U6[4][4] = {{0,0,0,0},{0,0,1,0},{0,1,0,0},{0,0,0,0}};
  static const int U7[4][4] = {{0,0,0,0},{0,0,0,0},{1,0,0,0},{0,0,-1,0}};
  static const int U8[4][4] = {{-1,0,0,0},{0,0,0,0},{0,0,2,0},{0,0,0,-1}};
  static const int U9[4][4] = {{0,0,0,0},{0,0,0,0},{0,0,0,0},{1,0,0,0}};
  return {from_pattern_signed(U1, model), from_pattern_signed(U2, model),
          from_pattern_signed(U3, model), from_pattern_signed(U4, model),
          from_pattern_signed(U5, model), from_pattern_signed(U6, model),
          from_pattern_signed(U7, model), from_pattern_signed(U8, model),
          from_pattern_signed(U9, model)};
}

template <class T>
std::vector<Matrix<T>> module_basis(Module mod, const T& model) {
  switch (mod) {
    case Module::SO31: return so31_basis(model);
    case Module::V: return v_basis(model);
    case Module::G: {
      auto b = so31_basis(model);
      auto v = v_basis(model);
      b.insert(b.end(), v.begin(), v.end());
      return b;
    }
  }
  throw std::logic_error("bad module");
}

// flatten a 4x4 into a 16-vector (row-major)
template <class T>
std::vector<T> flatten(const Matrix<T>& m) {
  return std::vector<T>(m.entries().begin(), m.entries().end());
}

// 16 x dim matrix whose columns are the flattened basis elements
template <class T>
Matrix<T> basis_matrix(Module mod, const T& model) {
  auto basis = module_basis(mod, model);
  Matrix<T> B = Matrix<T>::zero_sized(16, basis.size(), model);
  for (size_t j = 0; j < basis.size(); ++j) {
    auto f = flatten(basis[j]);
    for (size_t i = 0; i < 16; ++i) B(i, j) = f[i];
  }
  return B;
}

template <class T>
Matrix<T> from_module_coords(Module mod, const std::vector<T>& c, const T& model);

// coordinates of a module element in the frozen ordered basis; reads the
// defining entries directly (each basis vector owns a distinct entry) and
// verifies membership by reconstruction
template <class T>
std::vector<T> module_coords(Module mod, const Matrix<T>& a, double tol = 1e-8) {
  if (a.rows() != 4 || a.cols() != 4)
    throw std::invalid_argument("module elements are 4x4");
  T two = T(one_like(a.model()) + one_like(a.model()));
  std::vector<T> c;
  switch (mod) {
    case Module::SO31:
      c = {a(0, 0), a(0, 1), a(0, 2), a(1, 0), a(2, 0), a(1, 2)};
      break;
    case Module::V:
      c = {a(0, 1), a(0, 2),        a(0, 3), a(1, 0), T(a(1, 1) / two),
           a(1, 2), a(2, 0),        T(a(2, 2) / two), a(3, 0)};
      break;
    case Module::G: {
      T half = T(one_like(a.model()) / two);
      auto s = sigma(a);
      auto p = (a + s).scaled(half);
      auto q = (a - s).scaled(half);
      c = module_coords(Module::SO31, p, tol);
      auto cv = module_coords(Module::V, q, tol);
      c.insert(c.end(), cv.begin(), cv.end());
      break;
    }
  }
  auto rec = from_module_coords(mod, c, a.model());
  if constexpr (std::is_same_v<T, double>) {
    double scale = 1.0;
    for (const auto& e : a.entries()) scale = std::max(scale, std::abs(e));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        if (std::abs(rec(i, j) - a(i, j)) > tol * scale)
          throw std::invalid_argument("element is not in the module");
  } else {
    if (!(rec == a)) throw std::invalid_argument("element is not in the module");
  }
  return c;
}

template <class T>
Matrix<T> from_module_coords(Module mod, const std::vector<T>& c, const T& model) {
  auto basis = module_basis(mod, model);
  if (c.size() != basis.size())
    throw std::invalid_argument("wrong coordinate length");
  Matrix<T> a = Matrix<T>::zero_sized(4, 4, model);
  for (size_t j = 0; j < basis.size(); ++j) a = a + basis[j].scaled(c[j]);
  return a;
}

}  // namespace cuspforge
