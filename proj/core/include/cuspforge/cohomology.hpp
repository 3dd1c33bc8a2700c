#pragma once
// Twisted group cohomology in degree one: cocycles, coboundaries,
// H^1 dimensions and representatives, restriction to peripheral subgroups,
// and the rigidity verdict.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cuspforge/lie.hpp"
#include "cuspforge/normalize.hpp"
#include "cuspforge/rep.hpp"
#include "cuspforge/word.hpp"

namespace cuspforge {

// A 1-cocycle: one module element (4x4) per generator, extended to words by
// z(uv) = z(u) + Ad(rho(u)) z(v).
template <class T>
struct Cocycle {
  Module mod;
  std::vector<Matrix<T>> values;  // aligned with the presentation generators
};

// the module-coordinate matrix of a |-> Ad(g) a
template <class T>
Matrix<T> adjoint_operator(Module mod, const Matrix<T>& g, double tol = 1e-8) {
  const size_t m = module_dim(mod);
  auto basis = module_basis(mod, g.model());
  auto ginv = inverse(g, tol);
  Matrix<T> op = Matrix<T>::zero_sized(m, m, g.model());
  for (size_t j = 0; j < m; ++j) {
    auto c = module_coords(mod, g * basis[j] * ginv, tol);
    for (size_t i = 0; i < m; ++i) op(i, j) = c[i];
  }
  return op;
}

// the module-coordinate matrix of sum_i c_i Ad(rho(w_i))
template <class T>
Matrix<T> groupring_operator(Module mod, const GroupRingElem& e,
                             const Representation<T>& rep, double tol = 1e-8) {
  const size_t m = module_dim(mod);
  const T model = rep.images.at(0).model();
  Matrix<T> op = Matrix<T>::zero_sized(m, m, model);
  for (const auto& term : e) {
    auto block = adjoint_operator(mod, rep.evaluate(term.word), tol);
    T c = zero_like(model);
    long n = term.coeff > 0 ? term.coeff : -term.coeff;
    for (long k = 0; k < n; ++k) c = T(c + one_like(model));
    if (term.coeff < 0) c = T(-c);
    op = op + block.scaled(c);
  }
  return op;
}

// one block row per relator, one block column per generator; kernel = Z^1
template <class T>
Matrix<T> fox_jacobian(const Representation<T>& rep, Module mod,
                       double tol = 1e-8) {
  const size_t m = module_dim(mod);
  const size_t G = rep.pres.num_generators();
  const size_t R = rep.pres.relators.size();
  const T model = rep.images.at(0).model();
  Matrix<T> jac = Matrix<T>::zero_sized(R * m, G * m, model);
  for (size_t r = 0; r < R; ++r)
    for (size_t g = 0; g < G; ++g) {
      auto block = groupring_operator(
          mod, fox_derivative(rep.pres.relators[r], int(g)), rep, tol);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) jac(r * m + i, g * m + j) = block(i, j);
    }
  return jac;
}

template <class T>
Cocycle<T> cocycle_from_coords(const Representation<T>& rep, Module mod,
                               const std::vector<T>& flat) {
  const size_t m = module_dim(mod);
  const size_t G = rep.pres.num_generators();
  if (flat.size() != G * m)
    throw std::invalid_argument("cocycle coordinate vector has wrong length");
  const T model = rep.images.at(0).model();
  Cocycle<T> z{mod, {}};
  for (size_t g = 0; g < G; ++g) {
    std::vector<T> c(flat.begin() + long(g * m), flat.begin() + long((g + 1) * m));
    z.values.push_back(from_module_coords(mod, c, model));
  }
  return z;
}

template <class T>
std::vector<T> cocycle_coords(const Cocycle<T>& z, double tol = 1e-8) {
  std::vector<T> flat;
  for (const auto& v : z.values) {
    auto c = module_coords(z.mod, v, tol);
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return flat;
}

// stacked (I - Ad(rho(g_i))) blocks: the coboundary map in coordinates
template <class T>
Matrix<T> coboundary_matrix(const Representation<T>& rep, Module mod,
                            double tol = 1e-8) {
  const size_t m = module_dim(mod);
  const size_t G = rep.pres.num_generators();
  const T model = rep.images.at(0).model();
  auto I = Matrix<T>::identity_like(m, model);
  Matrix<T> B = Matrix<T>::zero_sized(G * m, m, model);
  for (size_t g = 0; g < G; ++g) {
    auto block = I - adjoint_operator(mod, rep.images[g], tol);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) B(g * m + i, j) = block(i, j);
  }
  return B;
}

template <class T>
std::vector<Cocycle<T>> z1_basis(const Representation<T>& rep, Module mod,
                                 double tol = 1e-8) {
  auto kern = kernel_basis(fox_jacobian(rep, mod, tol), tol);
  std::vector<Cocycle<T>> out;
  for (auto& v : kern) out.push_back(cocycle_from_coords(rep, mod, v));
  return out;
}

template <class T>
std::vector<Cocycle<T>> b1_basis(const Representation<T>& rep, Module mod,
                                 double tol = 1e-8) {
  auto B = coboundary_matrix(rep, mod, tol);
  auto copy = B;
  auto pivots = rref(copy, tol);
  std::vector<Cocycle<T>> out;
  for (size_t j : pivots) out.push_back(cocycle_from_coords(rep, mod, B.col(j)));
  return out;
}

template <class T>
struct CohomologySummary {
  size_t z1_dim = 0, b1_dim = 0, h1_dim = 0;
  std::vector<Cocycle<T>> h1_basis;  // kernel vectors completing B^1 in Z^1
};

template <class T>
CohomologySummary<T> h1(const Representation<T>& rep, Module mod,
                        double tol = 1e-8) {
  const size_t m = module_dim(mod);
  const size_t G = rep.pres.num_generators();
  const T model = rep.images.at(0).model();
  auto kern = kernel_basis(fox_jacobian(rep, mod, tol), tol);
  auto B = coboundary_matrix(rep, mod, tol);

  CohomologySummary<T> s;
  s.z1_dim = kern.size();
  s.b1_dim = rank(B, tol);

  // deterministic completion: append kernel vectors that increase the rank
  std::vector<std::vector<T>> chosen;
  size_t cur = s.b1_dim;
  for (const auto& v : kern) {
    Matrix<T> M = Matrix<T>::zero_sized(G * m, B.cols() + chosen.size() + 1, model);
    for (size_t i = 0; i < G * m; ++i)
      for (size_t j = 0; j < B.cols(); ++j) M(i, j) = B(i, j);
    for (size_t c = 0; c < chosen.size(); ++c)
      for (size_t i = 0; i < G * m; ++i) M(i, B.cols() + c) = chosen[c][i];
    for (size_t i = 0; i < G * m; ++i) M(i, M.cols() - 1) = v[i];
    if (rank(M, tol) > cur + chosen.size()) chosen.push_back(v);
  }
  s.h1_dim = s.z1_dim - s.b1_dim;
  if (chosen.size() != s.h1_dim)
    throw std::runtime_error("cohomology basis completion failed");
  for (auto& v : chosen) s.h1_basis.push_back(cocycle_from_coords(rep, mod, v));
  return s;
}

// z extended to a word by the cocycle rule; returns a module element
template <class T>
Matrix<T> evaluate_cocycle(const Representation<T>& rep, const Cocycle<T>& z,
                           const Word& w, double tol = 1e-8) {
  const T model = rep.images.at(0).model();
  Matrix<T> val = Matrix<T>::zero_sized(4, 4, model);
  Matrix<T> g = Matrix<T>::identity_like(4, model);
  for (const auto& syl : w.syllables()) {
    const auto& img = rep.images.at(size_t(syl.gen));
    const auto& zv = z.values.at(size_t(syl.gen));
    long n = syl.exp > 0 ? syl.exp : -syl.exp;
    if (syl.exp > 0) {
      for (long k = 0; k < n; ++k) {
        val = val + g * zv * inverse(g, tol);
        g = g * img;
      }
    } else {
      auto iinv = inverse(img, tol);
      for (long k = 0; k < n; ++k) {
        g = g * iinv;
        val = val - g * zv * inverse(g, tol);
      }
    }
  }
  return val;
}

// restriction to the i-th peripheral torus <m, l | [m,l]>; returns the torus
// representation together with the restricted cocycle
template <class T>
std::pair<Representation<T>, Cocycle<T>> restrict_cocycle(
    const Representation<T>& rep, const Cocycle<T>& z, size_t cusp_index,
    double tol = 1e-8) {
  const auto& pp = rep.pres.peripherals.at(cusp_index);
  Representation<T> tor{torus_presentation(),
                        {rep.evaluate(pp.meridian), rep.evaluate(pp.longitude)}};
  Cocycle<T> rz{z.mod,
                {evaluate_cocycle(rep, z, pp.meridian, tol),
                 evaluate_cocycle(rep, z, pp.longitude, tol)}};
  return {tor, rz};
}

// conjugating the representation by C sends a cocycle z to C z C^{-1}
template <class T>
Cocycle<T> transform_cocycle(const Cocycle<T>& z, const Matrix<T>& C,
                             double tol = 1e-8) {
  Cocycle<T> out{z.mod, {}};
  auto Cinv = inverse(C, tol);
  for (const auto& v : z.values) out.values.push_back(C * v * Cinv);
  return out;
}

// solve z(g_i) = a - Ad(rho(g_i)) a; returns the witness a when solvable
template <class T>
std::optional<Matrix<T>> is_coboundary(const Representation<T>& rep,
                                       const Cocycle<T>& z, double tol = 1e-8) {
  auto B = coboundary_matrix(rep, z.mod, tol);
  auto x = solve(B, cocycle_coords(z, tol), tol);
  if (!x) return std::nullopt;
  return from_module_coords(z.mod, *x, rep.images.at(0).model());
}

struct RigidityVerdict {
  size_t num_cusps = 0;
  size_t z1_dim = 0, b1_dim = 0, h1_dim = 0;  // module v
  bool fast_path = false;  // h1_dim == num_cusps implies rigidity
  size_t res_kernel_dim = 0;  // computed on the slow path, else 0
  bool rigid = false;
};

template <class T>
RigidityVerdict rigidity_verdict(const Representation<T>& rep,
                                 double tol = 1e-8) {
  const size_t k = rep.pres.num_cusps();
  if (k == 0) throw std::invalid_argument("rigidity requires at least one cusp");
  auto errs = rep.validate(true, tol);
  if (!errs.empty())
    throw std::invalid_argument("invalid representation: " + errs.front());

  RigidityVerdict v;
  v.num_cusps = k;
  auto s = h1(rep, Module::V, tol);
  v.z1_dim = s.z1_dim;
  v.b1_dim = s.b1_dim;
  v.h1_dim = s.h1_dim;
  if (s.h1_dim == k) {
    v.fast_path = true;
    v.rigid = true;
    return v;
  }

  // slow path: dimension of the kernel of res_* on the H^1 representatives.
  // Unknowns: class coefficients c (h of them) then one witness per cusp;
  // rows: for each cusp and each peripheral generator,
  //   sum_j c_j res_i(z_j)(gamma) - (I - Ad(rho(gamma))) a_i = 0.
  const size_t m = module_dim(Module::V);
  const size_t h = s.h1_dim;
  const T model = rep.images.at(0).model();
  Matrix<T> M = Matrix<T>::zero_sized(2 * k * m, h + k * m, model);
  for (size_t i = 0; i < k; ++i) {
    Representation<T> tor{torus_presentation(), {}};
    for (size_t j = 0; j < h; ++j) {
      auto [torj, rz] = restrict_cocycle(rep, s.h1_basis[j], i, tol);
      tor = torj;
      auto flat = cocycle_coords(rz, tol);
      for (size_t r = 0; r < 2 * m; ++r) M(2 * i * m + r, j) = flat[r];
    }
    auto B = coboundary_matrix(tor, Module::V, tol);
    for (size_t r = 0; r < 2 * m; ++r)
      for (size_t c = 0; c < m; ++c) M(2 * i * m + r, h + i * m + c) = T(-B(r, c));
  }
  auto kern = kernel_basis(M, tol);
  // project kernel vectors to the class coefficients and take the rank
  if (!kern.empty()) {
    Matrix<T> P = Matrix<T>::zero_sized(h, kern.size(), model);
    for (size_t j = 0; j < kern.size(); ++j)
      for (size_t i = 0; i < h; ++i) P(i, j) = kern[j][i];
    v.res_kernel_dim = rank(P, tol);
  }
  v.rigid = (v.res_kernel_dim == 0);
  return v;
}

}  // namespace cuspforge
