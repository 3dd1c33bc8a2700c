#include <algorithm>
#include <vector>

#include "cuspforge/numfield.hpp"

// sqrt_in_field: find gamma in Q(alpha) with gamma^2 = beta, if one exists.
//
// Strategy: a square root, if present, is determined by its values at all
// complex embeddings of the field, up to one sign choice per real embedding
// and per conjugate pair.  We compute the embeddings numerically at high
// precision, try every sign pattern, solve the Vandermonde system for the
// power-basis coordinates, rationalize them by continued fractions, and
// accept only candidates that verify gamma^2 == beta *exactly*.  The numeric
// part is only a search heuristic; the result is certified.

namespace cuspforge {

namespace {

constexpr unsigned kPrec = 1536;  // bits

struct Cf {
  mpf_class re{0, kPrec}, im{0, kPrec};
};

Cf operator+(const Cf& a, const Cf& b) { return {a.re + b.re, a.im + b.im}; }
Cf operator-(const Cf& a, const Cf& b) { return {a.re - b.re, a.im - b.im}; }
Cf operator*(const Cf& a, const Cf& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cf operator/(const Cf& a, const Cf& b) {
  mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class abs2(const Cf& a) { return a.re * a.re + a.im * a.im; }

mpf_class fsqrt(const mpf_class& x) {
  mpf_class r(0, kPrec);
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return r;
}

Cf csqrt(const Cf& z) {
  mpf_class r = fsqrt(abs2(z));  // |z|
  mpf_class a = (r + z.re) / 2, b = (r - z.re) / 2;
  if (a < 0) a = 0;
  if (b < 0) b = 0;
  Cf out{fsqrt(a), fsqrt(b)};
  if (z.im < 0) out.im = -out.im;
  return out;
}

Cf cpow(const Cf& z, int k) {
  Cf r{mpf_class(1, kPrec), mpf_class(0, kPrec)};
  for (int i = 0; i < k; ++i) r = r * z;
  return r;
}

// All complex roots of a rational polynomial, by Durand-Kerner.
std::vector<Cf> all_roots(const std::vector<Rat>& poly) {
  int n = static_cast<int>(poly.size()) - 1;
  std::vector<Cf> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].re = mpf_class(poly[i].get_num(), kPrec);
    c[i].re /= mpf_class(poly[i].get_den(), kPrec);
  }
  mpf_class radius(1, kPrec);
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, mpf_class(abs(c[i].re) + 1));
  std::vector<Cf> x(n);
  // distinct, non-real, non-symmetric starting points
  Cf seed{mpf_class(0.4, kPrec), mpf_class(0.9, kPrec)};
  Cf acc{mpf_class(1, kPrec), mpf_class(0, kPrec)};
  for (int i = 0; i < n; ++i) {
    acc = acc * seed;
    x[i] = {acc.re * radius, acc.im * radius};
  }
  auto eval = [&](const Cf& z) {
    Cf v = c[n];
    for (int i = n - 1; i >= 0; --i) v = v * z + c[i];
    return v;
  };
  mpf_class tol(1, kPrec);
  tol >>= (kPrec - 64);
  for (int iter = 0; iter < 2000; ++iter) {
    mpf_class shift(0, kPrec);
    for (int i = 0; i < n; ++i) {
      Cf denom{mpf_class(1, kPrec), mpf_class(0, kPrec)};
      for (int j = 0; j < n; ++j)
        if (j != i) denom = denom * (x[i] - x[j]);
      Cf d = eval(x[i]) / denom;
      x[i] = x[i] - d;
      shift += abs2(d);
    }
    if (shift < tol * tol) break;
  }
  return x;
}

// continued-fraction rationalization of an mpf within tolerance
std::optional<Rat> rationalize(const mpf_class& x0) {
  mpf_class tol(1, kPrec);
  tol >>= (kPrec / 3);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpf_class x = x0;
  mpz_class max_den;
  mpz_ui_pow_ui(max_den.get_mpz_t(), 10, 60);
  for (int i = 0; i < 400; ++i) {
    mpf_class fl(0, kPrec);
    mpf_floor(fl.get_mpf_t(), x.get_mpf_t());
    mpz_class a(fl);
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    mpf_class approx(p2, kPrec);
    approx /= mpf_class(q2, kPrec);
    if (abs(approx - x0) < tol) {
      // polish: keep going while it still improves cheaply? not needed
      Rat r(p2, q2);
      r.canonicalize();
      mpf_class chk(r.get_num(), kPrec);
      chk /= mpf_class(r.get_den(), kPrec);
      if (abs(chk - x0) < tol) return r;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpf_class frac = x - fl;
    if (frac < mpf_class(1, kPrec) >> (kPrec - 8)) return std::nullopt;
    x = 1 / frac;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElem> sqrt_in_field(const FieldElem& beta) {
  int sgn = beta.sign();
  if (sgn < 0) return std::nullopt;  // designated embedding is real
  if (sgn == 0) return FieldElem(0);
  if (auto q = beta.rational_value()) {
    mpz_class sn, sd;
    if (mpz_perfect_square_p(q->get_num().get_mpz_t()) &&
        mpz_perfect_square_p(q->get_den().get_mpz_t())) {
      mpz_sqrt(sn.get_mpz_t(), q->get_num().get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), q->get_den().get_mpz_t());
      Rat r(sn, sd);
      r.canonicalize();
      return FieldElem(r);
    }
    if (!beta.field()) return std::nullopt;  // plain rational, not a square
  }
  const FieldPtr& F = beta.field();
  int n = F->degree();
  auto roots = all_roots(F->min_poly());

  // pair up conjugate roots; collect free sign slots
  mpf_class eps(1, kPrec);
  eps >>= (kPrec / 2);
  std::vector<int> partner(n, -1);
  std::vector<int> slots;  // representative index per slot
  for (int i = 0; i < n; ++i) {
    if (partner[i] != -1) continue;
    if (abs(roots[i].im) < eps) {
      roots[i].im = 0;
      partner[i] = i;
      slots.push_back(i);
      continue;
    }
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] != -1) continue;
      if (abs(roots[i].re - roots[j].re) < eps &&
          abs(roots[i].im + roots[j].im) < eps) {
        partner[i] = j;
        partner[j] = i;
        break;
      }
    }
    if (partner[i] == -1) partner[i] = i;  // defensive
    slots.push_back(i);
  }

  // beta at each embedding, and its principal square root
  std::vector<Cf> bval(n), sq(n);
  const auto& bc = beta.coeffs();
  for (int i = 0; i < n; ++i) {
    Cf v;
    for (int j = n - 1; j >= 0; --j) {
      Cf cj;
      cj.re = mpf_class(bc[j].get_num(), kPrec);
      cj.re /= mpf_class(bc[j].get_den(), kPrec);
      v = v * roots[i] + cj;
    }
    bval[i] = v;
    sq[i] = csqrt(v);
  }

  int m = static_cast<int>(slots.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Cf> gamma(n);
    for (int s = 0; s < m; ++s) {
      int i = slots[s];
      Cf g = sq[i];
      if (mask & (1u << s)) {
        g.re = -g.re;
        g.im = -g.im;
      }
      gamma[i] = g;
      if (partner[i] != i) gamma[partner[i]] = {g.re, -g.im};
    }
    // solve Vandermonde system V c = gamma for c (n x n complex)
    std::vector<std::vector<Cf>> A(n, std::vector<Cf>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = cpow(roots[i], j);
      A[i][n] = gamma[i];
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (abs2(A[r][col]) > abs2(A[piv][col])) piv = r;
      std::swap(A[col], A[piv]);
      Cf d = A[col][col];
      for (int cc = col; cc <= n; ++cc) A[col][cc] = A[col][cc] / d;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        Cf f = A[r][col];
        for (int cc = col; cc <= n; ++cc)
          A[r][cc] = A[r][cc] - f * A[col][cc];
      }
    }
    // candidate coordinates must be (near-)real rationals
    std::vector<Rat> coords(n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      if (abs(A[j][n].im) > eps) {
        ok = false;
        break;
      }
      auto r = rationalize(A[j][n].re);
      if (!r) {
        ok = false;
        break;
      }
      coords[j] = *r;
    }
    if (!ok) continue;
    FieldElem cand(F, coords);
    if (cand * cand == beta) {
      if (cand.sign() < 0) cand = -cand;
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace cuspforge
