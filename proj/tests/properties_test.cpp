// Randomized property suites, 100+ cases each, all exact over the rationals:
//   1. Fox derivative axioms (product rule, inverse rule) under evaluation
//   2. cocycle-condition closure: z(uv) = z(u) + Ad(rho(u)) z(v)
//   3. coboundaries lie in the kernel of the Fox Jacobian
//   4. sigma is an involutive Lie-algebra automorphism and split() is its
//      eigenspace decomposition
//   5. the splitting sl(4) = so(3,1) + v is Killing-orthogonal
//   6. the duality pairing kills coboundary values
//   7. slice coordinates round-trip through conjugated cocycles
#include "doctest.h"

#include <random>

#include "cuspforge/cohomology.hpp"
#include "cuspforge/pairing.hpp"
#include "cuspforge/slice.hpp"

using namespace cuspforge;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(20260826u);
  return gen;
}

// small random rational p/q with p in [-9, 9], q in [1, 4]
Rat rrat() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Rat r(num(rng()), den(rng()));
  r.canonicalize();
  return r;
}

Rat rrat_nonzero() {
  for (;;) {
    Rat r = rrat();
    if (r != 0) return r;
  }
}

// positive draw: the normalized cusp shape always has v > 0, so building a
// torus at negative v would silently land in a reflected frame
Rat rrat_pos() { return Rat(abs(rrat_nonzero())); }

// random word of length <= max_len over ngens generators, exponents +-1, +-2
Word rword(int ngens, int max_len = 6) {
  std::uniform_int_distribution<int> len(0, max_len), g(0, ngens - 1),
      e(1, 2), sgn(0, 1);
  Word w;
  int n = len(rng());
  for (int i = 0; i < n; ++i) {
    long exp = e(rng()) * (sgn(rng()) ? 1 : -1);
    w = w * Word{{{g(rng()), exp}}};
  }
  return w;
}

// random invertible rational matrix: product of elementary shears times a
// unit diagonal, so the determinant is +-1 and the inverse stays exact
Matrix<Rat> rinvertible(size_t n) {
  std::uniform_int_distribution<int> idx(0, int(n) - 1), sgn(0, 1);
  auto m = Matrix<Rat>::identity_like(n, Rat(0));
  for (int t = 0; t < 6; ++t) {
    int i = idx(rng()), j = idx(rng());
    if (i == j) continue;
    auto s = Matrix<Rat>::identity_like(n, Rat(0));
    s(size_t(i), size_t(j)) = rrat();
    m = m * s;
  }
  auto d = Matrix<Rat>::identity_like(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    if (sgn(rng())) d(i, i) = Rat(-1);
  return m * d;
}

// random traceless 4x4 rational matrix
Matrix<Rat> rsl4() {
  auto m = Matrix<Rat>::zero_sized(4, 4, Rat(0));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) m(i, j) = rrat();
  m(3, 3) = Rat(m(3, 3) - m.trace());
  return m;
}

// random element of the module (v has dim 9, so(3,1) has dim 6)
Matrix<Rat> rmodule(Module mod) {
  std::vector<Rat> c(module_dim(mod));
  for (auto& x : c) x = rrat();
  return from_module_coords(mod, c, Rat(0));
}

Matrix<Rat> eval_groupring(const Representation<Rat>& rep,
                           const GroupRingElem& e) {
  auto acc = Matrix<Rat>::zero_sized(rep.dim(), rep.dim(), Rat(0));
  for (const auto& t : e) {
    auto m = rep.evaluate(t.word);
    for (long k = 0; k < (t.coeff > 0 ? t.coeff : -t.coeff); ++k)
      acc = t.coeff > 0 ? Matrix<Rat>(acc + m) : Matrix<Rat>(acc - m);
  }
  return acc;
}

bool is_zero(const Matrix<Rat>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

Representation<Rat> torus_rep(const Rat& u, const Rat& v) {
  return {torus_presentation(),
          {standard_parabolic(Rat(1), Rat(0)), standard_parabolic(u, v)}};
}

}  // namespace

// [TRIVIAL] Fox axioms d(uv) = d(u) + u d(v) and d(w^-1) = -w^-1 d(w),
// checked after evaluation under a random exact matrix representation of
// the free group (a faithful enough separation for randomized inputs).
TEST_CASE("fox derivative axioms") {
  const int ngens = 3;
  for (int t = 0; t < 120; ++t) {
    Representation<Rat> rep;
    rep.pres.generator_names = {"a", "b", "c"};
    rep.images = {rinvertible(3), rinvertible(3), rinvertible(3)};
    Word u = rword(ngens), v = rword(ngens);
    for (int g = 0; g < ngens; ++g) {
      auto lhs = eval_groupring(rep, fox_derivative(u * v, g));
      auto rhs = Matrix<Rat>(
          eval_groupring(rep, fox_derivative(u, g)) +
          rep.evaluate(u) * eval_groupring(rep, fox_derivative(v, g)));
      CHECK(is_zero(Matrix<Rat>(lhs - rhs)));
      auto li = eval_groupring(rep, fox_derivative(u.inverse(), g));
      auto ri = Matrix<Rat>(-(rep.evaluate(u.inverse()) *
                              eval_groupring(rep, fox_derivative(u, g))));
      CHECK(is_zero(Matrix<Rat>(li - ri)));
    }
  }
}

// [DERIVED] closure of the cocycle condition: any element of Z^1 produced
// by z1_basis satisfies z(uv) = z(u) + Ad(rho(u)) z(v) on random words.
TEST_CASE("cocycle condition closure") {
  int cases = 0;
  while (cases < 100) {
    auto rep = torus_rep(rrat(), rrat_nonzero());
    auto basis = z1_basis(rep, Module::V);
    REQUIRE(!basis.empty());
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    const auto& z = basis[pick(rng())];
    Word u = rword(2, 4), v = rword(2, 4);
    auto lhs = evaluate_cocycle(rep, z, u * v);
    auto rhs = Matrix<Rat>(evaluate_cocycle(rep, z, u) +
                           adjoint(rep.evaluate(u), evaluate_cocycle(rep, z, v)));
    CHECK(is_zero(Matrix<Rat>(lhs - rhs)));
    ++cases;
  }
}

// [DERIVED] every coboundary is a cocycle: its coordinate vector lies in
// the kernel of the Fox Jacobian, for every module.
TEST_CASE("coboundaries lie in the jacobian kernel") {
  for (int t = 0; t < 100; ++t) {
    auto rep = torus_rep(rrat(), rrat_nonzero());
    Module mod = t % 3 == 0 ? Module::V : (t % 3 == 1 ? Module::SO31 : Module::G);
    auto a = mod == Module::G ? rsl4() : rmodule(mod);
    std::vector<Rat> coords;
    for (const auto& img : rep.images) {
      auto val = Matrix<Rat>(a - adjoint(img, a));
      for (auto& c : module_coords(mod, val)) coords.push_back(c);
    }
    auto J = fox_jacobian(rep, mod);
    for (size_t r = 0; r < J.rows(); ++r) {
      Rat s(0);
      for (size_t c = 0; c < J.cols(); ++c) s += J(r, c) * coords[c];
      CHECK(s == 0);
    }
  }
}

// [PAPER] sigma(a) = -J a^t J is an involutive automorphism: sigma^2 = id,
// sigma[a,b] = [sigma a, sigma b], and split() returns the +-1 eigenparts.
TEST_CASE("sigma involution and splitting") {
  for (int t = 0; t < 110; ++t) {
    auto a = rsl4(), b = rsl4();
    CHECK(is_zero(Matrix<Rat>(sigma(sigma(a)) - a)));
    auto br = Matrix<Rat>(a * b - b * a);
    CHECK(is_zero(Matrix<Rat>(sigma(br) -
                              Matrix<Rat>(sigma(a) * sigma(b) -
                                          sigma(b) * sigma(a)))));
    auto [s, v] = split(a);
    CHECK(is_zero(Matrix<Rat>(Matrix<Rat>(s + v) - a)));
    CHECK(is_zero(Matrix<Rat>(sigma(s) - s)));
    CHECK(is_zero(Matrix<Rat>(sigma(v) + v)));
  }
}

// [PAPER] the splitting is orthogonal for the Killing form: B(s, v) = 0
// whenever sigma(s) = s and sigma(v) = -v.
TEST_CASE("killing orthogonality of the splitting") {
  for (int t = 0; t < 110; ++t) {
    auto s = rmodule(Module::SO31);
    auto v = rmodule(Module::V);
    CHECK(killing(s, v) == 0);
    // and the form is symmetric and ad-invariant on random elements
    auto a = rsl4(), b = rsl4(), c = rsl4();
    CHECK(Rat(killing(a, b) - killing(b, a)) == 0);
    auto ab = Matrix<Rat>(a * b - b * a);
    auto ac = Matrix<Rat>(a * c - c * a);
    CHECK(Rat(killing(ab, c) + killing(b, ac)) == 0);
  }
}

// [DERIVED] the duality pairing vanishes on coboundary values: if
// z(gamma) = a - Ad(rho(gamma)) a with a in v, the pairing against the
// invariant vector of rho(gamma) is zero.
TEST_CASE("pairing kills coboundaries") {
  int cases = 0;
  while (cases < 100) {
    Rat u = rrat(), v = rrat();
    if (u == 0 && v == 0) continue;
    auto img = standard_parabolic(u, v);
    auto d = delta_invariant(u, v);
    auto a = rmodule(Module::V);
    auto val = Matrix<Rat>(a - adjoint(img, a));
    CHECK(duality_pairing(val, d, img) == 0);
    ++cases;
  }
}

// [DERIVED] slice-coordinate round trip: build the cocycle c_a alpha +
// c_b beta + (coboundary), conjugate everything by a random invertible
// matrix, and recover (c_a, c_b) exactly.
TEST_CASE("slice coordinate round trip") {
  int cases = 0;
  while (cases < 100) {
    Rat u = rrat(), v = rrat_pos();
    auto rep0 = torus_rep(u, v);
    auto C = rinvertible(4);
    auto Ci = inverse(C);
    Representation<Rat> rep{rep0.pres,
                            {C * rep0.images[0] * Ci, C * rep0.images[1] * Ci}};

    Rat ca = rrat(), cb = rrat();
    auto a = rmodule(Module::V);
    auto mk_val = [&](const Rat& x, const Rat& y, size_t i) {
      return Matrix<Rat>(alpha_value(x, y).scaled(Rat(Rat(4) * ca)) +
                         beta_value(x, y).scaled(Rat(Rat(4) * cb)) +
                         Matrix<Rat>(a - adjoint(rep0.images[i], a)));
    };
    Cocycle<Rat> z{Module::V,
                   {Matrix<Rat>(C * mk_val(Rat(1), Rat(0), 0) * Ci),
                    Matrix<Rat>(C * mk_val(u, v, 1) * Ci)}};

    SliceCoords<Rat> coords;
    try {
      coords = slice_coordinates(rep, z);
    } catch (const std::runtime_error&) {
      continue;  // singular pairing matrix: the shape needs a reframe
    }
    REQUIRE(coords.per_cusp.size() == 1);
    CHECK(coords.per_cusp[0].first == ca);
    CHECK(coords.per_cusp[0].second == cb);
    ++cases;
  }
}
