// Tests for the slice layer: slice representations, cusp shape, tangent
// cocycles, slice basis, cusp model groups, conjugators, domains/foliations.
#include "doctest.h"

#include <random>

#include "cuspforge/slice.hpp"

using namespace cuspforge;

namespace {
double maxdiff(const Matrix<double>& a, const Matrix<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

SlicePoint<Rat> center_point(const Rat& x1, const Rat& y1, const Rat& x2,
                             const Rat& y2) {
  return make_slice_point(Rat(0), Rat(0), x1, y1, x2, y2);
}

std::mt19937& rng() {
  static std::mt19937 r(41);
  return r;
}

// random slice point on C with exact determinant +-1
SlicePoint<double> random_center_point() {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double x2 = 0, y2 = 0;
  while (std::abs(x2) + std::abs(y2) < 0.2) {
    x2 = d(rng());
    y2 = d(rng());
  }
  double x1 = d(rng());
  // choose y1 so that y1 x2 - x1 y2 = 1 (retry if x2 ~ 0)
  while (std::abs(x2) < 0.2) {
    x2 = d(rng());
  }
  double y1 = (1.0 + x1 * y2) / x2;
  return make_slice_point(0.0, 0.0, x1, y1, x2, y2);
}
}  // namespace

// [PAPER] exact slice representation at a = b = 0: parabolics with corner
// (x^2+y^2)/2; the determinant invariant is enforced.
TEST_CASE("slice representation exact mode") {
  auto s = center_point(Rat(1), Rat(0), Rat(0), Rat(-1));
  auto rep = slice_rep(s);
  CHECK(rep.images[0] == standard_parabolic(Rat(1), Rat(0)));
  CHECK(rep.images[1] == standard_parabolic(Rat(0), Rat(-1)));
  CHECK(rep.validate().empty());
  CHECK_THROWS_AS(make_slice_point(Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(slice_rep(make_slice_point(Rat(1), Rat(0), Rat(1), Rat(0),
                                             Rat(0), Rat(-1))),
                  std::invalid_argument);
}

// [DERIVED] float mode against the numeric matrix exponential: commuting
// images, det = +-1 after normalization, and the e^{3 a x_1 / 4} entry.
TEST_CASE("slice representation float mode") {
  auto s = make_slice_point(0.7, 0.0, 0.4, 0.3, -1.2, 1.6, 1e-12);
  auto rep = slice_rep_float(s);
  CHECK(maxdiff(rep.images[0] * rep.images[1], rep.images[1] * rep.images[0]) <
        1e-12);
  CHECK(std::abs(std::abs(det(rep.images[0])) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(det(rep.images[1])) - 1.0) < 1e-12);
  // with b = 0 the (1,1) entry of the normalized image is e^{3 a x_1/4}
  CHECK(rep.images[0](1, 1) ==
        doctest::Approx(std::exp(3.0 * s.a * s.x1 / 4.0)).epsilon(1e-12));
  // at a = b = 0 float and exact modes agree
  auto c = random_center_point();
  auto repf = slice_rep_float(c);
  CHECK(maxdiff(repf.images[0], standard_parabolic(c.x1, c.y1)) < 1e-12);
}

// [PAPER] cusp shape examples and the submersion rank check.
TEST_CASE("cusp shape function") {
  // CS(e/sqrt f, sqrt f, 1/sqrt f, 0) = e + if with e = 2, f = 4
  auto s = center_point(Rat(1), Rat(2), Rat(1, 2), Rat(0));
  auto [re, im] = cs(s);
  CHECK(re == Rat(2));
  CHECK(im == Rat(4));
  auto [r2, i2] = cs(center_point(Rat(1), Rat(0), Rat(0), Rat(-1)));
  CHECK(r2 == Rat(0));
  CHECK(i2 == Rat(1));
  CHECK_THROWS_AS(cs(make_slice_point(Rat(1), Rat(0), Rat(1), Rat(0), Rat(0),
                                      Rat(-1))),
                  std::invalid_argument);

  // the Jacobian of CS on C has rank 2 at random points (finite differences)
  for (int t = 0; t < 20; ++t) {
    auto p = random_center_point();
    const double h = 1e-6;
    Matrix<double> J = Matrix<double>::zero_sized(2, 4, 0.0);
    double* coords[4] = {&p.x1, &p.y1, &p.x2, &p.y2};
    for (int k = 0; k < 4; ++k) {
      double save = *coords[k];
      *coords[k] = save + h;
      auto [rp, ip] = cs(SlicePoint<double>{0, 0, p.x1, p.y1, p.x2, p.y2});
      *coords[k] = save - h;
      auto [rm, im2] = cs(SlicePoint<double>{0, 0, p.x1, p.y1, p.x2, p.y2});
      *coords[k] = save;
      J(0, k) = (rp - rm) / (2 * h);
      J(1, k) = (ip - im2) / (2 * h);
    }
    CHECK(rank(J, 1e-6) == 2);
  }
}

// [PAPER] tangent cocycle values match the displayed matrices and satisfy
// the commutator cocycle condition exactly.
TEST_CASE("tangent cocycles exact") {
  auto s = center_point(Rat(1), Rat(0), Rat(3), Rat(1));
  auto tc = tangent_cocycles(s);
  // alpha_1 at (x1,y1) = (1,0): diagonal part diag(-1,3,-1,-1)/4, shear
  // entries x^2/2 at (0,1) and -x^2/2 at (1,3), corner -x^3/3
  auto& a1 = tc[0].values[0];
  CHECK(a1(1, 1) == Rat(3, 4));
  CHECK(a1(0, 0) == Rat(-1, 4));
  CHECK(a1(0, 1) == Rat(1, 2));
  CHECK(a1(1, 3) == Rat(-1, 2));
  CHECK(a1(0, 2) == Rat(0));
  CHECK(a1(0, 3) == Rat(-1, 3));
  // d/dx1 is (xi, 0)
  CHECK(tc[2].values[1] == Matrix<Rat>::zero_sized(4, 4, Rat(0)));
  CHECK(tc[2].values[0](0, 1) == Rat(1));
  CHECK(tc[2].values[0](1, 3) == Rat(1));

  auto rep = slice_rep(s);
  auto jac = fox_jacobian(rep, Module::G);
  for (const auto& z : tc)
    for (auto& e : detail::mat_vec(jac, cocycle_coords(z)))
      CHECK(scalar_is_zero(e));

  // the xi/eta classes are so(3,1)-valued; alpha/beta are v-valued
  for (int k = 2; k < 6; ++k)
    for (auto& v : tc[k].values) CHECK(sigma(v) == v);
  for (int k = 0; k < 2; ++k)
    for (auto& v : tc[k].values) CHECK(sigma(v) == -v);
}

// [DERIVED] float finite differences: each tangent cocycle value equals the
// derivative of rho_{s+t delta}(gamma_i) rho_s(gamma_i)^{-1} at t = 0.
TEST_CASE("tangent cocycles match finite differences") {
  for (int t = 0; t < 10; ++t) {
    auto s = random_center_point();
    auto rep = slice_rep_float(s);
    auto tc = tangent_cocycles(s);
    const double h = 1e-6;
    // the SL-normalized image of one generator at an arbitrary slice point
    auto nrm = [](const SlicePoint<double>& q, double x, double y) {
      return expm(slice_generator(q, x, y))
          .scaled(std::exp(-(q.a * x + q.b * y) / 4.0));
    };
    for (int dir = 0; dir < 6; ++dir) {
      auto sp = s, sm = s;
      double* cp[6] = {&sp.a, &sp.b, &sp.x1, &sp.y1, &sp.x2, &sp.y2};
      double* cm[6] = {&sm.a, &sm.b, &sm.x1, &sm.y1, &sm.x2, &sm.y2};
      *cp[dir] += h;
      *cm[dir] -= h;
      for (int g = 0; g < 2; ++g) {
        double x = g ? s.x2 : s.x1, y = g ? s.y2 : s.y1;
        double xp = g ? sp.x2 : sp.x1, yp = g ? sp.y2 : sp.y1;
        double xm = g ? sm.x2 : sm.x1, ym = g ? sm.y2 : sm.y1;
        auto d = (nrm(sp, xp, yp) - nrm(sm, xm, ym)).scaled(1.0 / (2 * h)) *
                 inverse(rep.images[size_t(g)]);
        CHECK(maxdiff(d, tc[size_t(dir)].values[size_t(g)]) < 1e-7);
      }
    }
  }
}

// [PAPER] slice basis: diagonal patterns, independence in H^1, and pure
// corner-valued cocycles are coboundaries.
TEST_CASE("projected slice basis") {
  auto s = center_point(Rat(1), Rat(0), Rat(3), Rat(1));
  auto rep = slice_rep(s);
  auto [Da, Db] = projected_Da_Db(s);
  auto da0 = detail::diag4(Rat(-1, 4), Rat(3, 4), Rat(-1, 4), Rat(-1, 4));
  auto db1 = detail::diag4(Rat(-1, 4), Rat(-1, 4), Rat(3, 4), Rat(-1, 4));
  for (size_t i = 0; i < 4; ++i) {
    CHECK(Da.values[0](i, i) == da0(i, i));
    CHECK(Db.values[1](i, i) == db1(i, i));
  }
  auto jac = fox_jacobian(rep, Module::V);
  for (auto* z : {&Da, &Db})
    for (auto& e : detail::mat_vec(jac, cocycle_coords(*z)))
      CHECK(scalar_is_zero(e));

  // pure corner-valued cocycles are coboundaries in v
  Cocycle<Rat> corner{Module::V,
                      {detail::corner(Rat(1, 24)), detail::corner(Rat(3, 4))}};
  CHECK(is_coboundary(rep, corner).has_value());

  // independence: no nonzero combination is a coboundary
  for (auto [ca, cb] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, -3}}) {
    Cocycle<Rat> comb{Module::V, {}};
    for (int g = 0; g < 2; ++g)
      comb.values.push_back(Da.values[size_t(g)].scaled(Rat(ca)) +
                            Db.values[size_t(g)].scaled(Rat(cb)));
    CHECK(!is_coboundary(rep, comb).has_value());
  }

  // image of the six tangent classes in H^1(Z^2, g) has dimension 4
  auto B = coboundary_matrix(rep, Module::G);
  auto tc = tangent_cocycles(s);
  Matrix<Rat> M = Matrix<Rat>::zero_sized(30, B.cols() + 6, Rat(0));
  for (size_t i = 0; i < 30; ++i)
    for (size_t j = 0; j < B.cols(); ++j) M(i, j) = B(i, j);
  for (size_t k = 0; k < 6; ++k) {
    auto flat = cocycle_coords(tc[k]);
    for (size_t i = 0; i < 30; ++i) M(i, B.cols() + k) = flat[i];
  }
  CHECK(rank(M) - rank(B) == 4);
}

// [PAPER] cusp model group elements.
TEST_CASE("cusp model groups") {
  for (auto t : {CuspType::Type0, CuspType::Type1, CuspType::Type2})
    CHECK(maxdiff(cusp_group_element(t, 0, 0, 0),
                  Matrix<double>::identity_like(4, 0.0)) == 0.0);
  auto m0 = cusp_group_element(CuspType::Type0, 3.0, -2.0, 5.0);
  CHECK(m0(0, 3) == doctest::Approx(5.0 + 6.5));
  auto m2 = cusp_group_element(CuspType::Type2, 1.0, 2.0, 3.0);
  CHECK(m2(0, 0) == doctest::Approx(std::exp(1.0)));
  CHECK(m2(1, 1) == doctest::Approx(std::exp(2.0)));
  CHECK(m2(2, 3) == doctest::Approx(3.0));
}

// [PAPER] conjugation identities carrying the slice group to the model
// groups, sampled.
TEST_CASE("conjugators") {
  CHECK_THROWS_AS(conjugator(CuspType::Type1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(conjugator(CuspType::Type2, 1.0, 0.0), std::invalid_argument);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (int t = 0; t < 100; ++t) {
    double a = 0, b = 0;
    while (std::abs(a) < 0.2) a = d(rng());
    while (std::abs(b) < 0.2) b = d(rng());
    double x = d(rng()), y = d(rng());
    // type 1: C~_a N_{a,0}(x,y) C~_a^{-1} = M_1(ax, y, -x/a)
    SlicePoint<double> s1{a, 0.0, x, y, 0, 0};
    auto N1 = expm(slice_generator(s1, x, y));
    auto C1 = conjugator(CuspType::Type1, a);
    CHECK(maxdiff(C1 * N1 * inverse(C1),
                  cusp_group_element(CuspType::Type1, a * x, y, -x / a)) < 1e-9);
    // type 2: D~_{a,b} N_{a,b}(x,y) D~^{-1} = M_2(ax, by, -x/a - y/b)
    SlicePoint<double> s2{a, b, x, y, 0, 0};
    auto N2 = expm(slice_generator(s2, x, y));
    auto C2 = conjugator(CuspType::Type2, a, b);
    CHECK(maxdiff(C2 * N2 * inverse(C2),
                  cusp_group_element(CuspType::Type2, a * x, b * y,
                                     -x / a - y / b)) < 1e-9);
  }
}

// [DERIVED] classification of slice points by (a, b).
TEST_CASE("classify slice point") {
  auto p0 = classify_slice_point(center_point(Rat(1), Rat(0), Rat(0), Rat(-1)));
  CHECK(p0.type == CuspType::Type0);
  auto p1 = classify_slice_point(
      make_slice_point(Rat(2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(-1)));
  CHECK(p1.type == CuspType::Type1);
  CHECK(p1.lambda1 == Rat(2));
  auto p2 = classify_slice_point(
      make_slice_point(Rat(2), Rat(-3), Rat(1), Rat(0), Rat(0), Rat(-1)));
  CHECK(p2.type == CuspType::Type2);
  CHECK(p2.convexity_warning);
  auto p3 = classify_slice_point(
      make_slice_point(Rat(2), Rat(3), Rat(1), Rat(0), Rat(0), Rat(-1)));
  CHECK(p3.type == CuspType::Type2);
  CHECK(!p3.convexity_warning);
}

// [PAPER] domains and horosphere foliations: membership examples and
// invariance of the foliation parameter under the model group action.
TEST_CASE("domains and foliations") {
  CHECK(omega_contains(CuspType::Type0, 0, 0, 1, 0, 0));
  CHECK(!omega_contains(CuspType::Type0, 0, 0, 0, 0, 0));
  CHECK_THROWS_AS(horosphere_value(CuspType::Type1, 1, 0, -1.0, 0, 0),
                  std::domain_error);

  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    double x = d(rng()), y = d(rng());
    double p0 = std::exp(d(rng())), p1 = d(rng()) + 2.0, p2 = d(rng());
    // type 0: action of M_0(x, y, 0)
    {
      double s = horosphere_value(CuspType::Type0, 0, 0, p1 + 3, p2, p0 - 1);
      auto g = cusp_group_element(CuspType::Type0, x, y, 0);
      double q0 = g(0, 0) * (p1 + 3) + g(0, 1) * p2 + g(0, 2) * (p0 - 1) + g(0, 3);
      double q1 = p2 + x, q2 = (p0 - 1) + y;
      CHECK(horosphere_value(CuspType::Type0, 0, 0, q0, q1, q2) ==
            doctest::Approx(s).epsilon(1e-9));
    }
    // type 1, lambda = 1: action of M_1(x, y, -x)
    {
      double lam = 1.0;
      double s = horosphere_value(CuspType::Type1, lam, 0, p0, p1, p2);
      auto g = cusp_group_element(CuspType::Type1, x, y, -x);
      double q0 = g(0, 0) * p0;
      double q1 = p1 + g(1, 2) * p2 + g(1, 3);
      double q2 = p2 + y;
      CHECK(horosphere_value(CuspType::Type1, lam, 0, q0, q1, q2) ==
            doctest::Approx(s).epsilon(1e-9));
    }
    // type 2: action of M_2(x, y, -x/l1^2... using lambda = (2, 3):
    {
      double l1 = 2.0, l2 = 3.0;
      double pb = std::exp(d(rng()));
      double s = horosphere_value(CuspType::Type2, l1, l2, p0, pb, p2);
      auto g = cusp_group_element(CuspType::Type2, l1 * x, l2 * y,
                                  -x / l1 - y / l2);
      double q0 = g(0, 0) * p0, q1 = g(1, 1) * pb, q2 = p2 + g(2, 3);
      CHECK(horosphere_value(CuspType::Type2, l1, l2, q0, q1, q2) ==
            doctest::Approx(s).epsilon(1e-9));
    }
  }
}
