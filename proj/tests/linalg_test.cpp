#include "doctest.h"

#include "cuspforge/linalg.hpp"

using namespace cuspforge;

namespace {
Matrix<Rat> form_j() {
  // the signature (3,1) form used throughout
  Matrix<Rat> J = Matrix<Rat>::zero_sized(4, 4, Rat(0));
  J(0, 3) = Rat(-1);
  J(3, 0) = Rat(-1);
  J(1, 1) = Rat(1);
  J(2, 2) = Rat(1);
  return J;
}
}  // namespace

TEST_CASE("rank basics") {
  auto I4 = Matrix<Rat>::identity_like(4, Rat(0));
  CHECK(rank(I4) == 4);
  auto Z = Matrix<Rat>::zero_sized(9, 18, Rat(0));
  CHECK(rank(Z) == 0);
  CHECK(kernel_basis(Z).size() == 18);
  CHECK(kernel_basis(I4).empty());
}

TEST_CASE("rank + nullity = cols on random rationals") {
  unsigned long seed = 12345;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((seed >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 50; ++trial) {
    size_t r = 1 + trial % 6, c = 1 + (trial * 7) % 9;
    Matrix<Rat> m = Matrix<Rat>::zero_sized(r, c, Rat(0));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) {
        Rat q(next(), 1 + (trial % 3));
        q.canonicalize();
        m(i, j) = q;
      }
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) {
      for (size_t i = 0; i < r; ++i) {
        Rat s(0);
        for (size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("solve") {
  auto I = Matrix<Rat>::identity_like(3, Rat(0));
  std::vector<Rat> b{Rat(1), Rat(-2), Rat(7, 3)};
  auto x = solve(I, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto Z = Matrix<Rat>::zero_sized(2, 2, Rat(0));
  CHECK(!solve(Z, {Rat(1), Rat(0)}).has_value());

  // [PAPER-derived 2x2 system]: 2 v1 x1 + 2 v2 y1 = u1, 2 v1 x2 + 2 v2 y2 = u2
  // with (x1,y1,x2,y2) = (1,0,0,1) and (u1,u2) = (2,2) => (v1,v2) = (1,1)
  Matrix<Rat> A = Matrix<Rat>::zero_sized(2, 2, Rat(0));
  A(0, 0) = Rat(2);
  A(1, 1) = Rat(2);
  auto v = solve(A, {Rat(2), Rat(2)});
  REQUIRE(v.has_value());
  CHECK((*v)[0] == 1);
  CHECK((*v)[1] == 1);
}

TEST_CASE("det and inverse of the form") {
  auto I4 = Matrix<Rat>::identity_like(4, Rat(0));
  CHECK(det(I4) == 1);
  auto J = form_j();
  // [DERIVED: cofactor expansion] det(J) = -1 and J*J = I
  CHECK(det(J) == -1);
  CHECK(inverse(J) == J);
  CHECK(J * J == I4);
  CHECK_THROWS(inverse(Matrix<Rat>::zero_sized(2, 2, Rat(0))));
}

TEST_CASE("float mode numerical rank") {
  Matrix<double> m = Matrix<double>::zero_sized(3, 3, 0.0);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 1e-13;  // below threshold relative to max entry
  CHECK(rank(m, 1e-8) == 2);
  m(2, 2) = 0.5;
  CHECK(rank(m, 1e-8) == 3);
}

TEST_CASE("field-element matrices") {
  auto F = NumberField::make({Rat(-2), Rat(0), Rat(1)}, Rat(1), Rat(2));
  FieldElem s = FieldElem::generator(F);
  Matrix<FieldElem> m = Matrix<FieldElem>::zero_sized(2, 2, FieldElem(0));
  m(0, 0) = s;
  m(0, 1) = FieldElem(1);
  m(1, 0) = FieldElem(1);
  m(1, 1) = s;  // det = 2 - 1 = 1
  CHECK(det(m) == FieldElem(1));
  auto mi = inverse(m);
  CHECK(m * mi == Matrix<FieldElem>::identity_like(2, FieldElem(0)));
}
