#include "doctest.h"

#include <cmath>

#include "cuspforge/numfield.hpp"

using namespace cuspforge;

static FieldPtr sqrt2_field() {
  // t^2 - 2, isolation (1, 2)
  return NumberField::make({Rat(-2), Rat(0), Rat(1)}, Rat(1), Rat(2));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rat(1, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("field construction guards") {
  CHECK_THROWS(NumberField::make({Rat(-2), Rat(0), Rat(2)}, Rat(1), Rat(2)));  // not monic
  CHECK_THROWS(NumberField::make({Rat(1)}, Rat(0), Rat(0)));                   // degree 0
  CHECK_THROWS(NumberField::make({Rat(0), Rat(0), Rat(1)}, Rat(-1), Rat(1)));  // t^2 not squarefree
  CHECK_THROWS(NumberField::make({Rat(-2), Rat(0), Rat(1)}, Rat(3), Rat(4)));  // no sign change
  // t^2 - 4 has the rational root 2: rejected by the cheap rational-root scan
  CHECK_THROWS(NumberField::make({Rat(-4), Rat(0), Rat(1)}, Rat(1), Rat(3)));
}

TEST_CASE("sqrt2 arithmetic") {
  auto F = sqrt2_field();
  FieldElem a = FieldElem::generator(F);  // sqrt(2)
  // [DERIVED: interval bisection oracle] sqrt(2) = 1.41421356...
  CHECK(std::abs(a.to_double() - 1.4142135623730951) < 1e-12);
  CHECK((a * a) == FieldElem(2));
  CHECK((a * a - FieldElem(2)).is_zero());
  FieldElem b = a + FieldElem(1);
  CHECK((b * (b - FieldElem(2))) == FieldElem(1));  // (1+s)(s-1) = 1
  CHECK(b.inverse() == (a - FieldElem(1)));         // 1/(1+s) = s-1
  CHECK(b.sign() == 1);
  CHECK((-b).sign() == -1);
  CHECK((a - FieldElem(1)).sign() == 1);
  CHECK((a - FieldElem(2)).sign() == -1);
  CHECK(FieldElem(0).sign() == 0);
}

TEST_CASE("cubic field reduction from the 5_2 cusp field") {
  // field Q[t]/(t^3 + 2t^2 - 4t + 56): alpha * alpha^2 = -2a^2 + 4a - 56
  // [TRIVIAL: reduction forced by the minimal polynomial]
  auto F = NumberField::make({Rat(56), Rat(-4), Rat(2), Rat(1)}, Rat(-6), Rat(-4));
  FieldElem a = FieldElem::generator(F);
  FieldElem lhs = a * (a * a);
  FieldElem rhs = FieldElem(F, {Rat(-56), Rat(4), Rat(-2)});
  CHECK(lhs == rhs);
}

TEST_CASE("division by zero and mixed-field errors") {
  auto F = sqrt2_field();
  FieldElem a = FieldElem::generator(F);
  CHECK_THROWS(a / FieldElem(0));
  auto G = NumberField::make({Rat(-3), Rat(0), Rat(1)}, Rat(1), Rat(2));
  CHECK_THROWS(a + FieldElem::generator(G));
}

TEST_CASE("sign exact zero via gcd on reducible contract breach") {
  // (t^2-2)(t^2-3) is square-free but reducible; elem = t^2 - 2 vanishes
  // at alpha = sqrt(2) even though its coefficient vector is nonzero.
  auto F = NumberField::make({Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)},
                             Rat(1), Rat(Rat(3) / 2));
  FieldElem e = FieldElem(F, {Rat(-2), Rat(0), Rat(1), Rat(0)});
  CHECK(e.sign() == 0);
}

TEST_CASE("enclosure width honored") {
  auto F = sqrt2_field();
  FieldElem x = FieldElem::generator(F) * FieldElem(Rat(1, 3)) + FieldElem(5);
  auto [lo, hi] = x.enclosure(Rat(1, 1000000));
  CHECK(hi - lo <= Rat(1, 1000000));
  double v = 5 + std::sqrt(2.0) / 3;
  CHECK(to_double(lo) <= v);
  CHECK(to_double(hi) >= v);
}

TEST_CASE("sqrt_in_field") {
  auto F = sqrt2_field();
  FieldElem s = FieldElem::generator(F);

  SUBCASE("rational square") {
    auto r = sqrt_in_field(FieldElem(Rat(9, 4)));
    REQUIRE(r.has_value());
    CHECK(*r == FieldElem(Rat(3, 2)));
  }
  SUBCASE("irrational square root of a rational") {
    auto r = sqrt_in_field(FieldElem(F, {Rat(2), Rat(0)}));
    REQUIRE(r.has_value());
    CHECK(*r == s);
  }
  SUBCASE("square of a generic element") {
    FieldElem g = s * FieldElem(Rat(2, 3)) - FieldElem(Rat(7, 5));
    auto r = sqrt_in_field(g * g);
    REQUIRE(r.has_value());
    CHECK((*r == g || *r == -g));
    CHECK(r->sign() >= 0);
  }
  SUBCASE("non-square") {
    // 3 is not a square in Q(sqrt(2))
    auto r = sqrt_in_field(FieldElem(F, {Rat(3), Rat(0)}));
    CHECK(!r.has_value());
  }
  SUBCASE("negative") {
    CHECK(!sqrt_in_field(FieldElem(-2)).has_value());
    CHECK(sqrt_in_field(FieldElem(0)).has_value());
  }
  SUBCASE("degree six field") {
    // the bundled 5_2 field
    auto G = NumberField::make(
        {Rat(-229376), Rat(24576), Rat(-5120), Rat(-1280), Rat(0), Rat(16),
         Rat(1)},
        Rat(-13), Rat(-12));
    FieldElem t = FieldElem::generator(G);
    FieldElem g = t * t * FieldElem(Rat(3, 7)) - t + FieldElem(Rat(1, 2));
    auto r = sqrt_in_field(g * g);
    REQUIRE(r.has_value());
    CHECK((*r == g || *r == -g));
  }
}
