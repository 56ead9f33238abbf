#include "doctest.h"
#include "support.hpp"
#include "triso/errors.hpp"

using namespace test;

namespace {

AlgebraicPoint sqrt2() { return point({"x^2 - 2"}, {I("1", "2")}); }

}  // namespace

TEST_CASE("refine") {
  AlgebraicPoint r = refine(sqrt2(), 0);
  CHECK(r.box()[0].subset_of(I("1", "3/2")));

  AlgebraicPoint exact = point({"x - 2"}, {I("2", "2")});
  CHECK(refine(exact, 0).box() == exact.box());

  AlgebraicPoint two = point({"x - 2", "y + 3"}, {I("2", "2"), I("-4", "0")});
  CHECK(refine(two, 1).box() == Box({I("2", "2"), I("-4", "-2")}));

  // refining down to an exact midpoint collapses the interval
  AlgebraicPoint half = point({"2*x - 1"}, {I("0", "1")});
  CHECK(refine(half, 0).box()[0] == I("1/2", "1/2"));
}

TEST_CASE("refine is contracting") {
  AlgebraicPoint pt = point({"x^2 - 2", "y^2 - x"}, {I("1", "2"), I("1", "2")});
  for (int k = 0; k < 40; ++k) refine_all(pt, 2);
  CHECK(pt.box()[0].width() <= pow2(-30));
  CHECK(pt.box()[1].width() <= pow2(-30));
}

TEST_CASE("zero_test") {
  AlgebraicPoint pt = sqrt2();
  CHECK(zero_test(pt, P("x^4 - 4")));
  CHECK_FALSE(zero_test(pt, P("x^3 - 2")));

  AlgebraicPoint branch = point({"x - 2", "(x + y - 3)^3*(y + 3)"}, {I("2", "2"), I("-3", "-3")});
  CHECK(zero_test(branch, P("x*y + 6")));
  CHECK_FALSE(zero_test(branch, P("x*y - 6")));
  AlgebraicPoint degree_drop = point({"x - 2", "(x - y + 1)^2*(y - 5) + (y - 3)*x"}, {I("2", "2"), I("3", "3")});
  CHECK(zero_test(degree_drop, P("x*y - 6")));
}

TEST_CASE("zero_test on a tower of surds") {
  // xi = (sqrt2, sqrt(1 + sqrt2))
  AlgebraicPoint pt = point({"x^2 - 2", "y^2 - x - 1"}, {I("1", "2"), I("1", "2")});
  CHECK(zero_test(pt, P("y^4 - 2*y^2 - 1")));
  CHECK(zero_test(pt, P("(y^2 - 1)^2 - 2")));
  CHECK_FALSE(zero_test(pt, P("y^2 - 1")));
  CHECK_FALSE(zero_test(pt, P("y - x")));
  CHECK(zero_test(pt, P("x*y^2 - x - 2")));
}

TEST_CASE("zero_test narrows a reducible definition") {
  AlgebraicPoint pt = point({"(x^2 - 2)*(x^2 - 3)"}, {I("1", "3/2")});
  CHECK(zero_test(pt, P("x^2 - 2")));
  CHECK(pt.defs()[0] == P("x^2 - 2"));
  CHECK(sign_at(pt, P("x - 1")) == 1);
}

TEST_CASE("sign_at") {
  AlgebraicPoint pt = sqrt2();
  CHECK(sign_at(pt, P("2*x - 3")) == -1);
  CHECK(sign_at(pt, P("x - 1")) == 1);
  CHECK(sign_at(pt, P("x^2 - 2")) == 0);
  CHECK(sign_at(pt, P("7")) == 1);
  CHECK_THROWS_AS(sign_at(pt, P("y")), VariableOutOfRange);
}

TEST_CASE("zero_test agrees with exact evaluation at rational points") {
  Random rnd(17);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> x{rnd.rational(5, 3), rnd.rational(5, 3), rnd.rational(5, 3)};
    std::vector<MPoly> defs;
    std::vector<Interval> box;
    for (std::size_t k = 0; k < 3; ++k) {
      defs.push_back(MPoly::variable(3, k) - MPoly::constant(3, x[k]));
      box.push_back(Interval::point(x[k]));
    }
    AlgebraicPoint pt(defs, Box(box));
    MPoly g = rnd.poly(3, 3, rnd.uniform(1, 4));
    if (t % 3 == 0) g = g - MPoly::constant(3, g.eval(x));
    CHECK(zero_test(pt, g) == (sign(g.eval(x)) == 0));
    CHECK(sign_at(pt, g) == sign(g.eval(x)));
  }
}

TEST_CASE("sign_at is multiplicative and odd") {
  Random rnd(19);
  for (int t = 0; t < 100; ++t) {
    AlgebraicPoint pt = point({"x^2 - 2", "y^2 - x - 1"}, {I("1", "2"), I("1", "2")});
    MPoly g = rnd.poly(3, 2, rnd.uniform(1, 3)).substitute(2, 0);
    MPoly h = rnd.poly(3, 2, rnd.uniform(1, 3)).substitute(2, 0);
    if (t % 4 == 0) g = g * P("y^2 - x - 1");
    int sg = sign_at(pt, g);
    CHECK(sign_at(pt, g * h) == sg * sign_at(pt, h));
    CHECK(sign_at(pt, -g) == -sg);
  }
}

TEST_CASE("triangular systems") {
  CHECK_NOTHROW(TriangularSystem({P("x - 2"), P("(x + y - 3)^3*(y + 3)"), P("z")}));
  std::vector<std::string> xy{"x", "y"};
  CHECK_THROWS_AS(TriangularSystem({P("x*y", xy), P("y", xy)}), NotTriangular);
  CHECK_THROWS_AS(TriangularSystem({P("x^2", xy), P("3*x", xy)}), NotTriangular);
}
