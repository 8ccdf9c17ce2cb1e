#include <doctest.h>

#include "padicig/multipoly.hpp"

using namespace padicig;

TEST_CASE("parsing and printing") {
  const MultiPoly f = MultiPoly::parse("x0*x2 - x1^2");
  CHECK(f.nvars() == 3);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(f.evaluate({1, 2, 4}) == 0);
  CHECK(f.evaluate({1, 1, 3}) == 2);
  const MultiPoly g = MultiPoly::parse("(x0+3*x1)^2 - 9*x1^2");
  CHECK(g == MultiPoly::parse("x0^2 + 6*x0*x1"));
  CHECK_FALSE(MultiPoly::parse("x0 + 1").is_homogeneous());
  CHECK(MultiPoly::parse(f.to_string(), 3) == f);
  CHECK_THROWS(MultiPoly::parse("x0 +* x1"));
}

TEST_CASE("arithmetic and derivatives") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly f = (x + y).pow(3);
  CHECK(f.derivative(0) == MultiPoly::constant(2, 3) * (x + y).pow(2));
  CHECK((f - f).is_zero());
  CHECK(MultiPoly::parse("9*x0 + 3*x1", 2).without_p_content(3) == MultiPoly::parse("3*x0 + x1", 2));
  CHECK(x.widened(4).nvars() == 4);
}

TEST_CASE("modular evaluation") {
  const MultiPoly f = MultiPoly::parse("x0^3 - 2*x1*x2^2");
  const ModRing r(5, 3);
  for (std::uint64_t a = 0; a < 20; ++a) {
    const std::vector<std::uint64_t> v{a, a * 7 % 125, (a * a + 3) % 125};
    const Integer full = f.evaluate({Integer(v[0]), Integer(v[1]), Integer(v[2])});
    CHECK(f.evaluate(r, v) == mod(full, 125).get_ui());
  }
}
