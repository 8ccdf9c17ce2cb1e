#include <doctest.h>

#include "padicig/poly.hpp"

using namespace padicig;

TEST_CASE("evaluation and derivatives") {
  const std::vector<Integer> f{-1, 0, 1};
  CHECK(evaluate(f, 3) == 8);
  CHECK(evaluate_mod(f, 3, 5) == 3);
  CHECK(derivative(f) == std::vector<Integer>{0, 2});
}

TEST_CASE("taylor shift") {
  // f(2 + 3 s) for f = t^2 - 1 is 3 + 12 s + 9 s^2.
  CHECK(taylor_shift({-1, 0, 1}, 2, 3) == std::vector<Integer>{3, 12, 9});
  const std::vector<Integer> g{5, -2, 0, 7};
  const auto h = taylor_shift(g, -4, 1);
  for (long s = -3; s <= 3; ++s) CHECK(evaluate(h, s) == evaluate(g, Integer(s - 4)));
}

TEST_CASE("reversal and squarefree part") {
  CHECK(reversed({1, 2, 3}) == std::vector<Integer>{3, 2, 1});
  // (t - 1)^2 (t + 2) = t^3 - 3t + 2.
  const auto sq = squarefree_part({2, -3, 0, 1});
  CHECK(sq.size() == 3);
  CHECK(evaluate(sq, 1) == 0);
  CHECK(evaluate(sq, -2) == 0);
  CHECK(squarefree_part({0, 0, 4}) == std::vector<Integer>{0, 1});
}

TEST_CASE("Mahler to monomial basis") {
  CHECK(binomial(Rational(5), 2) == 10);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  const std::vector<Integer> zeta{1, -2, 3, 4};
  const auto f = mahler_to_monomial(zeta);
  for (long t = -5; t <= 5; ++t) {
    Rational want = 0;
    for (long k = 0; k <= 3; ++k) want += Rational(zeta[static_cast<std::size_t>(k)]) * binomial(Rational(t), k);
    CHECK(Rational(evaluate(f, Integer(t))) == 6 * want);
  }
}

TEST_CASE("truncated polynomials") {
  const UnivariatePoly f = UnivariatePoly::truncated(Prime(3), {10, -1, 28}, 3);
  CHECK(f.coeffs == std::vector<Integer>{10, 26, 1});
  CHECK(f.content_valuation() == 0);
  const UnivariatePoly z = UnivariatePoly::truncated(Prime(3), {27, 54}, 3);
  CHECK(z.is_zero());
  CHECK(UnivariatePoly::exact(Prime(3), {9, 18}).content_valuation() == 2);
}
