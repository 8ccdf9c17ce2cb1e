#include <doctest.h>

#include "oracles.hpp"
#include "padicig/errors.hpp"
#include "padicig/veronese.hpp"

using namespace padicig;
namespace orc = padicig::oracle;

TEST_CASE("evaluation") {
  const ProjPoint v = eval_standard(ProjPoint::exact(Prime(3), {1, 3}), 2);
  CHECK(proj_distance(v, ProjPoint::exact(Prime(3), {1, 3, 9})).is_zero());
  const PadicVector m = eval_mahler_affine(PadicScalar::exact(Prime(3), 2), 2);
  CHECK(m[0] == PadicScalar::exact(Prime(3), 1));
  CHECK(m[1] == PadicScalar::exact(Prime(3), 2));
  CHECK(m[2] == PadicScalar::exact(Prime(3), 1));
  const PadicVector f = eval_mahler_affine(PadicScalar::exact(Prime(5), 5), 3);
  CHECK(f[3] == PadicScalar::exact(Prime(5), 10));
  CHECK(f.norm() == PadicNorm::exact(0));
  CHECK(monomial_exponents(1, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK_THROWS_AS(eval_mahler_extended(3, Rational(2), 3), DomainViolation);
}

TEST_CASE("sphere preservation") {
  for (long a = -20; a <= 20; ++a) {
    const PadicVector x = PadicVector::exact(Prime(3), {a, 1, 3 * a});
    CHECK(eval_standard(x, 3).norm() == PadicNorm::exact(0));
  }
}

TEST_CASE("Mahler Jacobian norms") {
  CHECK(mahler_jacobian_norm(3, 5, 0).value == 3);
  for (long a = 0; a < 20; ++a) CHECK(mahler_jacobian_norm(3, 9, Integer(a)).value == 9);
  CHECK(mahler_jacobian_norm(7, 1, 4).value == 1);
  CHECK(mahler_extended_jacobian_norm(3, 3, Rational(1, 3)).value == Rational(1, 27));
  CHECK(mahler_extended_jacobian_norm(3, 2, Rational(1, 9)).value == Rational(1, 81));
  CHECK(mahler_extended_jacobian_norm(2, 1, Rational(1, 2)).value == Rational(1, 4));
  // Independent of the point: 100 values of a, including large ones.
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long d = 1; d <= 12; ++d) {
      const Rational first = mahler_jacobian_norm(p, d, 0).value;
      for (long a = 1; a <= 100; ++a) {
        CHECK(mahler_jacobian_norm(p, d, Integer(a) * 1000003 - 77).value == first);
      }
    }
  }
}

TEST_CASE("binomials grow strictly outside Z_p") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long v : {1l, 2l}) {
      for (long u = 1; u <= 12; ++u) {
        if (u % static_cast<long>(p) == 0) continue;
        const Rational t(Integer(u), orc::power(p, v));
        for (long k = 0; k < 10; ++k) {
          CHECK(padic_abs(binomial(t, k), p) < padic_abs(binomial(t, k + 1), p));
        }
      }
    }
  }
}

TEST_CASE("arc lengths") {
  CHECK(arc_length(3, {0, 0, 0}, 1) == 1);
  CHECK(arc_length(3, {1, 1}, 1) == 3);
  CHECK_THROWS_AS(arc_length(3, {0, 1}, 1), NonConstantJacobian);
  CHECK(mahler_affine_arc_length(3, 3) == 3);
  CHECK(mahler_affine_arc_length(2, 4) == 4);
  CHECK(mahler_annulus_arc_length(3, 3, 1) == Rational(2, 27));
  // Image counts stabilize at the arc length.
  for (auto [p, d] : std::vector<std::pair<unsigned long, long>>{{3, 3}, {2, 4}, {5, 3}}) {
    for (long m = 1; m <= 3; ++m) {
      CHECK(Rational(mahler_image_count(p, d, m)) / Rational(orc::power(p, m)) == mahler_affine_arc_length(p, d));
    }
  }
  // Annuli add up to |d|/p.
  for (auto [p, d] : std::vector<std::pair<unsigned long, long>>{{3, 3}, {3, 7}, {2, 6}}) {
    Rational total = 0;
    const long M = 12;
    for (long m = 1; m <= M; ++m) total += mahler_annulus_arc_length(p, d, m);
    const Rational limit = padic_abs(Rational(d), p) / Rational(static_cast<long>(p));
    CHECK(total <= limit);
    CHECK(limit - total < Rational(1, orc::power(p, M)));
  }
}

TEST_CASE("isometries") {
  CHECK(isometry_check_standard(3, 1, 3, 1000, 1).pass());
  CHECK(isometry_check_standard(3, 2, 2, 500, 2).pass());
  CHECK(isometry_check_mahler(2, 4, 1000, 3).pass());
  const ProjPoint x = ProjPoint::exact(Prime(3), {1, 4});
  CHECK(proj_distance(eval_standard(x, 3), eval_standard(x, 3)).is_zero());
}
