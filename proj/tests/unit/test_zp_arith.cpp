#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padicig/errors.hpp"
#include "padicig/sample.hpp"
#include "padicig/zp_arith.hpp"

using namespace padicig;
namespace orc = padicig::oracle;

TEST_CASE("scalar norms") {
  CHECK(padic_norm(PadicScalar::exact(Prime(3), 6)).value(3) == Rational(1, 3));
  CHECK(padic_norm(PadicScalar::exact(Prime(5), 1)).value(5) == 1);
  const PadicNorm z = padic_norm(PadicScalar::zero_at(Prime(3), 4));
  CHECK(z.is_bound());
  CHECK(z.exponent == -4);
  CHECK(padic_norm(PadicScalar::exact(Prime(3), 0)).is_zero());
}

TEST_CASE("wedge norms") {
  const Prime p3(3), p5(5);
  CHECK(wedge_norm(PadicVector::exact(p3, {1, 0, 0}), PadicVector::exact(p3, {0, 1, 0})) == PadicNorm::exact(0));
  CHECK(wedge_norm(PadicVector::exact(p3, {1, 0}), PadicVector::exact(p3, {1, 3})) == PadicNorm::exact(-1));
  CHECK(wedge_norm(PadicVector::exact(p5, {1, 2}), PadicVector::exact(p5, {2, 4})).is_zero());
  const PadicVector a = PadicVector::from_residues(p3, std::vector<Integer>{1, 2}, 3);
  CHECK_THROWS_AS(wedge_norm(a, a), InsufficientPrecision);
  CHECK(wedge_norm_bound(a, a).is_bound());
}

TEST_CASE("determinant valuations") {
  const Prime p3(3), p5(5);
  CHECK(mat_det_valuation(PadicMatrix::identity(p3, 3)) == 0);
  CHECK(mat_det_valuation(PadicMatrix::exact(p3, 2, 2, {1, 0, 0, 3})) == 1);
  CHECK(mat_det_valuation(PadicMatrix::exact(p5, 2, 2, {1, 1, 1, 1})) == kInfinite);
  CHECK(determinant(PadicMatrix::exact(p5, 2, 2, {1, 1, 1, 1})).is_exact_zero());
  const PadicScalar d = determinant(PadicMatrix::exact(Prime(7), 3, 3, {2, 0, 1, 1, 3, 0, 0, 1, 4}));
  CHECK(d == PadicScalar::exact(Prime(7), 2 * 12 + 1 * (1 - 0)));
}

TEST_CASE("precision tracking") {
  const Prime p(3);
  const PadicScalar x = PadicScalar::from_residue(p, 10, 4);  // 10 mod 81
  const PadicScalar y = PadicScalar::from_residue(p, 9, 3);   // 9 mod 27
  const PadicScalar s = x + y;
  CHECK(s.absolute_precision() == 3);
  CHECK(s.residue(3) == 19);
  const PadicScalar t = x * y;
  CHECK(t.valuation() == 2);
  CHECK(t.absolute_precision() == 3);
  const PadicScalar z = PadicScalar::from_residue(p, 27, 3);
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_exact_zero());
  CHECK((PadicScalar::exact(p, 6) / PadicScalar::exact(p, 3)) == PadicScalar::exact(p, 2));
}

TEST_CASE("ultrametric and multiplicativity against a big-integer oracle") {
  std::mt19937_64 rng(7);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Prime pp(p);
    std::uniform_int_distribution<long> c(-100000, 100000), sh(0, 5), prec(1, 12);
    for (int i = 0; i < 1000; ++i) {
      const Integer a = Integer(c(rng)) * orc::power(p, sh(rng));
      const Integer b = Integer(c(rng)) * orc::power(p, sh(rng));
      const long m = prec(rng) + 6;
      const Integer mod = orc::power(p, m);
      const PadicScalar x = PadicScalar::from_residue(pp, a, m), y = PadicScalar::from_residue(pp, b, m);
      CHECK((x + y).residue(m) == orc::modp(a + b, mod));
      CHECK((x - y).residue(m) == orc::modp(a - b, mod));
      CHECK((x * y).residue(m) == orc::modp(a * b, mod));
      if (a != 0 && b != 0) {
        const PadicScalar ex = PadicScalar::exact(pp, a), ey = PadicScalar::exact(pp, b);
        CHECK((ex * ey).norm().exponent == ex.norm().exponent + ey.norm().exponent);
        if (a + b != 0) {
          const long vs = (ex + ey).valuation();
          CHECK(vs >= std::min(ex.valuation(), ey.valuation()));
          if (ex.valuation() != ey.valuation()) CHECK(vs == std::min(ex.valuation(), ey.valuation()));
        }
      }
    }
  }
}

TEST_CASE("wedge norm symmetry and GL invariance") {
  std::mt19937_64 rng(11);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Prime pp(p);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int i = 0; i < 300; ++i) {
      std::vector<Integer> av{c(rng), c(rng), c(rng)}, bv{c(rng), c(rng), c(rng)};
      if (av == std::vector<Integer>{0, 0, 0} || bv == std::vector<Integer>{0, 0, 0}) continue;
      const PadicVector a = PadicVector::exact(pp, av).sphere_normalized();
      const PadicVector b = PadicVector::exact(pp, bv).sphere_normalized();
      CHECK(wedge_norm(a, b) == wedge_norm(b, a));
      CHECK(wedge_norm(a, a).is_zero());
      const PadicMatrix g = sample_haar_gl(DigitStream(p, 99, static_cast<std::uint64_t>(i)), 3, 40);
      const PadicNorm before = wedge_norm(a, b);
      const PadicNorm after = wedge_norm_bound(g.apply(a), g.apply(b));
      if (before.is_zero()) {
        CHECK(after.is_bound());
      } else {
        CHECK(after == before);
      }
    }
  }
}
