#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "padicig/errors.hpp"
#include "padicig/proj.hpp"

using namespace padicig;
namespace orc = padicig::oracle;

TEST_CASE("projective distances") {
  CHECK(proj_distance(ProjPoint::exact(Prime(3), {1, 0}), ProjPoint::exact(Prime(3), {0, 1})) == PadicNorm::exact(0));
  CHECK(proj_distance(ProjPoint::exact(Prime(3), {1, 0}), ProjPoint::exact(Prime(3), {1, 3})) ==
        PadicNorm::exact(-1));
  CHECK(proj_distance(ProjPoint::exact(Prime(5), {1, 2}), ProjPoint::exact(Prime(5), {2, 4})).is_zero());
}

TEST_CASE("reduction") {
  const ResidueProjPoint a = reduce_mod(ProjPoint::exact(Prime(3), {1, 3, 9}), 2);
  CHECK(a.coords == std::vector<std::uint64_t>{1, 3, 0});
  const ResidueProjPoint b = reduce_mod(ProjPoint::exact(Prime(3), {2, 1}), 1);
  CHECK(b.coords == std::vector<std::uint64_t>{1, 2});
  CHECK(b.unit_index() == 0);
  CHECK(reduce_mod(ProjPoint::exact(Prime(3), {3, 1}), 1).coords == std::vector<std::uint64_t>{0, 1});
  const ProjPoint t(PadicVector::from_residues(Prime(3), std::vector<Integer>{1, 5}, 2));
  CHECK_THROWS_AS(reduce_mod(t, 3), PrecisionTooLow);
  CHECK_THROWS_AS(reduce_mod(t, 0), PrecisionTooLow);
}

TEST_CASE("scale-to-first-unit agrees with the oracle") {
  for (const auto& [cls, fiber] : orc::proj_classes(3, 1, 1)) {
    (void)fiber;
    CHECK(canonicalize(3, 1, cls).coords == cls);
  }
}

TEST_CASE("counts of P^n(R_m)") {
  CHECK(enumerate_proj(3, 2, 1).size() == 13);
  CHECK(enumerate_proj(2, 1, 2).size() == 6);
  CHECK(enumerate_proj(5, 1, 1).size() == 6);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long n = 1; n <= 3; ++n) {
      for (long m = 1; m <= 3; ++m) {
        if (orc::power(p, m * (n + 1)) > 200000) continue;
        const auto pts = enumerate_proj(p, n, m);
        CHECK(Integer(static_cast<unsigned long>(pts.size())) == proj_space_count(p, n, m));
        CHECK(std::set<ResidueProjPoint>(pts.begin(), pts.end()).size() == pts.size());
        CHECK(orc::proj_classes(p, n, m).size() == pts.size());
      }
    }
  }
  CHECK_THROWS_AS(enumerate_proj(7, 6, 3), BudgetExceeded);
}

TEST_CASE("Hopf fibers have p^m(1 - 1/p) representatives") {
  for (long m = 1; m <= 2; ++m) {
    const auto oracle = orc::proj_classes(3, 1, m);
    for (const auto& x : enumerate_proj(3, 1, m)) {
      const auto fiber = hopf_fiber(x);
      const std::size_t expect = m == 1 ? 2 : 6;
      CHECK(fiber.size() == expect);
      CHECK(static_cast<std::size_t>(oracle.at(x.coords)) == expect);
      for (const auto& v : fiber) CHECK(canonicalize(3, m, v) == x);
    }
  }
}

TEST_CASE("volumes of projective spaces") {
  CHECK(volume_proj_space(3, 1) == Rational(4, 3));
  CHECK(volume_proj_space(2, 1) == Rational(3, 2));
  CHECK(volume_proj_space(7, 0) == 1);
}

TEST_CASE("distance is invariant under unit rescaling") {
  std::mt19937_64 rng(5);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    std::uniform_int_distribution<long> c(-40, 40), u(1, 200);
    for (int i = 0; i < 1000; ++i) {
      std::vector<Integer> x{c(rng), c(rng), c(rng)}, y{c(rng), c(rng), c(rng)};
      if (x == std::vector<Integer>{0, 0, 0} || y == std::vector<Integer>{0, 0, 0}) continue;
      long s = u(rng);
      while (s % static_cast<long>(p) == 0) ++s;
      std::vector<Integer> xs = x;
      for (auto& v : xs) v *= s * static_cast<long>(p);
      const ProjPoint px(PadicVector::exact(Prime(p), x)), pxs(PadicVector::exact(Prime(p), xs));
      const ProjPoint py(PadicVector::exact(Prime(p), y));
      CHECK(proj_distance(px, py) == proj_distance(pxs, py));
      const long e = orc::proj_dist_exponent(x, y, p);
      const PadicNorm d = proj_distance(px, py);
      if (e < 0) CHECK(d.is_zero());
      else CHECK(d == PadicNorm::exact(-e));
    }
  }
}

TEST_CASE("reduction tower") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-500, 500);
  for (int i = 0; i < 300; ++i) {
    std::vector<Integer> x{c(rng), c(rng), c(rng)};
    if (x == std::vector<Integer>{0, 0, 0}) continue;
    const ProjPoint q(PadicVector::exact(Prime(3), x));
    const ResidueProjPoint top = reduce_mod(q, 5);
    for (long m = 1; m < 5; ++m) CHECK(truncate(top, m) == reduce_mod(q, m));
  }
}
