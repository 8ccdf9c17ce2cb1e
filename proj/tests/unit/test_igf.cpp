#include <doctest.h>

#include <cmath>

#include "padicig/errors.hpp"
#include "padicig/igf.hpp"

using namespace padicig;

namespace {

McOptions quick(long samples, std::uint64_t seed = 42) {
  McOptions o;
  o.samples = samples;
  o.seed = seed;
  return o;
}

bool within(const McReport& r, double sigmas) {
  return std::fabs(r.mean - r.target.get_d()) <= sigmas * r.std_error + 1e-12;
}

}  // namespace

TEST_CASE("linear intersections") {
  const Prime p(3);
  const LinearSubspace a(2, {{1, 2, 0}}, 3), b(2, {{0, 1, 1}}, 3);
  const LinearIntersection ab = intersect_linear({a, b});
  REQUIRE(ab.point);
  CHECK_FALSE(ab.infinite);
  CHECK(ab.minor_valuation == 0);
  CHECK(proj_distance(*ab.point, ProjPoint::exact(p, {2, -1, 1})).is_zero());

  const LinearSubspace x0(2, {{1, 0, 0}}, 3);
  CHECK(intersect_linear({x0, x0}).infinite);

  const LinearSubspace t(2, {{1, 3, 0}}, 3);
  const LinearIntersection tangent = intersect_linear({x0, t});
  REQUIRE(tangent.point);
  CHECK(tangent.minor_valuation == 1);
  CHECK(proj_distance(*tangent.point, ProjPoint::exact(p, {0, 0, 1})).is_zero());

  CHECK_THROWS_AS(intersect_linear({x0}), DimensionMismatch);
  CHECK_THROWS(LinearSubspace(2, {{3, 0, 0}, {1, 0, 0}}, 3));
}

TEST_CASE("ball fractions") {
  CHECK(ball_fraction(3, 1, 1) == Rational(1, 4));
  CHECK(ball_fraction(3, 1, 0) == 1);
  CHECK(ball_fraction(3, 1, 2) == Rational(1, 12));
  CHECK(ball_fraction(3, 0, 2) == 1);
}

TEST_CASE("closed-form targets") {
  const RandomPolyModel mono{PolyBasis::Monomial, 5, 1, 3};
  CHECK(expected_zeros_target(mono, Region::parse("p1")) == 1);
  CHECK(expected_zeros_target(mono, Region::parse("zp")) == Rational(3, 4));
  CHECK(expected_zeros_target({PolyBasis::Mahler, 7, 1, 3}, Region::parse("zp")) == Rational(9, 4));
  CHECK(expected_zeros_target({PolyBasis::Mahler, 3, 1, 3}, Region::parse("annulus:1")) == Rational(1, 18));
  CHECK(expected_zeros_target({PolyBasis::Mahler, 7, 1, 3}, Region::parse("qp")) == Rational(5, 2));
  CHECK(curve_target({CurveKind::StandardVeronese, 2, 1, 3}) == 1);
  CHECK(curve_target({CurveKind::StandardVeronese, 3, 1, 2}) == 1);
  CHECK(curve_target({CurveKind::Line, 1, 1, 5}) == 1);
  CHECK(curve_target({CurveKind::MahlerAffine, 3, 1, 3}) == Rational(9, 4));
  CHECK(curve_target({CurveKind::MahlerAnnulus, 3, 1, 3}) == Rational(1, 18));
  CHECK_THROWS(Region::parse("annulus:0"));
}

TEST_CASE("linear lemma factors over ball sizes") {
  const ProjPoint c = ProjPoint::exact(Prime(3), {1, 0, 0});
  const LinearSubspace line = LinearSubspace::coordinate(2, {0, 1}, 3);
  for (long r : {0l, 1l, 2l}) {
    const McReport rep = mc_linear_lemma({line, c, r}, {line, c, r}, LinearSubspace::whole(2, 3), quick(20000, 7 + r));
    const Rational f = ball_fraction(3, 1, r);
    CHECK(rep.target == f * f);
    CHECK(rep.excluded_fraction() < 1e-3);
    CHECK(within(rep, 4));
  }
}

TEST_CASE("curve estimator: degree cap and invariance under a fixed twist") {
  const Curve conic{CurveKind::StandardVeronese, 2, 1, 3};
  const McReport plain = mc_igf_curve(conic, quick(20000, 1));
  const std::vector<Integer> h{1, 1, 0, 0, 1, 3, 2, 0, 1};
  const McReport twisted = mc_igf_curve(conic, quick(20000, 2), h);
  CHECK(plain.max_count <= 2);
  CHECK(twisted.max_count <= 2);
  CHECK(within(plain, 4));
  const double combined = std::sqrt(plain.std_error * plain.std_error + twisted.std_error * twisted.std_error);
  CHECK(std::fabs(plain.mean - twisted.mean) < 3 * combined);
  CHECK_THROWS(mc_igf_curve(conic, quick(10), std::vector<Integer>{1, 0, 0, 0, 1, 0, 0, 0, 3}));
}

TEST_CASE("results do not depend on the worker count") {
  const RandomPolyModel m{PolyBasis::Mahler, 3, 1, 3};
  McOptions a = quick(3000, 9), b = quick(3000, 9);
  b.workers = 3;
  const McReport ra = mc_expected_zeros(m, Region::parse("zp"), a);
  const McReport rb = mc_expected_zeros(m, Region::parse("zp"), b);
  CHECK(ra.mean == rb.mean);
  CHECK(ra.histogram == rb.histogram);
}

TEST_CASE("expected zeros") {
  const McReport r = mc_expected_zeros({PolyBasis::Monomial, 5, 1, 3}, Region::parse("p1"), quick(20000));
  CHECK(r.target == 1);
  CHECK(within(r, 4));
  CHECK(r.max_count <= 5);
  const McReport z = mc_expected_zeros({PolyBasis::Monomial, 4, 1, 5}, Region::parse("zp"), quick(20000));
  CHECK(within(z, 4));
}

TEST_CASE("density of zeros") {
  const DensityReport lin = density_uniformity_test({PolyBasis::Monomial, 1, 1, 2}, quick(20000));
  CHECK(lin.counts.size() == 3);
  CHECK(lin.p_value > 1e-3);
  long total = 0;
  for (long c : lin.counts) total += c;
  CHECK(total == 20000);
  const DensityReport mono = density_uniformity_test({PolyBasis::Monomial, 3, 1, 3}, quick(10000));
  CHECK_FALSE(mono.rejects_uniform);
  const DensityReport mahler = density_uniformity_test({PolyBasis::Mahler, 3, 1, 3}, quick(10000));
  CHECK(mahler.rejects_uniform);
}
