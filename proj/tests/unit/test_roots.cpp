#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "padicig/errors.hpp"
#include "padicig/roots.hpp"
#include "padicig/sample.hpp"

using namespace padicig;
namespace orc = padicig::oracle;

namespace {

RootReport zp(unsigned long p, std::initializer_list<long> c) { return count_roots_zp(UnivariatePoly::exact(Prime(p), c)); }

void check_witnesses(const RootReport& r, unsigned long p) {
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const RootWitness& w = r.witnesses[i];
    if (w.value_valuation != kInfinite) CHECK(w.value_valuation > 2 * w.slope_valuation);
    CHECK(mod(w.hensel_point - w.center, ipow(p, static_cast<unsigned long>(w.level))) == 0);
    for (std::size_t j = 0; j < i; ++j) {
      const RootWitness& o = r.witnesses[j];
      if (o.chart != w.chart) continue;
      const long lvl = std::min(o.level, w.level);
      CHECK(mod(o.center - w.center, ipow(p, static_cast<unsigned long>(lvl))) != 0);
    }
  }
}

}  // namespace

TEST_CASE("roots in Z_p") {
  const RootReport a = zp(5, {-1, 0, 1});
  CHECK(a.count == 2);
  CHECK(a.status == RootStatus::Exact);
  std::set<long> centers;
  for (const auto& w : a.witnesses) centers.insert(mod(w.center, Integer(5)).get_si());
  CHECK(centers == std::set<long>{1, 4});
  CHECK(zp(3, {-3, 0, 1}).count == 0);
  CHECK(zp(3, {0, 0, 1}).count == 1);
  CHECK(zp(5, {0, -1, 0, 1}).count == 3);
  CHECK(zp(3, {-9, 0, 1}).count == 2);
  CHECK(zp(2, {-17, 0, 1}).count == 2);
  CHECK(zp(2, {-5, 0, 1}).count == 0);
}

TEST_CASE("zeros on P^1") {
  for (unsigned long p : {2ul, 3ul, 7ul}) {
    CHECK(count_roots_p1(UnivariatePoly::exact(Prime(p), {0, 1, 0})).count == 2);
  }
  CHECK(count_roots_p1(UnivariatePoly::exact(Prime(3), {1, 0, 1})).count == 0);
  for (unsigned long p : {3ul, 5ul, 11ul}) {
    CHECK(count_roots_p1(UnivariatePoly::exact(Prime(p), {-1, 0, 1})).count == 2);
  }
  // x1^2 (x0 - x1): the point [1:0] is a double zero.
  CHECK(count_roots_p1(UnivariatePoly::exact(Prime(3), {-1, 1, 0, 0})).count == 2);
}

TEST_CASE("annulus and Q_p") {
  CHECK(count_roots_annulus(UnivariatePoly::exact(Prime(3), {-1, 3}), 1).count == 1);
  CHECK(count_roots_annulus(UnivariatePoly::exact(Prime(5), {-1, 1}), 1).count == 0);
  CHECK(count_roots_annulus(UnivariatePoly::exact(Prime(5), {-1, 1}), 3).count == 0);
  CHECK(count_roots_annulus(UnivariatePoly::exact(Prime(3), {-1, 0, 9}), 1).count == 2);
  CHECK(count_roots_annulus(UnivariatePoly::exact(Prime(3), {-1, 0, 9}), 2).count == 0);
  CHECK(count_roots_qp(UnivariatePoly::exact(Prime(3), {-1, 0, 9})).count == 2);
  CHECK(count_roots_qp(UnivariatePoly::exact(Prime(3), {0, -1, 0, 9})).count == 3);
}

TEST_CASE("finite precision") {
  const UnivariatePoly f = UnivariatePoly::truncated(Prime(5), {-1, 0, 1}, 8);
  const RootReport r = count_roots_zp(f);
  CHECK(r.count == 2);
  CHECK(r.status == RootStatus::Exact);
  CHECK_THROWS_AS(count_roots_zp(UnivariatePoly::truncated(Prime(3), {27, 81}, 3)), IdenticallyZeroAtPrecision);
  // t^2 at precision 4: the double root cannot be separated from a nearby pair.
  const RootReport u = count_roots_zp(UnivariatePoly::truncated(Prime(3), {0, 0, 1}, 4));
  CHECK(u.status != RootStatus::Exact);
}

TEST_CASE("brute-force equivalence") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-20, 20), deg(1, 4), pick(0, 2);
  const unsigned long primes[] = {2, 3, 5};
  long compared = 0;
  while (compared < 5000) {
    const unsigned long p = primes[pick(rng)];
    std::vector<orc::Z> f(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& a : f) a = coef(rng);
    if (f.back() == 0) continue;
    const long oz = orc::zp_roots(f, p, 20000);
    const long op = orc::p1_roots(f, p, 20000);
    if (oz < 0 || op < 0) continue;
    const std::vector<Integer> c(f.begin(), f.end());
    const RootReport rz = count_roots_zp(UnivariatePoly::exact(Prime(p), c));
    const RootReport rp = count_roots_p1(UnivariatePoly::exact(Prime(p), c));
    std::ostringstream tag;
    for (const auto& a : f) tag << a.get_str() << " ";
    INFO("p = " << p << ", coefficients " << tag.str());
    REQUIRE(rz.count == oz);
    REQUIRE(rp.count == op);
    CHECK(rz.status == RootStatus::Exact);
    CHECK(rp.count <= static_cast<long>(f.size()) - 1);
    check_witnesses(rz, p);
    check_witnesses(rp, p);
    // Chart partition.
    long parts = 0;
    for (const auto& part : rp.parts) parts += part.count;
    CHECK(parts == rp.count);
    CHECK(rp.parts.front().count == rz.count);
    ++compared;
  }
  CHECK(compared >= 5000);
}

TEST_CASE("adaptive counting of sampled polynomials") {
  const RandomPolyModel model{PolyBasis::Monomial, 2, 1, 3};
  long first_try = 0;
  const long n = 10000;
  for (long i = 0; i < n; ++i) {
    const DigitStream s(3, 100, static_cast<std::uint64_t>(i));
    const RootReport r = adaptive_count([&](long m) { return count_roots_p1(sample_poly(model, s, m)); });
    CHECK(r.status == RootStatus::Exact);
    if (r.working_precision == kDefaultPrecision) ++first_try;
  }
  CHECK(static_cast<double>(first_try) / n > 0.99);
  const DigitStream s(3, 100, 17);
  const RootReport a = adaptive_count([&](long m) { return count_roots_p1(sample_poly(model, s, m)); });
  const RootReport b = adaptive_count([&](long m) { return count_roots_p1(sample_poly(model, s, m)); });
  CHECK(a.count == b.count);
  CHECK(a.working_precision == b.working_precision);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].center == b.witnesses[i].center);
}

TEST_CASE("precision extension resolves vanishing low digits") {
  // A polynomial whose coefficients vanish mod 3^8 but not mod 3^16.
  const std::vector<Integer> c{ipow(3, 9) * 2, ipow(3, 10), ipow(3, 9) * -1};
  const RootReport r =
      adaptive_count([&](long m) { return count_roots_p1(UnivariatePoly::truncated(Prime(3), c, m)); });
  CHECK(r.working_precision == 16);
  CHECK(r.count == count_roots_p1(UnivariatePoly::exact(Prime(3), {2, 3, -1})).count);
  CHECK_THROWS_AS(adaptive_count([&](long m) { return count_roots_zp(UnivariatePoly::truncated(Prime(3), {0, 0, 1}, m)); }),
                  CertificationCapExceeded);
}
