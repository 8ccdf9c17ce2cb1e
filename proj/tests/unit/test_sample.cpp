#include <doctest.h>

#include <map>

#include "padicig/poly.hpp"
#include "padicig/sample.hpp"

using namespace padicig;

namespace {

// Upper 10^-3 quantiles of chi-square with the given degrees of freedom.
constexpr double kChi2Crit7 = 24.322;
constexpr double kChi2Crit26 = 54.052;
constexpr double kChi2Crit47 = 82.720;

double chi_square(const std::map<std::vector<long>, long>& counts, long cells, long total) {
  const double e = static_cast<double>(total) / static_cast<double>(cells);
  double x = 0;
  for (const auto& [k, c] : counts) x += (c - e) * (c - e) / e;
  x += static_cast<double>(cells - static_cast<long>(counts.size())) * e;
  return x;
}

}  // namespace

TEST_CASE("sample_zp digits") {
  const DigitStream s(2, 42, 0);
  const PadicScalar a = sample_zp(s, 3);
  const PadicScalar b = sample_zp(s, 5);
  CHECK(b.residue(3) == a.residue(3));
  CHECK(a.absolute_precision() == 3);
  for (int i = 0; i < 50; ++i) {
    const Integer r = DigitStream(3, 1, static_cast<std::uint64_t>(i)).residue(1);
    CHECK(r >= 0);
    CHECK(r < 3);
  }
}

TEST_CASE("sample_zp is uniform mod 8") {
  std::map<std::vector<long>, long> counts;
  const long n = 40000;
  for (long i = 0; i < n; ++i) {
    ++counts[{DigitStream(2, 5, static_cast<std::uint64_t>(i)).residue(3).get_si()}];
  }
  CHECK(counts.size() == 8);
  CHECK(chi_square(counts, 8, n) < kChi2Crit7);
}

TEST_CASE("streams are deterministic and substreams independent of order") {
  const DigitStream s(5, 1234, 7);
  const Integer a = s.substream(3).residue(20);
  const Integer b = s.substream(2).residue(20);
  CHECK(DigitStream(5, 1234, 7).substream(3).residue(20) == a);
  CHECK(a != b);
  CHECK(DigitStream(5, 1235, 7).substream(3).residue(20) != a);
  // Pinned digits guard the generator against accidental changes.
  const DigitStream g(3, 42, 0);
  std::vector<unsigned long> digits;
  for (std::uint64_t i = 0; i < 12; ++i) digits.push_back(g.digit(i));
  CHECK(digits == std::vector<unsigned long>{1, 0, 2, 1, 1, 2, 1, 2, 2, 1, 1, 1});
}

TEST_CASE("Haar samples refine and have unit determinant") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DigitStream s(3, 77, i);
    const HaarSample lo = sample_haar_gl_residues(s, 3, 2);
    const HaarSample hi = sample_haar_gl_residues(s, 3, 6);
    CHECK(lo.attempt == hi.attempt);
    for (std::size_t k = 0; k < 9; ++k) CHECK(hi.entries[k] % 9 == lo.entries[k]);
    CHECK(det_mod_p(hi.entries, 3, 3) != 0);
    const auto row = sample_haar_row(s, 3, 1, 6);
    for (std::size_t k = 0; k < 3; ++k) CHECK(row[k] == hi.entries[3 + k]);
  }
}

TEST_CASE("Haar law mod p is invariant under left translation") {
  const long n = 100000;
  const std::vector<long> h{1, 1, 0, 1};  // [[1,1],[0,1]]
  std::map<std::vector<long>, long> plain, moved;
  for (long i = 0; i < n; ++i) {
    const HaarSample g = sample_haar_gl_residues(DigitStream(3, 2024, static_cast<std::uint64_t>(i)), 2, 1);
    std::vector<long> e;
    for (const auto& x : g.entries) e.push_back(x.get_si());
    ++plain[e];
    const HaarSample g2 = sample_haar_gl_residues(DigitStream(3, 4048, static_cast<std::uint64_t>(i)), 2, 1);
    std::vector<long> f;
    for (const auto& x : g2.entries) f.push_back(x.get_si());
    std::vector<long> hg{(h[0] * f[0] + h[1] * f[2]) % 3, (h[0] * f[1] + h[1] * f[3]) % 3,
                         (h[2] * f[0] + h[3] * f[2]) % 3, (h[2] * f[1] + h[3] * f[3]) % 3};
    ++moved[hg];
  }
  // |GL_2(F_3)| = 48 cells.
  CHECK(plain.size() == 48);
  CHECK(moved.size() == 48);
  CHECK(chi_square(plain, 48, n) < kChi2Crit47);
  CHECK(chi_square(moved, 48, n) < kChi2Crit47);
}

TEST_CASE("polynomial models") {
  const RandomPolyModel mono{PolyBasis::Monomial, 2, 1, 3};
  CHECK(coefficient_count(mono) == 3);
  const DigitStream s(3, 8, 0);
  const auto z = sample_coefficients(mono, s, 6);
  const UnivariatePoly f = sample_poly(mono, s, 6);
  CHECK(f.coeffs == z);
  CHECK(f.precision == 6);

  const RandomPolyModel mahler{PolyBasis::Mahler, 3, 1, 3};
  CHECK(coefficient_count(mahler) == 4);
  const auto zm = sample_coefficients(mahler, s, 10);
  const UnivariatePoly g = sample_poly(mahler, s, 10);
  // 3! * sum_k zeta_k C(t, k) at integer points.
  for (long t = -4; t <= 6; ++t) {
    Rational want = 0;
    for (long k = 0; k <= 3; ++k) want += Rational(zm[static_cast<std::size_t>(k)]) * binomial(Rational(t), k);
    want *= 6;
    CHECK(mod(evaluate(g.coeffs, Integer(t)) - want.get_num(), ipow(3, 10)) == 0);
  }
  CHECK_THROWS(sample_coefficients(mahler, DigitStream(5, 1, 0), 4));
}

TEST_CASE("monomial model law is GL_2-invariant mod p") {
  // F(x0, x1) -> F(x0 + x1, x1) for binary quadratics at p = 3: 27 cells.
  const RandomPolyModel mono{PolyBasis::Monomial, 2, 1, 3};
  const long n = 60000;
  std::map<std::vector<long>, long> cells;
  for (long i = 0; i < n; ++i) {
    const auto z = sample_coefficients(mono, DigitStream(3, 31, static_cast<std::uint64_t>(i)), 1);
    const long c0 = z[0].get_si(), c1 = z[1].get_si(), c2 = z[2].get_si();
    // c0 x1^2 + c1 x0 x1 + c2 x0^2 with x0 -> x0 + x1.
    ++cells[{(c0 + c1 + c2) % 3, (c1 + 2 * c2) % 3, c2 % 3}];
  }
  CHECK(cells.size() == 27);
  CHECK(chi_square(cells, 27, n) < kChi2Crit26);
}
