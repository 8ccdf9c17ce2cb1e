#include "padicig_cli/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "padicig/count_vol.hpp"
#include "padicig/errors.hpp"
#include "padicig/igf.hpp"
#include "padicig/proj.hpp"
#include "padicig/roots.hpp"
#include "padicig/veronese.hpp"
#include "padicig_cli/serialize.hpp"

namespace padicig::cli {

namespace {

namespace orc = padicig::oracle;

constexpr double kTolerance = 4.0;
constexpr double kMaxExcludedFraction = 1e-3;
constexpr long kRareEventSamples = 100000;
constexpr double kUniformityAlpha = 1e-3;

struct Check {
  std::vector<std::string> failures;
  std::ostringstream notes;
  nlohmann::json data = nlohmann::json::object();

  bool ok() const { return failures.empty(); }
  void require(bool cond, const std::string& what) {
    if (!cond && failures.size() < 8) failures.push_back(what);
  }
  std::string detail() const {
    std::string d = notes.str();
    while (!d.empty() && (d.back() == ' ' || d.back() == ';')) d.pop_back();
    if (!failures.empty()) {
      d += d.empty() ? "FAILED: " : " | FAILED: ";
      for (std::size_t i = 0; i < failures.size(); ++i) d += (i ? "; " : "") + failures[i];
    }
    return d;
  }
};

McOptions mc(const ReproduceOptions& o, long samples) {
  McOptions m;
  m.samples = samples;
  m.seed = o.seed;
  m.workers = o.workers;
  m.tolerance = kTolerance;
  return m;
}

std::string show(const Rational& q) { return to_string(q); }

void require_mc(Check& c, const McReport& r, const Rational& pinned, const std::string& label) {
  c.data[label] = to_json(r);
  c.require(r.target == pinned, label + ": target " + show(r.target) + " != " + show(pinned));
  c.require(r.excluded_fraction() < kMaxExcludedFraction, label + ": excluded fraction too large");
  const double dev = std::fabs(r.mean - pinned.get_d());
  c.require(dev <= kTolerance * r.std_error || (r.std_error == 0 && dev == 0),
            label + ": mean " + decimal(r.mean) + " vs " + show(pinned) + " (stderr " + decimal(r.std_error) + ")");
  c.notes << label << " " << decimal(r.mean) << "±" << decimal(r.std_error) << " vs "
           << show(pinned) << "; ";
}

AlgebraicSet plane_curve(const std::string& gen, long degree) { return AlgebraicSet::parse(2, {gen}, 1, degree); }

// Criterion bodies.

void conic_counts(Check& c, const ReproduceOptions& o) {
  const unsigned long p = o.prime;
  const VolumeEstimate v = estimate_volume(plane_curve("x0*x2-x1^2", 2), p, 3);
  std::vector<long> oracle;
  for (long m = 1; m <= 2; ++m) {
    oracle.push_back(orc::residue_solutions({[](const std::vector<orc::Z>& x) -> orc::Z { return x[0] * x[2] - x[1] * x[1]; }},
                                            p, 2, m));
  }
  // Beyond the oracle range the count multiplies by p per level.
  oracle.push_back(oracle.back() * static_cast<long>(p));
  if (p == 3) {
    c.require(oracle == std::vector<long>{4, 12, 36}, "oracle does not give 4, 12, 36");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const CountResult& r = v.levels[i];
    c.require(r.n_lo == r.n_hi && r.n_lo == oracle[i],
              "N_" + std::to_string(i + 1) + " = [" + r.n_lo.get_str() + ", " + r.n_hi.get_str() + "], oracle " +
                  std::to_string(oracle[i]));
  }
  const Rational expected = Rational(static_cast<long>(p + 1), static_cast<long>(p));
  c.require(v.stabilized && v.m0 == 1, "no stabilization at m0 = 1");
  c.require(v.stabilized && v.value() == expected, "volume differs from " + show(expected));
  c.notes << "N = " << v.levels[0].n_lo.get_str() << ", " << v.levels[1].n_lo.get_str() << ", "
           << v.levels[2].n_lo.get_str() << "; m0 = " << v.m0 << "; vol = " << (v.known() ? show(v.value()) : "?");
  c.data["volume"] = to_json(v);
}

void projective_counts(Check& c, const ReproduceOptions&) {
  long cases = 0;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long n : {1l, 2l}) {
      for (long m : {1l, 2l}) {
        const Integer formula = (ipow(p, static_cast<unsigned long>(m * (n + 1))) -
                                 ipow(p, static_cast<unsigned long>((m - 1) * (n + 1)))) /
                                (ipow(p, static_cast<unsigned long>(m)) - ipow(p, static_cast<unsigned long>(m - 1)));
        const auto listed = enumerate_proj(p, n, m);
        const auto classes = orc::proj_classes(p, n, m);
        const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        c.require(Integer(static_cast<unsigned long>(listed.size())) == formula, tag + ": enumeration size");
        c.require(proj_space_count(p, n, m) == formula, tag + ": closed count");
        c.require(Integer(static_cast<unsigned long>(classes.size())) == formula, tag + ": brute-force classes");
        ++cases;
      }
    }
  }
  c.notes << cases << " (p, n, m) cases match";
}

void veronese_isometry(Check& c, const ReproduceOptions& o) {
  for (auto [n, d, p] : std::vector<std::tuple<long, long, unsigned long>>{{1, 2, 3}, {1, 3, 2}, {2, 2, 3}}) {
    const IsometryReport r = isometry_check_standard(p, n, d, 1000, o.seed);
    c.require(r.pairs == 1000 && r.failures == 0, "nu_{" + std::to_string(n) + "," + std::to_string(d) +
                                                      "} at p=" + std::to_string(p) + ": " +
                                                      std::to_string(r.failures) + " failures");
    c.data["nu_" + std::to_string(n) + "_" + std::to_string(d) + "_p" + std::to_string(p)] = to_json(r);
  }
  c.notes << "3 x 1000 pairs, " << (c.ok() ? "0 failures" : "failures present");
}

void mahler_jacobian(Check& c, const ReproduceOptions&) {
  long checked = 0;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long d = 1; d <= 20; ++d) {
      long e = 0;
      while (orc::power(p, e + 1) <= d) ++e;
      const Rational expected(orc::power(p, e));
      for (long a = 0; a < 20; ++a) {
        const Integer t = Integer(a * 37) - 300;
        const JacobianNormReport r = mahler_jacobian_norm(p, d, t);
        c.require(r.value == expected, "p=" + std::to_string(p) + " d=" + std::to_string(d) + " t=" + t.get_str());
        ++checked;
      }
      const Rational absd(Integer(1), orc::power(p, orc::val(d, p)));
      for (long m = 1; m <= 3; ++m) {
        for (long u = 1; u <= 7; ++u) {
          if (u % static_cast<long>(p) == 0) continue;
          const Rational t(Integer(u) + orc::power(p, m + 1) * u, orc::power(p, m));
          const JacobianNormReport r = mahler_extended_jacobian_norm(p, d, t);
          const Rational target = absd / Rational(orc::power(p, 2 * m));
          c.require(r.value == target, "annulus p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                           " m=" + std::to_string(m));
          ++checked;
        }
      }
    }
  }
  c.notes << checked << " Jacobian norms exact";
}

void monomial_zeros(Check& c, const ReproduceOptions& o) {
  for (auto [d, p] : std::vector<std::pair<long, unsigned long>>{{2, 3}, {3, 3}, {5, 2}, {7, 5}}) {
    const McReport r = mc_expected_zeros({PolyBasis::Monomial, d, 1, p}, Region{RegionKind::P1, 0}, mc(o, o.samples));
    require_mc(c, r, Rational(1), "d=" + std::to_string(d) + ",p=" + std::to_string(p));
  }
}

void evans_value(Check& c, const ReproduceOptions& o) {
  const std::vector<std::tuple<long, unsigned long, Rational>> cases{
      {3, 3, Rational(9, 4)}, {7, 3, Rational(9, 4)}, {4, 2, Rational(8, 3)}};
  for (const auto& [d, p, target] : cases) {
    const McReport r = mc_expected_zeros({PolyBasis::Mahler, d, 1, p}, Region{RegionKind::Zp, 0}, mc(o, o.samples));
    require_mc(c, r, target, "d=" + std::to_string(d) + ",p=" + std::to_string(p));
  }
}

void annulus_law(Check& c, const ReproduceOptions& o) {
  const McReport a = mc_expected_zeros({PolyBasis::Mahler, 3, 1, 3}, Region{RegionKind::Annulus, 1},
                                       mc(o, std::max(o.samples, kRareEventSamples)));
  require_mc(c, a, Rational(1, 18), "annulus d=3,p=3,m=1");
  const McReport q = mc_expected_zeros({PolyBasis::Mahler, 7, 1, 3}, Region{RegionKind::Qp, 0}, mc(o, o.samples));
  require_mc(c, q, Rational(5, 2), "Qp d=7,p=3");
}

void linear_lemma(Check& c, const ReproduceOptions& o) {
  const unsigned long p = o.prime;
  const ProjPoint center = ProjPoint::exact(Prime(p), {1, 0, 0});
  const LinearSubspace line_x = LinearSubspace::coordinate(2, {0, 1}, p);
  const LinearSubspace line_y = LinearSubspace::coordinate(2, {0, 1}, p);
  // A radius-1/p ball in P^1 has measure p^{-1} / (1 + 1/p) of the line.
  const Rational frac = Rational(1, static_cast<long>(p)) / (1 + Rational(1, static_cast<long>(p)));
  const Rational target = frac * frac;
  if (p == 3) c.require(target == Rational(1, 16), "pinned target 1/16");
  const McReport r = mc_linear_lemma({line_x, center, 1}, {line_y, center, 1}, LinearSubspace::whole(2, p),
                                     mc(o, o.samples));
  require_mc(c, r, target, "balls r=1/" + std::to_string(p));
  const McReport full = mc_linear_lemma({line_x, center, 0}, {line_y, center, 0}, LinearSubspace::whole(2, p),
                                        mc(o, o.samples));
  c.data["full_space"] = to_json(full);
  const long used = full.n_samples - full.excluded;
  c.require(full.target == 1 && full.histogram.size() == 2 && full.histogram[1] == used,
            "full-space variant: some transversal sample did not give exactly one point");
  c.require(full.excluded_fraction() < kMaxExcludedFraction, "full-space variant: excluded fraction too large");
  c.notes << "full space: " << full.histogram.back() << "/" << used << " samples give 1";
}

void curve_igf(Check& c, const ReproduceOptions& o) {
  const unsigned long p = o.prime;
  const McReport conic = mc_igf_curve({CurveKind::StandardVeronese, 2, 1, p}, mc(o, o.samples));
  require_mc(c, conic, Rational(1), "conic");
  c.require(conic.max_count <= 2, "conic: a sample exceeded the degree");
  long e = 0;
  while (orc::power(p, e + 1) <= 3) ++e;
  const Rational target = Rational(orc::power(p, e)) / (1 + Rational(1, static_cast<long>(p)));
  if (p == 3) c.require(target == Rational(9, 4), "pinned target 9/4");
  const McReport mahler = mc_igf_curve({CurveKind::MahlerAffine, 3, 1, p}, mc(o, o.samples));
  require_mc(c, mahler, target, "mahler d=3");
  c.require(mahler.max_count <= 3, "mahler: a sample exceeded the degree");
}

void density(Check& c, const ReproduceOptions& o) {
  const unsigned long p = o.prime;
  const DensityReport mono = density_uniformity_test({PolyBasis::Monomial, 3, 1, p}, mc(o, o.samples));
  const long d = std::max<long>(3, static_cast<long>(p));
  const DensityReport mahl = density_uniformity_test({PolyBasis::Mahler, d, 1, p}, mc(o, o.samples));
  c.data["monomial"] = to_json(mono);
  c.data["mahler"] = to_json(mahl);
  c.require(mono.p_value > kUniformityAlpha, "monomial model rejected (p-value " + decimal(mono.p_value) + ")");
  c.require(mahl.p_value < kUniformityAlpha, "mahler model not rejected (p-value " + decimal(mahl.p_value) + ")");
  c.notes << "monomial p=" << decimal(mono.p_value) << ", mahler p=" << decimal(mahl.p_value);
}

void degree_bound(Check& c, const ReproduceOptions&) {
  const std::vector<std::tuple<std::string, std::string, long>> sets{
      {"conic", "x0*x2-x1^2", 2}, {"line", "x2", 1}, {"two lines", "x1*x2", 2}};
  for (unsigned long p : {3ul, 5ul}) {
    for (const auto& [name, gen, deg] : sets) {
      const AlgebraicSet x = plane_curve(gen, deg);
      const VolumeEstimate v = estimate_volume(x, p, 3);
      const DegreeBoundReport b = check_degree_bound(x, v);
      const std::string tag = name + " p=" + std::to_string(p);
      c.require(v.known(), tag + ": volume not determined");
      c.require(b.normalized <= deg && b.normalized_pass, tag + ": ratio " + show(b.normalized));
      c.data[tag] = to_json(b);
      c.notes << tag << ": " << show(b.normalized) << " <= " << deg << "; ";
    }
  }
}

// Property suites.

void arithmetic_properties(Check& c, std::mt19937_64& rng) {
  long checked = 0;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const Prime pp(p);
    std::uniform_int_distribution<long> coeff(-2000, 2000), shift(0, 4);
    auto draw = [&] {
      Integer x = coeff(rng);
      x *= orc::power(p, shift(rng));
      return x;
    };
    for (int i = 0; i < 400; ++i) {
      const Integer a = draw(), b = draw();
      const PadicScalar x = PadicScalar::exact(pp, a), y = PadicScalar::exact(pp, b);
      const PadicScalar s = x + y, t = x * y;
      if (a != 0) c.require(x.valuation() == orc::val(a, p), "valuation");
      if (a + b != 0) {
        const long vs = orc::val(a + b, p);
        c.require(s.valuation() == vs, "sum valuation");
        if (a != 0 && b != 0) {
          const long va = orc::val(a, p), vb = orc::val(b, p);
          c.require(vs >= std::min(va, vb), "ultrametric inequality");
          if (va != vb) c.require(vs == std::min(va, vb), "strict ultrametric equality");
        }
      }
      if (a != 0 && b != 0) c.require(t.norm().exponent == x.norm().exponent + y.norm().exponent, "multiplicativity");
      ++checked;
    }
    std::uniform_int_distribution<long> small(-60, 60);
    for (int i = 0; i < 300; ++i) {
      std::vector<std::vector<Integer>> v(3);
      for (auto& vec : v) {
        do {
          vec = {Integer(small(rng)), Integer(small(rng)), Integer(small(rng))};
        } while (vec[0] == 0 && vec[1] == 0 && vec[2] == 0);
      }
      std::vector<ProjPoint> q;
      for (const auto& vec : v) q.push_back(ProjPoint(PadicVector::exact(pp, vec)));
      auto dist = [&](int i1, int i2) {
        const PadicNorm d = proj_distance(q[static_cast<std::size_t>(i1)], q[static_cast<std::size_t>(i2)]);
        return d;
      };
      for (auto [i1, i2] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}) {
        const PadicNorm d = dist(i1, i2);
        const long e = orc::proj_dist_exponent(v[static_cast<std::size_t>(i1)], v[static_cast<std::size_t>(i2)], p);
        c.require(e < 0 ? d.is_zero() : (d.is_exact() && d.exponent == -e), "distance matches minors");
        c.require(d == dist(i2, i1), "distance symmetry");
        c.require(d.is_zero() || d.exponent <= 0, "distance at most 1");
      }
      auto num = [&](const PadicNorm& d) { return d.is_zero() ? Rational(0) : d.value(p); };
      c.require(num(dist(0, 2)) <= std::max(num(dist(0, 1)), num(dist(1, 2))), "ultrametric triangle");
      const PadicVector a = PadicVector::exact(pp, v[0]), b = PadicVector::exact(pp, v[1]);
      const PadicNorm w = wedge_norm(a, b);
      const long vx = -a.norm().exponent, vy = -b.norm().exponent;
      const long e = orc::proj_dist_exponent(v[0], v[1], p);
      c.require(e < 0 ? w.is_zero() : w.exponent == -(e + vx + vy), "wedge norm");
      ++checked;
    }
  }
  c.data["arithmetic_cases"] = checked;
  c.notes << checked << " arithmetic cases; ";
}

void root_properties(Check& c, std::mt19937_64& rng) {
  long compared = 0, constructed = 0;
  std::uniform_int_distribution<long> coef(-40, 40), deg(1, 5), pick(0, 3);
  const unsigned long primes[] = {2, 3, 5, 7};
  constexpr std::uint64_t kLimit = 20000;
  long attempts = 0;
  while (compared < 5000 && attempts < 200000) {
    ++attempts;
    const unsigned long p = primes[pick(rng)];
    const long d = deg(rng);
    std::vector<orc::Z> f(static_cast<std::size_t>(d + 1));
    for (auto& a : f) a = coef(rng);
    if (f.back() == 0) f.back() = 1;
    const long oz = orc::zp_roots(f, p, kLimit);
    const long op = orc::p1_roots(f, p, kLimit);
    if (oz < 0 || op < 0) continue;
    std::vector<Integer> coeffs(f.begin(), f.end());
    const RootReport rz = count_roots_zp(UnivariatePoly::exact(Prime(p), coeffs));
    const RootReport rp = count_roots_p1(UnivariatePoly::exact(Prime(p), coeffs));
    std::ostringstream poly;
    for (const auto& a : f) poly << a.get_str() << ",";
    c.require(rz.status == RootStatus::Exact && rz.count == oz,
              "Z_p count of [" + poly.str() + "] at p=" + std::to_string(p) + ": " + std::to_string(rz.count) +
                  " vs " + std::to_string(oz));
    c.require(rp.status == RootStatus::Exact && rp.count == op,
              "P^1 count of [" + poly.str() + "] at p=" + std::to_string(p) + ": " + std::to_string(rp.count) +
                  " vs " + std::to_string(op));
    const RootReport rt = adaptive_count(
        [&](long m) { return count_roots_zp(UnivariatePoly::truncated(Prime(p), coeffs, m)); });
    c.require(rt.count == oz, "truncated count of [" + poly.str() + "] at p=" + std::to_string(p));
    if (!c.ok()) break;
    ++compared;
  }
  c.require(compared >= 5000, "only " + std::to_string(compared) + " brute-force cases");
  // Products of known linear factors, repeated and clustered, times factors
  // with no root in Z_p: x^2 - p u (Eisenstein) and p x - 1.
  std::uniform_int_distribution<long> root(-50, 50), mult(1, 3), nlin(0, 3);
  for (int i = 0; i < 1000 && c.ok(); ++i) {
    const unsigned long p = primes[pick(rng)];
    std::vector<orc::Z> f{1};
    auto times = [&](const std::vector<orc::Z>& g) {
      std::vector<orc::Z> h(f.size() + g.size() - 1, 0);
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) h[a + b] += f[a] * g[b];
      }
      f = h;
    };
    std::set<orc::Z> roots;
    const long k = nlin(rng);
    orc::Z base = root(rng);
    for (long j = 0; j < k; ++j) {
      const orc::Z r = j % 2 == 1 ? base + orc::power(p, 2 + j) * root(rng) : orc::Z(root(rng));
      base = r;
      roots.insert(r);
      for (long e = mult(rng); e > 0; --e) times({-r, 1});
    }
    if (pick(rng) % 2 == 0) times({-orc::Z(p) * (1 + orc::Z(p) * root(rng)), 0, 1});
    if (pick(rng) % 2 == 0) times({-1, orc::Z(p)});
    if (f.size() == 1) times({-orc::Z(p), 0, 1});
    const std::vector<Integer> coeffs(f.begin(), f.end());
    const RootReport r = count_roots_zp(UnivariatePoly::exact(Prime(p), coeffs));
    c.require(r.status == RootStatus::Exact && r.count == static_cast<long>(roots.size()),
              "constructed case at p=" + std::to_string(p) + ": " + std::to_string(r.count) + " vs " +
                  std::to_string(roots.size()));
    ++constructed;
  }
  c.data["root_cases"] = compared;
  c.data["constructed_root_cases"] = constructed;
  c.notes << compared << " brute-force root cases, " << constructed << " constructed; ";
}

void hopf_properties(Check& c) {
  long classes_checked = 0;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long n : {1l, 2l}) {
      for (long m : {1l, 2l}) {
        if (p == 5 && n == 2 && m == 2) continue;
        const auto oracle = orc::proj_classes(p, n, m);
        const long fiber = static_cast<long>(orc::power(p, m).get_ui() - orc::power(p, m - 1).get_ui());
        for (const auto& [cls, size] : oracle) {
          c.require(size == fiber, "oracle fiber size");
          const ResidueProjPoint x = canonicalize(p, m, cls);
          c.require(x.coords == cls, "canonical representative");
          c.require(static_cast<long>(hopf_fiber(x).size()) == fiber, "Hopf fiber size");
          ++classes_checked;
        }
        const auto listed = enumerate_proj(p, n, m);
        c.require(listed.size() == oracle.size(), "enumeration matches brute force");
        for (const auto& x : listed) c.require(oracle.count(x.coords) == 1, "enumerated class is canonical");
      }
    }
  }
  c.data["hopf_classes"] = classes_checked;
  c.notes << classes_checked << " Hopf fibers";
}

void property_suites(Check& c, const ReproduceOptions& o) {
  std::mt19937_64 rng(o.seed);
  arithmetic_properties(c, rng);
  root_properties(c, rng);
  hopf_properties(c);
}

struct Criterion {
  const char* name;
  double budget;
  void (*body)(Check&, const ReproduceOptions&);
};

const Criterion kCriteria[] = {
    {"conic counts and volume", 1.0, conic_counts},
    {"projective space counts", 10.0, projective_counts},
    {"Veronese isometry", 5.0, veronese_isometry},
    {"Mahler Jacobian norms", 5.0, mahler_jacobian},
    {"expected zeros, monomial model", 60.0, monomial_zeros},
    {"expected zeros in Z_p, Mahler model", 60.0, evans_value},
    {"annulus law and Q_p total", 90.0, annulus_law},
    {"linear integral geometry lemma", 60.0, linear_lemma},
    {"curve integral geometry", 60.0, curve_igf},
    {"density uniformity", 60.0, density},
    {"degree bound", 5.0, degree_bound},
    {"property suites", 120.0, property_suites},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, const ReproduceOptions& opt) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
  const Criterion& k = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = k.name;
  r.budget_seconds = k.budget;
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    k.body(c, opt);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_budget = r.seconds < r.budget_seconds;
  r.pass = c.ok() && r.within_budget;
  r.detail = c.detail();
  if (!r.within_budget) r.detail += " (over the " + decimal(r.budget_seconds) + " s budget)";
  r.data = c.data;
  return r;
}

std::vector<CriterionResult> run_all(const ReproduceOptions& opt,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    out.push_back(run_criterion(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

Report run_reproduce(const ExperimentConfig& c) {
  ReproduceOptions o;
  o.prime = c.prime;
  o.seed = c.seed;
  o.samples = c.samples;
  o.workers = c.workers;
  Table t{{"id", "criterion", "pass", "detail"}, {}};
  namespace fs = std::filesystem;
  const fs::path dir = resolve_output_dir(c);
  fs::create_directories(dir);
  // Rows are flushed as they finish so an interrupted run keeps its results.
  const fs::path partial = dir / "reproduce-paper.partial.csv";
  std::ofstream live(partial, std::ios::trunc);
  live << to_csv({t.header, {}});
  live.flush();
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  run_all(o, [&](const CriterionResult& r) {
    std::vector<std::string> row{std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL", r.detail};
    t.rows.push_back(row);
    live << to_csv({{}, {row}}).substr(1);
    live.flush();
    std::printf("[%s] %2d %-38s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"within_budget", r.within_budget},
                    {"detail", r.detail},
                    {"data", r.data}});
    all = all && r.pass;
  });
  live.close();
  std::error_code ec;
  fs::remove(partial, ec);
  nlohmann::json j;
  j["criteria"] = rows;
  j["passed"] = std::count_if(t.rows.begin(), t.rows.end(), [](const auto& r) { return r[2] == "PASS"; });
  j["total"] = criterion_count();
  return {c, j, t, all};
}

}  // namespace padicig::cli
