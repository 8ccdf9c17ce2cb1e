#include "padicig/igf.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "padicig/count_vol.hpp"
#include "padicig/errors.hpp"
#include "padicig/residue.hpp"
#include "padicig/veronese.hpp"

namespace padicig {

namespace {

long rank_mod_p(const std::vector<std::vector<Integer>>& rows, unsigned long p) {
  if (rows.empty()) return 0;
  const ModRing ring(p, 1);
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> a;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> v;
    for (const auto& x : r) v.push_back(ring.reduce(x));
    a.push_back(std::move(v));
  }
  long rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(a.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    const auto& pr = a[static_cast<std::size_t>(rank)];
    const std::uint64_t inv = ring.inverse(pr[c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::uint64_t f = ring.mul(a[r][c], inv);
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ring.sub(a[r][k], ring.mul(f, pr[k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

LinearSubspace::LinearSubspace(long n, std::vector<std::vector<Integer>> equations, unsigned long p)
    : n_(n), p_(p), eqs_(std::move(equations)) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  for (auto& row : eqs_) {
    if (static_cast<long>(row.size()) != n + 1) throw std::invalid_argument("equation has the wrong length");
    long v = kInfinite;
    for (const auto& c : row) {
      if (c != 0) v = std::min(v, valuation(c, p));
    }
    if (v == kInfinite) throw std::invalid_argument("zero equation");
    if (v > 0) {
      const Integer pv = ipow(p, v);
      for (auto& c : row) c /= pv;
    }
  }
  if (rank_mod_p(eqs_, p) != codim()) {
    throw std::invalid_argument("equations are not independent mod p after content removal");
  }
}

LinearSubspace LinearSubspace::whole(long n, unsigned long p) { return LinearSubspace(n, {}, p); }

LinearSubspace LinearSubspace::coordinate(long n, const std::vector<long>& axes, unsigned long p) {
  std::vector<std::vector<Integer>> eqs;
  for (long i = 0; i <= n; ++i) {
    if (std::find(axes.begin(), axes.end(), i) != axes.end()) continue;
    std::vector<Integer> row(static_cast<std::size_t>(n + 1), Integer(0));
    row[static_cast<std::size_t>(i)] = 1;
    eqs.push_back(std::move(row));
  }
  return LinearSubspace(n, std::move(eqs), p);
}

LinearIntersection intersect_rows(const std::vector<PadicVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("no equations");
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n + 1) throw DimensionMismatch("codimensions must sum to the ambient dimension");
  }
  std::vector<PadicScalar> minors;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<PadicScalar> sub;
    for (const auto& r : rows) {
      for (std::size_t c = 0; c <= n; ++c) {
        if (c != j) sub.push_back(r[c]);
      }
    }
    PadicScalar det = determinant(PadicMatrix(n, n, std::move(sub)));
    minors.push_back(j % 2 == 0 ? det : -det);
  }
  LinearIntersection out;
  bool all_exact_zero = true, all_zero = true;
  long v = kInfinite;
  for (const auto& m : minors) {
    if (!m.is_exact_zero()) all_exact_zero = false;
    if (!m.is_zero()) all_zero = false;
    v = std::min(v, m.valuation());
  }
  if (all_exact_zero) {
    out.infinite = true;
    return out;
  }
  if (all_zero) throw InsufficientPrecision("all maximal minors vanish at the working precision");
  out.minor_valuation = v;
  out.point = ProjPoint(PadicVector(std::move(minors)));
  return out;
}

LinearIntersection intersect_linear(const std::vector<LinearSubspace>& subspaces) {
  if (subspaces.empty()) throw std::invalid_argument("no subspaces");
  const long n = subspaces.front().ambient();
  const Prime p(subspaces.front().prime());
  long codim = 0;
  std::vector<PadicVector> rows;
  for (const auto& s : subspaces) {
    if (s.ambient() != n) throw DimensionMismatch("subspaces live in different projective spaces");
    codim += s.codim();
    for (const auto& e : s.equations()) rows.push_back(PadicVector::exact(p, e));
  }
  if (codim != n) throw DimensionMismatch("codimensions sum to " + std::to_string(codim) + ", not " + std::to_string(n));
  return intersect_rows(rows);
}

McReport run_monte_carlo(const std::string& estimator, const McOptions& opt, const Rational& target,
                         const std::function<SampleOutcome(const DigitStream&)>& sample, unsigned long p) {
  if (opt.samples < 1) throw std::invalid_argument("need at least one sample");
  std::vector<SampleOutcome> results(static_cast<std::size_t>(opt.samples));
  const DigitStream root(p, opt.seed, 0);
  const unsigned workers = std::max(1u, opt.workers);
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&](unsigned w) {
    try {
      for (long i = w; i < opt.samples; i += workers) {
        results[static_cast<std::size_t>(i)] = sample(root.substream(static_cast<std::uint64_t>(i)));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  McReport rep;
  rep.estimator = estimator;
  rep.seed = opt.seed;
  rep.n_samples = opt.samples;
  rep.target = target;
  double sum = 0, sumsq = 0;
  long used = 0;
  for (const auto& r : results) {
    if (r.extended) ++rep.precision_extensions;
    if (!r.count) {
      ++rep.excluded;
      continue;
    }
    const long c = *r.count;
    ++used;
    sum += static_cast<double>(c);
    sumsq += static_cast<double>(c) * static_cast<double>(c);
    rep.max_count = std::max(rep.max_count, c);
    if (static_cast<std::size_t>(c) >= rep.histogram.size()) rep.histogram.resize(static_cast<std::size_t>(c) + 1, 0);
    ++rep.histogram[static_cast<std::size_t>(c)];
  }
  if (used == 0) return rep;
  rep.mean = sum / static_cast<double>(used);
  const double var = used > 1 ? (sumsq - sum * sum / static_cast<double>(used)) / static_cast<double>(used - 1) : 0.0;
  rep.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(used));
  const double t = target.get_d();
  if (rep.std_error == 0) {
    rep.pass = Rational(static_cast<long>(std::lround(rep.mean))) == target && rep.histogram.size() > 0 &&
               rep.histogram.back() == used;
  } else {
    rep.pass = std::fabs(rep.mean - t) <= opt.tolerance * rep.std_error;
  }
  return rep;
}

Rational ball_fraction(unsigned long p, long a, long r) {
  if (r <= 0 || a == 0) return Rational(1);
  Rational v = prime_power(p, -r * a) / volume_proj_space(p, a);
  v.canonicalize();
  return v;
}

namespace {

// a . g for an integer row a and a matrix g.
PadicVector row_times(const std::vector<Integer>& a, const PadicMatrix& g) {
  const Prime p = g.prime();
  std::vector<PadicScalar> out;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    PadicScalar acc = PadicScalar::exact(p, 0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (a[i] != 0) acc = acc + PadicScalar::exact(p, a[i]) * g(i, j);
    }
    out.push_back(std::move(acc));
  }
  return PadicVector(std::move(out));
}

// 1 inside, 0 outside, nullopt when the precision cannot tell.
std::optional<bool> in_ball(const PadicVector& v, const ProjPoint& center, long r) {
  if (r <= 0) return true;
  const PadicNorm d = proj_distance_bound(ProjPoint(v), center);
  if (d.is_zero()) return true;
  if (d.exponent <= -r) return true;
  if (d.is_exact()) return false;
  return std::nullopt;
}

}  // namespace

McReport mc_linear_lemma(const LinearBall& x, const LinearBall& y, const LinearSubspace& h, const McOptions& opt) {
  const long n = h.ambient();
  const unsigned long p = h.prime();
  if (x.space.ambient() != n || y.space.ambient() != n) throw DimensionMismatch("ambient dimensions differ");
  if (x.space.codim() + y.space.codim() + h.codim() != n) {
    throw DimensionMismatch("codimensions must sum to the ambient dimension");
  }
  const Rational target = ball_fraction(p, x.space.dim(), x.radius) * ball_fraction(p, y.space.dim(), y.radius);
  const Prime pp(p);
  auto sample = [&](const DigitStream& s) -> SampleOutcome {
    for (long m = opt.start_precision; m <= opt.precision_cap; m *= 2) {
      // Rows of the inverse Haar elements act directly: g^{-1} is Haar too.
      const PadicMatrix gx = sample_haar_gl(s.substream(0), static_cast<std::size_t>(n + 1), m);
      const PadicMatrix gy = sample_haar_gl(s.substream(1), static_cast<std::size_t>(n + 1), m);
      std::vector<PadicVector> rows;
      for (const auto& e : x.space.equations()) rows.push_back(row_times(e, gx));
      for (const auto& e : y.space.equations()) rows.push_back(row_times(e, gy));
      for (const auto& e : h.equations()) rows.push_back(PadicVector::exact(pp, e));
      LinearIntersection li;
      try {
        li = intersect_rows(rows);
      } catch (const InsufficientPrecision&) {
        continue;
      }
      if (li.infinite) return {std::nullopt, m > opt.start_precision};
      const PadicVector& q = li.point->coords();
      const auto ix = in_ball(gx.apply(q), x.center, x.radius);
      const auto iy = in_ball(gy.apply(q), y.center, y.radius);
      if (!ix || !iy) continue;
      return {(*ix && *iy) ? 1L : 0L, m > opt.start_precision};
    }
    return {std::nullopt, true};
  };
  McReport rep = run_monte_carlo("linear-lemma", opt, target, sample, p);
  rep.params["n"] = std::to_string(n);
  rep.params["prime"] = std::to_string(p);
  rep.params["radius_x"] = std::to_string(x.radius);
  rep.params["radius_y"] = std::to_string(y.radius);
  rep.params["codim_h"] = std::to_string(h.codim());
  return rep;
}

long Curve::ambient() const {
  switch (kind) {
    case CurveKind::Line:
      return 2;
    case CurveKind::StandardVeronese:
    case CurveKind::MahlerAffine:
    case CurveKind::MahlerAnnulus:
      break;
  }
  return d;
}

std::string Curve::name() const {
  switch (kind) {
    case CurveKind::StandardVeronese:
      return "veronese";
    case CurveKind::Line:
      return "line";
    case CurveKind::MahlerAffine:
      return "mahler";
    case CurveKind::MahlerAnnulus:
      break;
  }
  return "mahler-annulus:" + std::to_string(m);
}

Rational curve_target(const Curve& c) {
  const unsigned long p = c.p;
  const Rational vp1 = volume_proj_space(p, 1);
  Rational vol;
  switch (c.kind) {
    case CurveKind::StandardVeronese: {
      if (c.d == 2) {
        vol = estimate_volume(AlgebraicSet::parse(2, {"x0*x2-x1^2"}, 1, 2), p, 3).value();
      } else {
        const IsometryReport iso = isometry_check_standard(p, 1, c.d, 200, 7);
        if (!iso.pass()) throw IsometryViolation("Veronese map is not isometric: " + iso.witness.value_or(""));
        vol = vp1;
      }
      break;
    }
    case CurveKind::Line:
      vol = estimate_volume(AlgebraicSet::parse(2, {"x2"}, 1, 1), p, 3).value();
      break;
    case CurveKind::MahlerAffine: {
      std::vector<long> exps;
      for (long a = 0; a < 20; ++a) exps.push_back(mahler_jacobian_norm(p, c.d, Integer(a)).exponent);
      vol = arc_length(p, exps, Rational(1));
      break;
    }
    case CurveKind::MahlerAnnulus: {
      std::vector<long> exps;
      for (unsigned long u = 1; u < 4 * p; ++u) {
        if (u % p == 0) continue;
        const Rational t(Integer(u), ipow(p, c.m));
        exps.push_back(mahler_extended_jacobian_norm(p, c.d, t).exponent);
      }
      vol = arc_length(p, exps, prime_power(p, c.m) - prime_power(p, c.m - 1));
      break;
    }
  }
  Rational r = vol / vp1;
  r.canonicalize();
  return r;
}

namespace {

// The pullback of {y : row . y = 0} through the curve, counted at precision m.
RootReport curve_section(const Curve& c, const std::vector<Integer>& row, long m) {
  const Prime p(c.p);
  switch (c.kind) {
    case CurveKind::StandardVeronese: {
      // Monomial j is x0^{d-j} x1^j.
      std::vector<Integer> coeffs(static_cast<std::size_t>(c.d + 1));
      for (long j = 0; j <= c.d; ++j) coeffs[static_cast<std::size_t>(c.d - j)] = row[static_cast<std::size_t>(j)];
      return count_roots_p1(UnivariatePoly::truncated(p, std::move(coeffs), m));
    }
    case CurveKind::Line:
      return count_roots_p1(UnivariatePoly::truncated(p, {row[1], row[0]}, m));
    case CurveKind::MahlerAffine:
      return count_roots_zp(UnivariatePoly::truncated(p, mahler_to_monomial(row), m));
    case CurveKind::MahlerAnnulus:
      break;
  }
  return count_roots_annulus(UnivariatePoly::truncated(p, mahler_to_monomial(row), m), c.m);
}

}  // namespace

McReport mc_igf_curve(const Curve& c, const McOptions& opt, const std::optional<std::vector<Integer>>& twist) {
  const std::size_t size = static_cast<std::size_t>(c.ambient() + 1);
  if (twist) {
    if (twist->size() != size * size) throw std::invalid_argument("twist matrix has the wrong size");
    if (det_mod_p(*twist, size, c.p) == 0) throw std::invalid_argument("twist is not in GL(Z_p)");
  }
  auto sample = [&](const DigitStream& s) -> SampleOutcome {
    try {
      const RootReport r = adaptive_count(
          [&](long m) {
            std::vector<Integer> row = sample_haar_row(s, size, 0, m);
            if (twist) {
              std::vector<Integer> t(size, Integer(0));
              for (std::size_t j = 0; j < size; ++j) {
                for (std::size_t i = 0; i < size; ++i) t[j] += row[i] * (*twist)[i * size + j];
              }
              row = std::move(t);
            }
            return curve_section(c, row, m);
          },
          opt.start_precision, opt.precision_cap);
      return {r.count, r.working_precision > opt.start_precision};
    } catch (const CertificationCapExceeded&) {
      return {std::nullopt, true};
    }
  };
  McReport rep = run_monte_carlo("curve", opt, curve_target(c), sample, c.p);
  rep.params["curve"] = c.name();
  rep.params["degree"] = std::to_string(c.d);
  rep.params["prime"] = std::to_string(c.p);
  rep.params["twisted"] = twist ? "true" : "false";
  return rep;
}

std::string Region::name() const {
  switch (kind) {
    case RegionKind::P1:
      return "p1";
    case RegionKind::Zp:
      return "zp";
    case RegionKind::Qp:
      return "qp";
    case RegionKind::Annulus:
      break;
  }
  return "annulus:" + std::to_string(m);
}

Region Region::parse(const std::string& s) {
  if (s == "p1" || s == "P1") return {RegionKind::P1, 0};
  if (s == "zp" || s == "Zp") return {RegionKind::Zp, 0};
  if (s == "qp" || s == "Qp") return {RegionKind::Qp, 0};
  if (s.rfind("annulus:", 0) == 0) {
    const long m = std::stol(s.substr(8));
    if (m < 1) throw std::invalid_argument("annulus index must be at least 1");
    return {RegionKind::Annulus, m};
  }
  throw std::invalid_argument("unknown region '" + s + "'");
}

Rational expected_zeros_target(const RandomPolyModel& model, const Region& region) {
  const unsigned long p = model.prime;
  if (model.nvars != 1) throw std::invalid_argument("expected zeros are implemented for n = 1");
  const Rational denom = 1 + prime_power(p, -1);
  Rational r;
  if (model.basis == PolyBasis::Monomial) {
    switch (region.kind) {
      case RegionKind::P1:
      case RegionKind::Qp:
        r = 1;
        break;
      case RegionKind::Zp:
        r = 1 / denom;
        break;
      case RegionKind::Annulus:
        r = prime_power(p, -region.m) * (1 - prime_power(p, -1)) / denom;
        break;
    }
  } else {
    const Rational top = prime_power(p, floor_log(p, static_cast<unsigned long>(model.degree)));
    const Rational absd = padic_abs(Rational(model.degree), p);
    switch (region.kind) {
      case RegionKind::Zp:
        r = top / denom;
        break;
      case RegionKind::Annulus:
        r = absd * prime_power(p, -region.m) * (1 - prime_power(p, -1)) / denom;
        break;
      case RegionKind::P1:
      case RegionKind::Qp:
        r = (top + absd / p) / denom;
        break;
    }
  }
  r.canonicalize();
  return r;
}

namespace {

RootReport count_in_region(const RandomPolyModel& model, const Region& region, const DigitStream& s, long m) {
  const UnivariatePoly f = sample_poly(model, s, m);
  switch (region.kind) {
    case RegionKind::P1:
      return model.basis == PolyBasis::Monomial ? count_roots_p1(f) : count_roots_qp(f);
    case RegionKind::Zp:
      return count_roots_zp(f);
    case RegionKind::Annulus:
      return count_roots_annulus(f, region.m);
    case RegionKind::Qp:
      break;
  }
  return count_roots_qp(f);
}

std::string model_name(const RandomPolyModel& model) {
  return model.basis == PolyBasis::Monomial ? "monomial" : "mahler";
}

}  // namespace

McReport mc_expected_zeros(const RandomPolyModel& model, const Region& region, const McOptions& opt) {
  auto sample = [&](const DigitStream& s) -> SampleOutcome {
    try {
      const RootReport r = adaptive_count([&](long m) { return count_in_region(model, region, s, m); },
                                          opt.start_precision, opt.precision_cap);
      return {r.count, r.working_precision > opt.start_precision};
    } catch (const CertificationCapExceeded&) {
      return {std::nullopt, true};
    }
  };
  McReport rep = run_monte_carlo("expected-zeros", opt, expected_zeros_target(model, region), sample, model.prime);
  rep.params["model"] = model_name(model);
  rep.params["degree"] = std::to_string(model.degree);
  rep.params["prime"] = std::to_string(model.prime);
  rep.params["region"] = region.name();
  return rep;
}

DensityReport density_uniformity_test(const RandomPolyModel& model, const McOptions& opt) {
  const unsigned long p = model.prime;
  const Region region{RegionKind::P1, 0};
  // -1 excluded, -2 no root, otherwise the class index.
  auto sample = [&](const DigitStream& s) -> long {
    RootReport r;
    try {
      r = adaptive_count([&](long m) { return count_in_region(model, region, s, m); }, opt.start_precision,
                         opt.precision_cap);
    } catch (const CertificationCapExceeded&) {
      return -1;
    }
    if (r.count == 0) return -2;
    std::size_t pick = 0;
    if (r.count > 1) pick = DigitStream(static_cast<unsigned long>(r.count), s.seed(), s.id()).digit(0);
    const RootWitness& w = r.witnesses[pick];
    if (w.chart == "zp") return static_cast<long>(mod(w.center, Integer(p)).get_ui());
    return static_cast<long>(p);
  };
  const McReport pooled = run_monte_carlo(
      "density", opt, Rational(0),
      [&](const DigitStream& s) -> SampleOutcome {
        const long b = sample(s);
        return {b == -1 ? std::nullopt : std::optional<long>(b + 2), false};
      },
      p);
  DensityReport rep;
  rep.model = model_name(model);
  rep.p = p;
  rep.d = model.degree;
  rep.samples = opt.samples;
  rep.excluded = pooled.excluded;
  rep.counts.assign(p + 1, 0);
  for (std::size_t c = 2; c < pooled.histogram.size(); ++c) rep.counts[c - 2] = pooled.histogram[c];
  long total = 0;
  for (long c : rep.counts) total += c;
  if (total == 0) return rep;
  const double expected = static_cast<double>(total) / static_cast<double>(p + 1);
  for (long c : rep.counts) rep.chi_square += (c - expected) * (c - expected) / expected;
  rep.p_value = boost::math::gamma_q(static_cast<double>(p) / 2.0, rep.chi_square / 2.0);
  rep.rejects_uniform = rep.p_value < 1e-3;
  return rep;
}

}  // namespace padicig
