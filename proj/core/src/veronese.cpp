#include "padicig/veronese.hpp"

#include <set>
#include <stdexcept>

#include "padicig/errors.hpp"
#include "padicig/residue.hpp"

namespace padicig {

namespace {

void exponents_rec(long vars_left, long d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (vars_left == 1) {
    cur.push_back(static_cast<int>(d));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long e = d; e >= 0; --e) {
    cur.push_back(static_cast<int>(e));
    exponents_rec(vars_left - 1, d - e, cur, out);
    cur.pop_back();
  }
}

Integer binom_int(const Integer& t, long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}


}  // namespace

std::vector<std::vector<int>> monomial_exponents(long n, long d) {
  if (n < 0 || d < 0) throw std::invalid_argument("need n >= 0 and d >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponents_rec(n + 1, d, cur, out);
  return out;
}

PadicVector eval_standard(const PadicVector& x, long d) {
  const auto exps = monomial_exponents(static_cast<long>(x.size()) - 1, d);
  std::vector<PadicScalar> out;
  out.reserve(exps.size());
  for (const auto& e : exps) {
    PadicScalar m = PadicScalar::exact(x.prime(), 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) m = m * x[i];
    }
    out.push_back(std::move(m));
  }
  return PadicVector(std::move(out));
}

ProjPoint eval_standard(const ProjPoint& x, long d) { return ProjPoint(eval_standard(x.coords(), d)); }

PadicVector eval_mahler_affine(const PadicScalar& t, long d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (!t.is_zero() && t.valuation() < 0) throw DomainViolation("affine Mahler map needs t in Z_p");
  const Prime p = t.prime();
  const long abs = t.absolute_precision();
  const Integer lift = t.is_exact() ? t.to_integer() : t.residue(abs);
  std::vector<PadicScalar> out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (long k = 0; k <= d; ++k) {
    const Integer c = binom_int(lift, k);
    if (t.is_exact()) {
      out.push_back(PadicScalar::exact(p, c));
    } else {
      const long prec = k == 0 ? abs : abs - floor_log(p, static_cast<unsigned long>(k));
      out.push_back(PadicScalar::from_residue(p, c, std::max(prec, 0L)));
    }
  }
  return PadicVector(std::move(out));
}

std::vector<Rational> eval_mahler_extended(unsigned long p, const Rational& t, long d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (t == 0 || padic_abs(t, p) <= 1) throw DomainViolation("extended Mahler map needs |t| > 1");
  const Rational cd = binomial(t, d);
  std::vector<Rational> out;
  for (long k = 0; k <= d; ++k) {
    Rational v = binomial(t, k) / cd;
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

Rational binomial_derivative(const Rational& a, long k) {
  Rational sum = 0;
  for (long j = 0; j < k; ++j) {
    Rational prod = 1;
    for (long i = 0; i < k; ++i) {
      if (i != j) prod *= a - i;
    }
    sum += prod;
  }
  Integer kf = 1;
  for (long i = 2; i <= k; ++i) kf *= static_cast<unsigned long>(i);
  Rational r = sum / Rational(kf);
  r.canonicalize();
  return r;
}

JacobianNormReport mahler_jacobian_norm(unsigned long p, long d, const Integer& a) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  JacobianNormReport r;
  r.point = Rational(a);
  for (long k = 1; k <= d; ++k) {
    const Rational v = padic_abs(binomial_derivative(Rational(a), k), p);
    if (v > r.value) {
      r.value = v;
      r.certificate = k;
    }
  }
  r.exponent = r.value == 0 ? 0 : valuation(r.value, p);
  r.expected = prime_power(p, floor_log(p, static_cast<unsigned long>(d)));
  r.matches = r.value == r.expected;
  return r;
}

JacobianNormReport mahler_extended_jacobian_norm(unsigned long p, long d, const Rational& t) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (t == 0 || padic_abs(t, p) <= 1) throw DomainViolation("extended Mahler map needs |t| > 1");
  const long m = -valuation(t, p);
  const std::vector<Rational> f = eval_mahler_extended(p, t, d);
  JacobianNormReport r;
  r.point = t;
  for (long j = 0; j <= d; ++j) {
    // d/dt [C(t,j) / C(t,d)] = -G_j * sum_{r=j}^{d-1} 1/(t - r)
    Rational s = 0;
    for (long q = j; q < d; ++q) s += 1 / (t - q);
    Rational deriv = -f[static_cast<std::size_t>(j)] * s;
    deriv.canonicalize();
    const Rational v = padic_abs(deriv, p);
    if (v > r.value) {
      r.value = v;
      r.certificate = j;
    }
  }
  r.exponent = r.value == 0 ? 0 : valuation(r.value, p);
  r.expected = padic_abs(Rational(d), p) * prime_power(p, -2 * m);
  r.expected.canonicalize();
  r.matches = r.value == r.expected;
  return r;
}

Rational arc_length(unsigned long p, const std::vector<long>& jacobian_exponents, const Rational& domain_volume) {
  if (jacobian_exponents.empty()) throw std::invalid_argument("no Jacobian samples");
  for (long b : jacobian_exponents) {
    if (b != jacobian_exponents.front()) {
      throw NonConstantJacobian("sampled Jacobian norms p^" + std::to_string(jacobian_exponents.front()) +
                                " and p^" + std::to_string(b) + " disagree");
    }
  }
  Rational v = prime_power(p, jacobian_exponents.front()) * domain_volume;
  v.canonicalize();
  return v;
}

Rational mahler_affine_arc_length(unsigned long p, long d) {
  return prime_power(p, floor_log(p, static_cast<unsigned long>(d)));
}

Rational mahler_annulus_arc_length(unsigned long p, long d, long m) {
  Rational v = padic_abs(Rational(d), p) * prime_power(p, -2 * m) * (prime_power(p, m) - prime_power(p, m - 1));
  v.canonicalize();
  return v;
}

Integer mahler_image_count(unsigned long p, long d, long m) {
  const long e = floor_log(p, static_cast<unsigned long>(d));
  const ModRing ring(p, m);
  const std::uint64_t range = upow(p, m + e + 1);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t t = 0; t < range; ++t) {
    std::vector<std::uint64_t> img;
    img.reserve(static_cast<std::size_t>(d));
    for (long k = 1; k <= d; ++k) img.push_back(ring.reduce(binom_int(Integer(static_cast<unsigned long>(t)), k)));
    seen.insert(std::move(img));
  }
  return Integer(static_cast<unsigned long>(seen.size()));
}

namespace {

PadicVector random_sphere_point(unsigned long p, const DigitStream& s, long n, long digits) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const DigitStream a = s.substream(attempt);
    std::vector<Integer> c;
    bool nonzero = false;
    for (long j = 0; j <= n; ++j) {
      c.push_back(a.substream(static_cast<std::uint64_t>(j)).residue(digits));
      if (c.back() != 0) nonzero = true;
    }
    if (nonzero) return PadicVector::exact(Prime(p), c).sphere_normalized();
  }
}

std::string describe(const PadicVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace

IsometryReport isometry_check_standard(unsigned long p, long n, long d, long pairs, std::uint64_t seed,
                                       long digits) {
  IsometryReport rep;
  rep.map = "standard";
  rep.p = p;
  rep.n = n;
  rep.d = d;
  rep.pairs = pairs;
  const DigitStream root(p, seed, 0x5e1a);
  for (long i = 0; i < pairs; ++i) {
    const DigitStream s = root.substream(static_cast<std::uint64_t>(i));
    const PadicVector x = random_sphere_point(p, s.substream(0), n, digits);
    const PadicVector y = random_sphere_point(p, s.substream(1), n, digits);
    const PadicNorm before = wedge_norm(x, y);
    const PadicNorm after = wedge_norm(eval_standard(x, d), eval_standard(y, d));
    if (!(before == after)) {
      ++rep.failures;
      if (!rep.witness) rep.witness = describe(x) + " / " + describe(y);
    }
  }
  return rep;
}

IsometryReport isometry_check_mahler(unsigned long p, long d, long pairs, std::uint64_t seed, long digits) {
  IsometryReport rep;
  rep.map = "mahler";
  rep.p = p;
  rep.n = 1;
  rep.d = d;
  rep.pairs = pairs;
  const DigitStream root(p, seed, 0x3a41);
  for (long i = 0; i < pairs; ++i) {
    const DigitStream s = root.substream(static_cast<std::uint64_t>(i));
    const PadicScalar a = PadicScalar::exact(Prime(p), s.substream(0).residue(digits));
    const PadicScalar b = PadicScalar::exact(Prime(p), s.substream(1).residue(digits));
    const PadicVector fa = eval_mahler_affine(a, d);
    const PadicVector fb = eval_mahler_affine(b, d);
    const PadicNorm dist = wedge_norm(fa, fb);
    const PadicNorm diff = (fa - fb).norm();
    if (!(dist == diff)) {
      ++rep.failures;
      if (!rep.witness) rep.witness = "s=" + a.to_string() + " t=" + b.to_string();
    }
  }
  return rep;
}

}  // namespace padicig
