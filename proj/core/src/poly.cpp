#include "padicig/poly.hpp"

#include <stdexcept>

namespace padicig {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a nonzero g.
QPoly qrem(QPoly f, const QPoly& g) {
  trim(f);
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

QPoly qdiv(QPoly f, const QPoly& g) {
  trim(f);
  if (f.size() < g.size()) return {};
  QPoly q(f.size() - g.size() + 1);
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return q;
}

std::vector<Integer> primitive(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g != 0 && g != 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

}  // namespace

UnivariatePoly UnivariatePoly::exact(Prime p, std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  return UnivariatePoly{p, std::move(coeffs), kInfinite};
}

UnivariatePoly UnivariatePoly::exact(Prime p, std::initializer_list<long> coeffs) {
  return exact(p, std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

UnivariatePoly UnivariatePoly::truncated(Prime p, std::vector<Integer> coeffs, long precision) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  const Integer q = ipow(p, precision);
  for (auto& c : coeffs) c = mod(c, q);
  return UnivariatePoly{p, std::move(coeffs), precision};
}

bool UnivariatePoly::is_zero() const { return content_valuation() == kInfinite; }

long UnivariatePoly::content_valuation() const {
  long v = kInfinite;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    const long w = valuation(c, p);
    if (w < precision) v = std::min(v, w);
  }
  return v;
}

Integer evaluate(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer evaluate_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& modulus) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  }
  return acc;
}

std::vector<Integer> derivative(const std::vector<Integer>& coeffs) {
  if (coeffs.size() <= 1) return {Integer(0)};
  std::vector<Integer> d(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * static_cast<unsigned long>(i);
  return d;
}

std::vector<Integer> taylor_shift(const std::vector<Integer>& coeffs, const Integer& a,
                                  const Integer& c) {
  // Horner in the ring Z[s]: g = g * (a + c s) + coeff.
  std::vector<Integer> g(coeffs.size(), Integer(0));
  std::size_t len = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    for (std::size_t k = len + 1; k-- > 0;) {
      Integer v = (k < len ? g[k] * a : Integer(0));
      if (k > 0) v += g[k - 1] * c;
      g[k] = std::move(v);
    }
    g[0] += *it;
    if (len + 1 < coeffs.size()) ++len;
  }
  return g;
}

std::vector<Integer> reversed(const std::vector<Integer>& coeffs) {
  return std::vector<Integer>(coeffs.rbegin(), coeffs.rend());
}

std::vector<Integer> squarefree_part(const std::vector<Integer>& coeffs) {
  QPoly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() <= 1) return primitive(f.empty() ? QPoly{Rational(0)} : f);
  QPoly df(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<unsigned long>(i);
  QPoly a = f, b = df;
  trim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() <= 1) return primitive(f);
  return primitive(qdiv(f, a));
}

std::vector<Integer> mahler_to_monomial(const std::vector<Integer>& zeta) {
  if (zeta.empty()) throw std::invalid_argument("empty Mahler coefficient list");
  const std::size_t d = zeta.size() - 1;
  Integer dfact = 1;
  for (std::size_t i = 2; i <= d; ++i) dfact *= static_cast<unsigned long>(i);
  std::vector<Integer> out(d + 1, Integer(0));
  // falling[k] = t (t-1) ... (t-k+1), built incrementally.
  std::vector<Integer> falling{Integer(1)};
  Integer kfact = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) {
      kfact *= static_cast<unsigned long>(k);
      std::vector<Integer> next(falling.size() + 1, Integer(0));
      const long shift = static_cast<long>(k) - 1;
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * shift;
      }
      falling = std::move(next);
    }
    const Integer scale = zeta[k] * (dfact / kfact);
    for (std::size_t i = 0; i < falling.size(); ++i) out[i] += scale * falling[i];
  }
  return out;
}

Rational binomial(const Rational& t, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (t - i) / Rational(i + 1);
  r.canonicalize();
  return r;
}

}  // namespace padicig
