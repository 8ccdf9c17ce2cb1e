#pragma once

// Brute-force reference computations, kept independent of the library's
// algorithms: plain enumeration over residue rings and exact rational algebra.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace padicig::oracle {

using Z = mpz_class;
using Q = mpq_class;

inline Z power(unsigned long p, long e) {
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

inline long val(Z x, unsigned long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Valuation capped at `cap` (zero has valuation >= cap).
inline long val_capped(const Z& x, unsigned long p, long cap) { return x == 0 ? cap : std::min(val(x, p), cap); }

inline Z modp(const Z& x, const Z& m) {
  Z r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Ascending coefficients evaluated by Horner.
inline Z eval(const std::vector<Z>& c, const Z& x) {
  Z acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<Z> deriv(const std::vector<Z>& c) {
  std::vector<Z> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  return d;
}

inline void trim(std::vector<Z>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

/// Determinant over Q by elimination.
inline Q det(std::vector<std::vector<Q>> a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

/// Res(f, g) from the Sylvester matrix.
inline Z resultant(const std::vector<Z>& f, const std::vector<Z>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t s = m + n;
  if (s == 0) return 1;
  std::vector<std::vector<Q>> a(s, std::vector<Q>(s, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = f[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = g[n - j];
  }
  const Q r = det(a);
  return r.get_num();
}

/// Distinct roots in Z_p of a squarefree integer polynomial by exhausting
/// Z/p^K, with K = 2 v(Res(f, f')) + 1. A class x counts when
/// v(f'(x)) < K/2 and v(f(x)) >= K + v(f'(x)); each root lies in exactly one
/// such class. `restrict` keeps only classes it accepts. Returns -1 when p^K
/// exceeds `limit` or f is not squarefree.
inline long zp_roots(std::vector<Z> f, unsigned long p, std::uint64_t limit,
                     const std::function<bool(const Z&)>& restrict = nullptr) {
  trim(f);
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  if (f.size() == 1) return 0;
  const std::vector<Z> df = deriv(f);
  const Z res = resultant(f, df);
  if (res == 0) return -1;
  const long K = 2 * val(res, p) + 1;
  const Z modulus = power(p, K);
  if (modulus > Z(static_cast<unsigned long>(limit))) return -1;
  long count = 0;
  for (Z x = 0; x < modulus; ++x) {
    if (restrict && !restrict(x)) continue;
    const long e = val_capped(eval(df, x), p, K);
    if (2 * e >= K) continue;
    if (val_capped(eval(f, x), p, K + e) >= K + e) ++count;
  }
  return count;
}

/// Zeros on P^1 of sum_i c_i x0^i x1^{d-i}: roots of F(t, 1) in Z_p plus
/// roots of F(1, s) with s in pZ_p. Returns -1 as zp_roots does.
inline long p1_roots(const std::vector<Z>& c, unsigned long p, std::uint64_t limit) {
  const long a = zp_roots(c, p, limit);
  if (a < 0) return -1;
  std::vector<Z> rev(c.rbegin(), c.rend());
  const long b = zp_roots(rev, p, limit, [p](const Z& s) { return s % p == 0; });
  if (b < 0) return -1;
  return a + b;
}

/// Canonical representative of a primitive vector mod p^m: scaled so that the
/// first unit coordinate is 1.
inline std::vector<std::uint64_t> canonical(std::vector<std::uint64_t> v, unsigned long p, long m) {
  const Z mod = power(p, m);
  std::size_t i = 0;
  while (i < v.size() && v[i] % p == 0) ++i;
  if (i == v.size()) throw std::invalid_argument("not primitive");
  Z inv;
  const Z vi(static_cast<unsigned long>(v[i]));
  mpz_invert(inv.get_mpz_t(), vi.get_mpz_t(), mod.get_mpz_t());
  for (auto& x : v) x = modp(Z(static_cast<unsigned long>(x)) * inv, mod).get_ui();
  return v;
}

/// Every primitive vector of (Z/p^m)^{n+1}, grouped by canonical class.
inline std::map<std::vector<std::uint64_t>, long> proj_classes(unsigned long p, long n, long m) {
  const std::uint64_t q = power(p, m).get_ui();
  std::map<std::vector<std::uint64_t>, long> classes;
  std::vector<std::uint64_t> v(static_cast<std::size_t>(n + 1), 0);
  for (;;) {
    bool primitive = false;
    for (auto x : v) primitive = primitive || x % p != 0;
    if (primitive) ++classes[canonical(v, p, m)];
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == q) v[i++] = 0;
    if (i == v.size()) break;
  }
  return classes;
}

/// Classes of P^n(Z/p^m) on which every (homogeneous) generator vanishes
/// mod p^m. For sets smooth mod p this is N_m.
inline long residue_solutions(const std::vector<std::function<Z(const std::vector<Z>&)>>& gens, unsigned long p,
                              long n, long m) {
  const Z mod = power(p, m);
  long count = 0;
  for (const auto& [cls, fiber] : proj_classes(p, n, m)) {
    (void)fiber;
    std::vector<Z> x;
    for (auto c : cls) x.emplace_back(static_cast<unsigned long>(c));
    bool zero = true;
    for (const auto& g : gens) zero = zero && modp(g(x), mod) == 0;
    if (zero) ++count;
  }
  return count;
}

/// Projective distance between integer vectors, as an exponent e with
/// d = p^{-e}; e = -1 marks distance zero. Max over 2x2 minors divided by the norms.
inline long proj_dist_exponent(const std::vector<Z>& x, const std::vector<Z>& y, unsigned long p) {
  long vx = -1, vy = -1;
  for (const auto& a : x) {
    if (a != 0) vx = vx < 0 ? val(a, p) : std::min(vx, val(a, p));
  }
  for (const auto& a : y) {
    if (a != 0) vy = vy < 0 ? val(a, p) : std::min(vy, val(a, p));
  }
  long vm = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Z minor = x[i] * y[j] - x[j] * y[i];
      if (minor != 0) vm = vm < 0 ? val(minor, p) : std::min(vm, val(minor, p));
    }
  }
  if (vm < 0) return -1;
  return vm - vx - vy;
}

}  // namespace padicig::oracle
