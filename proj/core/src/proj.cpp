#include "padicig/proj.hpp"

#include <stdexcept>

#include "padicig/errors.hpp"
#include "padicig/residue.hpp"

namespace padicig {

ProjPoint::ProjPoint(const PadicVector& v) : coords_(v.sphere_normalized()) {}

ProjPoint ProjPoint::exact(Prime p, std::initializer_list<long> coords) {
  return ProjPoint(PadicVector::exact(p, coords));
}

std::size_t ResidueProjPoint::unit_index() const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] % p != 0) return i;
  }
  throw std::logic_error("residue point without a unit coordinate");
}

ResidueProjPoint canonicalize(unsigned long p, long m, std::vector<std::uint64_t> coords) {
  const ModRing ring(p, m);
  std::size_t i0 = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= ring.modulus();
    if (i0 == coords.size() && ring.is_unit(coords[i])) i0 = i;
  }
  if (i0 == coords.size()) throw std::domain_error("residue vector is not primitive");
  const std::uint64_t inv = ring.inverse(coords[i0]);
  for (auto& c : coords) c = ring.mul(c, inv);
  return ResidueProjPoint{p, m, std::move(coords)};
}

ResidueProjPoint truncate(const ResidueProjPoint& x, long level) {
  if (level < 1 || level > x.m) throw PrecisionTooLow("cannot truncate to level " + std::to_string(level));
  const std::uint64_t q = upow(x.p, level);
  std::vector<std::uint64_t> c = x.coords;
  for (auto& v : c) v %= q;
  return ResidueProjPoint{x.p, level, std::move(c)};
}

std::string to_string(const ResidueProjPoint& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(x.coords[i]);
  }
  return s + "] mod " + std::to_string(x.p) + "^" + std::to_string(x.m);
}

PadicNorm proj_distance_bound(const ProjPoint& x, const ProjPoint& y) {
  if (!(x.prime() == y.prime()) || x.dim() != y.dim()) {
    throw std::invalid_argument("points live in different projective spaces");
  }
  return wedge_norm_bound(x.coords(), y.coords());
}

PadicNorm proj_distance(const ProjPoint& x, const ProjPoint& y) {
  const PadicNorm d = proj_distance_bound(x, y);
  if (d.is_bound()) {
    throw InsufficientPrecision("points agree to precision p^" + std::to_string(-d.exponent));
  }
  return d;
}

ResidueProjPoint reduce_mod(const ProjPoint& x, long m) {
  if (m < 1) throw PrecisionTooLow("reduction level must be at least 1");
  if (m > x.absolute_precision()) {
    throw PrecisionTooLow("level " + std::to_string(m) + " exceeds precision " +
                          std::to_string(x.absolute_precision()));
  }
  const ModRing ring(x.prime(), m);
  std::vector<std::uint64_t> c;
  c.reserve(x.coords().size());
  for (const auto& e : x.coords().entries()) c.push_back(ring.reduce(e.residue(m)));
  return canonicalize(x.prime(), m, std::move(c));
}

Integer proj_space_count(unsigned long p, long n, long m) {
  const Integer num = ipow(p, m * (n + 1)) - ipow(p, (m - 1) * (n + 1));
  const Integer den = ipow(p, m) - ipow(p, m - 1);
  return num / den;
}

void for_each_proj(unsigned long p, long n, long m,
                   const std::function<void(const ResidueProjPoint&)>& visit,
                   std::uint64_t budget) {
  if (n < 0 || m < 1) throw std::invalid_argument("need n >= 0 and m >= 1");
  if (ipow(p, m * (n + 1)) > budget) {
    throw BudgetExceeded("p^{m(n+1)} exceeds the enumeration budget " + std::to_string(budget));
  }
  const std::uint64_t q = upow(p, m);
  const std::uint64_t q1 = q / p;
  ResidueProjPoint pt{p, m, std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0)};
  for (long i0 = 0; i0 <= n; ++i0) {
    // Coordinates before i0 run over pR_m, i0 is 1, later ones over R_m.
    std::vector<std::uint64_t> digit(static_cast<std::size_t>(n + 1), 0);
    auto limit = [&](long i) { return i < i0 ? q1 : (i == i0 ? 1 : q); };
    while (true) {
      for (long i = 0; i <= n; ++i) {
        pt.coords[i] = i < i0 ? digit[i] * p : (i == i0 ? 1 : digit[i]);
      }
      visit(pt);
      long i = n;
      for (; i >= 0; --i) {
        if (++digit[i] < limit(i)) break;
        digit[i] = 0;
      }
      if (i < 0) break;
    }
  }
}

std::vector<ResidueProjPoint> enumerate_proj(unsigned long p, long n, long m, std::uint64_t budget) {
  std::vector<ResidueProjPoint> out;
  for_each_proj(p, n, m, [&](const ResidueProjPoint& x) { out.push_back(x); }, budget);
  return out;
}

std::vector<std::vector<std::uint64_t>> hopf_fiber(const ResidueProjPoint& x) {
  const ModRing ring(x.p, x.m);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t u = 1; u < ring.modulus(); ++u) {
    if (!ring.is_unit(u)) continue;
    std::vector<std::uint64_t> v = x.coords;
    for (auto& c : v) c = ring.mul(c, u);
    out.push_back(std::move(v));
  }
  return out;
}

Rational volume_proj_space(unsigned long p, long k) {
  if (k < 0) throw std::invalid_argument("negative dimension");
  Rational v = (1 - prime_power(p, -(k + 1))) / (1 - prime_power(p, -1));
  v.canonicalize();
  return v;
}

}  // namespace padicig
