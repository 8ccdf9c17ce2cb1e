#include "padicig/residue.hpp"

#include <stdexcept>

namespace padicig {

std::uint64_t upow(unsigned long p, long e) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 63) / p) throw std::overflow_error("p^e exceeds 63 bits");
    r *= p;
  }
  return r;
}

bool ModRing::fits(unsigned long p, long m) {
  unsigned __int128 r = 1;
  for (long i = 0; i < m; ++i) {
    r *= p;
    if (r >= (static_cast<unsigned __int128>(1) << 63)) return false;
  }
  return true;
}

ModRing::ModRing(unsigned long p, long m) : p_(p), m_(m) {
  if (m < 0 || !fits(p, m)) throw std::invalid_argument("modulus does not fit a machine word");
  q_ = upow(p, m);
}

std::uint64_t ModRing::reduce(const Integer& x) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), q_);
  return r.get_ui();
}

std::uint64_t ModRing::reduce(long long x) const {
  const long long q = static_cast<long long>(q_);
  long long r = x % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ModRing::pow(std::uint64_t a, unsigned long e) const {
  std::uint64_t r = 1 % q_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t ModRing::inverse(std::uint64_t a) const {
  if (!is_unit(a)) throw std::domain_error("not a unit");
  // Extended Euclid in signed 128-bit.
  __int128 t = 0, nt = 1, r = q_, nr = a % q_;
  while (nr != 0) {
    const __int128 qt = r / nr;
    __int128 tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += q_;
  return static_cast<std::uint64_t>(t);
}

long ModRing::valuation(std::uint64_t a) const {
  if (a == 0) return m_;
  long v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

}  // namespace padicig
