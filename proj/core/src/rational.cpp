#include "padicig/rational.hpp"

#include <stdexcept>

namespace padicig {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(unsigned long p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
}

Integer ipow(unsigned long p, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Rational prime_power(unsigned long p, long e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
  Rational q(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
  q.canonicalize();
  return q;
}

long valuation(const Integer& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
  Integer t = x;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& x, unsigned long p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Rational padic_abs(const Rational& x, unsigned long p) {
  if (x == 0) return Rational(0);
  return prime_power(p, -valuation(x, p));
}

long floor_log(unsigned long p, unsigned long d) {
  if (d == 0) throw std::domain_error("floor_log of zero");
  long e = 0;
  unsigned long acc = 1;
  while (acc <= d / p) {
    acc *= p;
    ++e;
  }
  return e;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("no inverse modulo " + m.get_str());
  }
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace padicig
