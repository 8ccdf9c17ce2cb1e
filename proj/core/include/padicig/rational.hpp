#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace padicig {

using Integer = mpz_class;
using Rational = mpq_class;

/// A rational prime. Construction rejects composites and values below 2.
class Prime {
 public:
  explicit Prime(unsigned long p);

  unsigned long value() const { return p_; }
  operator unsigned long() const { return p_; }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

 private:
  unsigned long p_;
};

bool is_prime(unsigned long n);

/// p^e for e >= 0.
Integer ipow(unsigned long p, unsigned long e);

/// p^e as an exact rational; e may be negative.
Rational prime_power(unsigned long p, long e);

/// v_p(x); x must be nonzero.
long valuation(const Integer& x, unsigned long p);
long valuation(const Rational& x, unsigned long p);

/// |x|_p as an exact rational (0 for x = 0).
Rational padic_abs(const Rational& x, unsigned long p);

/// floor(log_p d) for d >= 1.
long floor_log(unsigned long p, unsigned long d);

/// x mod m in [0, m).
Integer mod(const Integer& x, const Integer& m);

/// Inverse of a unit modulo m; throws std::domain_error if none exists.
Integer inverse_mod(const Integer& x, const Integer& m);

/// Canonical "num/den" text (den omitted when 1).
std::string to_string(const Rational& q);

}  // namespace padicig
