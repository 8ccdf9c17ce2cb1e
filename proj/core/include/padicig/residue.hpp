#pragma once

// Machine-word arithmetic in Z/p^m for moduli below 2^63.

#include <cstdint>
#include <vector>

#include "padicig/rational.hpp"

namespace padicig {

/// Z/p^m with p^m < 2^63. Products go through 128-bit intermediates.
class ModRing {
 public:
  ModRing(unsigned long p, long m);

  /// Whether p^m fits the machine representation.
  static bool fits(unsigned long p, long m);

  unsigned long prime() const { return p_; }
  long level() const { return m_; }
  std::uint64_t modulus() const { return q_; }

  std::uint64_t reduce(const Integer& x) const;
  std::uint64_t reduce(long long x) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }
  std::uint64_t pow(std::uint64_t a, unsigned long e) const;
  /// Inverse of a unit; a must be coprime to p.
  std::uint64_t inverse(std::uint64_t a) const;
  bool is_unit(std::uint64_t a) const { return a % p_ != 0; }
  /// v_p(a) capped at the level m (m means zero in the ring).
  long valuation(std::uint64_t a) const;

 private:
  unsigned long p_;
  long m_;
  std::uint64_t q_;
};

/// p^e as a machine word; requires the result to fit.
std::uint64_t upow(unsigned long p, long e);

}  // namespace padicig
