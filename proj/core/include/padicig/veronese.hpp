#pragma once

// Standard and Mahler Veronese maps, their Jacobian norms and arc lengths.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicig/proj.hpp"
#include "padicig/sample.hpp"

namespace padicig {

/// Exponent vectors of the degree-d monomials in x0..xn, lexicographically
/// descending (x0^d first).
std::vector<std::vector<int>> monomial_exponents(long n, long d);

/// nu_{n,d}(x): all degree-d monomials of x in monomial_exponents order.
PadicVector eval_standard(const PadicVector& x, long d);
ProjPoint eval_standard(const ProjPoint& x, long d);

/// F(t) = (1, C(t,1), ..., C(t,d)) for t in Z_p. A finite-precision t is
/// lifted to its integer representative; entry k loses floor(log_p k) digits.
PadicVector eval_mahler_affine(const PadicScalar& t, long d);

/// F(t) = (C(t,d)^{-1}, C(t,1) C(t,d)^{-1}, ..., 1) for |t| > 1, exactly.
/// Throws DomainViolation for |t| <= 1.
std::vector<Rational> eval_mahler_extended(unsigned long p, const Rational& t, long d);

struct JacobianNormReport {
  Rational point = 0;
  Rational value = 0;     // |J_F(point)|
  long exponent = 0;      // value = p^exponent
  long certificate = 0;   // coordinate index attaining the maximum
  Rational expected = 0;  // the closed form
  bool matches = false;
};

/// d/dt C(t, k) at t = a, exactly: (1/k!) sum_j prod_{i != j} (a - i).
Rational binomial_derivative(const Rational& a, long k);

/// max_k |d/dt C(t,k)(a)|, against p^{floor(log_p d)}.
JacobianNormReport mahler_jacobian_norm(unsigned long p, long d, const Integer& a);

/// Jacobian norm of the extended Mahler map at t with |t| = p^m, against |d| p^{-2m}.
JacobianNormReport mahler_extended_jacobian_norm(unsigned long p, long d, const Rational& t);

/// p^b vol(U) for a curve with constant Jacobian norm p^b; the sampled
/// exponents must all agree.
Rational arc_length(unsigned long p, const std::vector<long>& jacobian_exponents, const Rational& domain_volume);

/// vol_1 F(Z_p) = p^{floor(log_p d)}.
Rational mahler_affine_arc_length(unsigned long p, long d);
/// vol_1 F(A_m) = |d| p^{-2m} (p^m - p^{m-1}).
Rational mahler_annulus_arc_length(unsigned long p, long d, long m);

/// #{F(t) mod p^m : t in Z_p} by exhaustion over t mod p^{m + floor(log_p d) + 1}.
Integer mahler_image_count(unsigned long p, long d, long m);

struct IsometryReport {
  std::string map;
  unsigned long p = 2;
  long n = 1;
  long d = 1;
  long pairs = 0;
  long failures = 0;
  std::optional<std::string> witness;
  bool pass() const { return failures == 0; }
};

/// d(nu(x), nu(y)) == d(x, y) on `pairs` random exact pairs of sphere points
/// with coordinates below p^digits.
IsometryReport isometry_check_standard(unsigned long p, long n, long d, long pairs,
                                       std::uint64_t seed, long digits = 6);

/// d(F(s), F(t)) == |F(s) - F(t)| on `pairs` random exact integer pairs.
IsometryReport isometry_check_mahler(unsigned long p, long d, long pairs, std::uint64_t seed,
                                     long digits = 6);

}  // namespace padicig
