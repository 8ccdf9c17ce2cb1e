#pragma once

// Univariate polynomials over Z_p with integer representatives.

#include <vector>

#include "padicig/rational.hpp"
#include "padicig/zp_arith.hpp"

namespace padicig {

/// f(t) = sum_i coeffs[i] t^i. The coefficient list fixes the formal degree,
/// so a binary form F(x0, x1) = sum_i coeffs[i] x0^i x1^{d-i} is stored as
/// its dehomogenization F(t, 1) with the same list.
///
/// In finite-precision mode every coefficient is known modulo p^precision and
/// is stored as its representative in [0, p^precision).
struct UnivariatePoly {
  Prime p{2};
  std::vector<Integer> coeffs;
  long precision = kInfinite;

  static UnivariatePoly exact(Prime p, std::vector<Integer> coeffs);
  static UnivariatePoly exact(Prime p, std::initializer_list<long> coeffs);
  static UnivariatePoly truncated(Prime p, std::vector<Integer> coeffs, long precision);

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_exact() const { return precision == kInfinite; }
  /// Every coefficient vanishes (exactly, or modulo p^precision).
  bool is_zero() const;
  /// Minimum coefficient valuation; kInfinite when is_zero().
  long content_valuation() const;
};

Integer evaluate(const std::vector<Integer>& coeffs, const Integer& x);
Integer evaluate_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& modulus);
std::vector<Integer> derivative(const std::vector<Integer>& coeffs);

/// Coefficients of f(a + c s) as a polynomial in s.
std::vector<Integer> taylor_shift(const std::vector<Integer>& coeffs, const Integer& a,
                                  const Integer& c);
/// t^d f(1/t).
std::vector<Integer> reversed(const std::vector<Integer>& coeffs);

/// Primitive integer polynomial whose roots are the distinct roots of f.
std::vector<Integer> squarefree_part(const std::vector<Integer>& coeffs);

/// Monomial coefficients of d! * sum_k zeta_k C(t, k), where d = zeta.size() - 1.
std::vector<Integer> mahler_to_monomial(const std::vector<Integer>& zeta);

/// C(t, k) as an exact rational for rational t.
Rational binomial(const Rational& t, long k);

}  // namespace padicig
