#pragma once

// Truncated p-adic scalars, vectors and matrices.
//
// A PadicScalar is p^v * u with u a p-adic unit known modulo p^r. Values that
// are indistinguishable from zero at their absolute precision are a separate
// state and never compare equal to an exact zero. Exact mode (r infinite)
// holds arbitrary integers for fixtures and exact checks.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "padicig/rational.hpp"

namespace padicig {

inline constexpr long kInfinite = std::numeric_limits<long>::max();
inline constexpr long kDefaultPrecision = 8;

/// |x|_p of a truncated value: an exact power of p, an upper bound, or zero.
struct PadicNorm {
  enum class Kind { Exact, AtMost, Zero };

  Kind kind = Kind::Zero;
  long exponent = 0;  // value (Exact) or bound (AtMost) is p^exponent

  static PadicNorm exact(long e) { return {Kind::Exact, e}; }
  static PadicNorm at_most(long e) { return {Kind::AtMost, e}; }
  static PadicNorm zero() { return {Kind::Zero, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_zero() const { return kind == Kind::Zero; }
  bool is_bound() const { return kind == Kind::AtMost; }

  /// Exact value as a rational; throws InsufficientPrecision for bounds.
  Rational value(unsigned long p) const;

  friend bool operator==(const PadicNorm&, const PadicNorm&) = default;
};

/// Ultrametric max of two norms; bounds propagate when they may dominate.
PadicNorm max_norm(const PadicNorm& a, const PadicNorm& b);

std::string to_string(const PadicNorm& n, unsigned long p);

class PadicScalar {
 public:
  /// Exact integer value.
  static PadicScalar exact(Prime p, const Integer& value);
  /// Exact p^v * unit; unit need not be reduced but must be coprime to p.
  static PadicScalar exact_power(Prime p, long v, const Integer& unit);
  /// The residue class value mod p^abs_precision.
  static PadicScalar from_residue(Prime p, const Integer& value, long abs_precision);
  /// Zero known modulo p^abs_precision.
  static PadicScalar zero_at(Prime p, long abs_precision);

  Prime prime() const { return p_; }
  bool is_exact() const { return abs_precision_ == kInfinite; }
  /// Exact zero or zero at precision.
  bool is_zero() const { return valuation_ == kInfinite; }
  bool is_exact_zero() const { return is_zero() && is_exact(); }

  /// kInfinite for zero.
  long valuation() const { return valuation_; }
  const Integer& unit() const { return unit_; }
  /// kInfinite in exact mode or for a zero.
  long relative_precision() const;
  long absolute_precision() const { return abs_precision_; }

  PadicNorm norm() const;

  /// Value modulo p^m; requires valuation >= 0 and m <= absolute precision.
  Integer residue(long m) const;
  /// Exact integer value; requires exact mode and non-negative valuation.
  Integer to_integer() const;
  /// The same value truncated to a lower absolute precision.
  PadicScalar truncated(long abs_precision) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  /// Finite-precision division by a nonzero value. Exact division is only
  /// defined when the divisor's unit is +-1 (division by powers of p).
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

  /// Representation equality (same state, valuation, precision and unit).
  friend bool operator==(const PadicScalar& a, const PadicScalar& b);

  std::string to_string() const;

 private:
  PadicScalar(Prime p, long v, Integer unit, long abs_precision)
      : p_(p), valuation_(v), unit_(std::move(unit)), abs_precision_(abs_precision) {}

  static PadicScalar normalize(Prime p, Integer value, long shift, long abs_precision);

  Prime p_;
  long valuation_;
  Integer unit_;
  long abs_precision_;
};

/// An element of Q_p^{n+1}; all entries share one prime.
class PadicVector {
 public:
  PadicVector() = default;
  explicit PadicVector(std::vector<PadicScalar> entries);

  static PadicVector exact(Prime p, std::span<const Integer> values);
  static PadicVector exact(Prime p, std::initializer_list<long> values);
  static PadicVector from_residues(Prime p, std::span<const Integer> values, long abs_precision);

  Prime prime() const { return entries_.front().prime(); }
  std::size_t size() const { return entries_.size(); }
  const PadicScalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<PadicScalar>& entries() const { return entries_; }

  /// max_i |a_i|.
  PadicNorm norm() const;
  /// Minimum absolute precision over entries (kInfinite when exact).
  long absolute_precision() const;
  bool is_exact() const { return absolute_precision() == kInfinite; }
  /// norm() is exactly 1.
  bool on_sphere() const;

  /// Smallest finite valuation among entries; kInfinite if all vanish.
  long min_valuation() const;
  /// Divide by p^min_valuation so that the result lies on the unit sphere.
  PadicVector sphere_normalized() const;

  PadicVector scaled(const PadicScalar& c) const;
  friend PadicVector operator-(const PadicVector& a, const PadicVector& b);

 private:
  std::vector<PadicScalar> entries_;
};

class PadicMatrix {
 public:
  PadicMatrix(std::size_t rows, std::size_t cols, std::vector<PadicScalar> entries);

  static PadicMatrix exact(Prime p, std::size_t rows, std::size_t cols,
                           std::span<const Integer> values);
  static PadicMatrix exact(Prime p, std::size_t rows, std::size_t cols,
                           std::initializer_list<long> values);
  static PadicMatrix from_residues(Prime p, std::size_t rows, std::size_t cols,
                                   std::span<const Integer> values, long abs_precision);
  static PadicMatrix identity(Prime p, std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Prime prime() const { return entries_.front().prime(); }
  const PadicScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<PadicScalar>& entries() const { return entries_; }

  PadicVector row(std::size_t r) const;
  PadicVector apply(const PadicVector& v) const;
  friend PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);

  /// Square submatrix keeping all rows and the given columns.
  PadicMatrix column_subset(std::span<const std::size_t> cols) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PadicScalar> entries_;
};

/// Determinant via elimination with minimal-valuation pivoting.
/// The result is exact zero for singular exact matrices and zero-at-precision
/// when the elimination runs out of digits.
PadicScalar determinant(const PadicMatrix& m);

/// v_p(det M). Returns kInfinite for an exactly singular matrix and throws
/// InsufficientPrecision when the precision cannot decide.
long mat_det_valuation(const PadicMatrix& m);

/// max over 2x2 minors of [a; b] of |a_i b_j - a_j b_i|, possibly a bound.
PadicNorm wedge_norm_bound(const PadicVector& a, const PadicVector& b);

/// As wedge_norm_bound but throws InsufficientPrecision unless the result is
/// an exact power of p or an exact zero.
PadicNorm wedge_norm(const PadicVector& a, const PadicVector& b);

/// Scalar norm.
inline PadicNorm padic_norm(const PadicScalar& x) { return x.norm(); }

}  // namespace padicig
