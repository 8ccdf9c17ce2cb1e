#pragma once

// Points of P^n over Q_p and over R_m = Z/p^m.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padicig/zp_arith.hpp"

namespace padicig {

/// A point of P^n(Q_p) stored through a sphere representative.
class ProjPoint {
 public:
  /// Any nonzero vector; it is rescaled onto the unit sphere.
  explicit ProjPoint(const PadicVector& v);
  static ProjPoint exact(Prime p, std::initializer_list<long> coords);

  Prime prime() const { return coords_.prime(); }
  std::size_t dim() const { return coords_.size() - 1; }
  const PadicVector& coords() const { return coords_; }
  long absolute_precision() const { return coords_.absolute_precision(); }

 private:
  PadicVector coords_;
};

/// A point of P^n(R_m) in canonical form: the first unit coordinate is 1.
struct ResidueProjPoint {
  unsigned long p = 2;
  long m = 1;
  std::vector<std::uint64_t> coords;

  /// Index of the coordinate equal to 1.
  std::size_t unit_index() const;

  friend bool operator==(const ResidueProjPoint&, const ResidueProjPoint&) = default;
  friend auto operator<=>(const ResidueProjPoint&, const ResidueProjPoint&) = default;
};

/// Rescale a primitive residue vector so its first unit coordinate is 1.
ResidueProjPoint canonicalize(unsigned long p, long m, std::vector<std::uint64_t> coords);

/// Truncate a canonical point from level m to a lower level.
ResidueProjPoint truncate(const ResidueProjPoint& x, long level);

std::string to_string(const ResidueProjPoint& x);

/// d(x, y) = |x ^ y|; throws InsufficientPrecision when only a bound is known.
PadicNorm proj_distance(const ProjPoint& x, const ProjPoint& y);
/// As proj_distance but returns a bound instead of throwing.
PadicNorm proj_distance_bound(const ProjPoint& x, const ProjPoint& y);

/// pi_m(x); requires 1 <= m <= absolute precision of x.
ResidueProjPoint reduce_mod(const ProjPoint& x, long m);

/// #P^n(R_m) = (p^{m(n+1)} - p^{(m-1)(n+1)}) / (p^m - p^{m-1}).
Integer proj_space_count(unsigned long p, long n, long m);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Visit every canonical point of P^n(R_m). Throws BudgetExceeded when
/// p^{m(n+1)} exceeds the budget.
void for_each_proj(unsigned long p, long n, long m,
                   const std::function<void(const ResidueProjPoint&)>& visit,
                   std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<ResidueProjPoint> enumerate_proj(unsigned long p, long n, long m,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// All sphere representatives u * x (u a unit mod p^m) of a canonical point.
std::vector<std::vector<std::uint64_t>> hopf_fiber(const ResidueProjPoint& x);

/// vol(P^k) = (1 - p^{-(k+1)}) / (1 - p^{-1}).
Rational volume_proj_space(unsigned long p, long k);

}  // namespace padicig
