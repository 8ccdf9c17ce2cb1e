#pragma once

// Certified counting of N_m(X) for projective complete intersections and the
// resulting volumes.

#include <optional>
#include <string>
#include <vector>

#include "padicig/multipoly.hpp"
#include "padicig/proj.hpp"

namespace padicig {

/// X = V(gens) in P^n, claimed to be equidimensional of dimension k. Only
/// complete intersections are accepted: exactly n - k generators.
class AlgebraicSet {
 public:
  AlgebraicSet(long n, std::vector<MultiPoly> gens, long k, std::optional<long> degree = std::nullopt);
  static AlgebraicSet parse(long n, const std::vector<std::string>& gens, long k,
                            std::optional<long> degree = std::nullopt);

  long ambient() const { return n_; }
  long dim() const { return k_; }
  std::optional<long> degree() const { return degree_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }
  std::vector<std::string> gen_strings() const;

 private:
  long n_;
  long k_;
  std::optional<long> degree_;
  std::vector<MultiPoly> gens_;
};

struct CertifiedClass {
  ResidueProjPoint cls;
  long jacobian_valuation = 0;
};

struct CountOptions {
  /// Extra levels searched below m to decide classes left open at level m;
  /// negative means m + 1.
  long lookahead = -1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Check that certified classes split into exactly p^k certified children.
  bool check_tower = true;
  std::size_t tower_check_limit = 64;
};

struct CountResult {
  unsigned long p = 2;
  long m = 1;
  Integer n_lo = 0;
  Integer n_hi = 0;
  /// Contribution of certified classes alone (the smooth part).
  Integer n_certified = 0;
  /// Classes open at level m that the lookahead showed to meet X.
  long lookahead_met = 0;
  long unknown_classes = 0;
  /// No class was left open at level m.
  bool fully_certified = false;
  std::vector<CertifiedClass> certified;
  std::uint64_t classes_visited = 0;
};

CountResult count_points_mod(const AlgebraicSet& x, unsigned long p, long m, const CountOptions& opt = {});

/// Number of level-(L+1) children of a certified class that are certified.
/// Equals p^k for sound certification.
long certified_children(const AlgebraicSet& x, const CertifiedClass& c);

struct VolumeEstimate {
  unsigned long p = 2;
  long k = 0;
  bool stabilized = false;
  long m0 = 0;
  /// Not stabilized, but N_{m+1} - p^k N_m is one constant `defect` from m0
  /// on (at least two levels), as for lines crossing at points; the value is
  /// the limit of that recursion.
  bool extrapolated = false;
  Integer defect = 0;
  /// Exact value when stabilized; otherwise the interval at the deepest level.
  Rational value_lo = 0;
  Rational value_hi = 0;
  long max_level = 0;
  std::vector<CountResult> levels;

  bool exact() const { return stabilized; }
  bool known() const { return stabilized || extrapolated; }
  Rational value() const;
};

/// N_m / p^{mk} for m = 1..max_level with stabilization detection.
VolumeEstimate estimate_volume(const AlgebraicSet& x, unsigned long p, long max_level,
                               const CountOptions& opt = {});

struct DegreeBoundReport {
  long degree = 0;
  Rational raw = 0;         // vol_k(X), upper end of the estimate
  Rational normalized = 0;  // vol_k(X) / vol_k(P^k)
  bool raw_pass = false;
  bool normalized_pass = false;
  Rational slack = 0;  // degree - normalized
};

DegreeBoundReport check_degree_bound(const AlgebraicSet& x, const VolumeEstimate& est);

/// N_1(X) / p^k for X smooth mod p. Throws NotSmoothModP otherwise.
Rational weil_special_case(const AlgebraicSet& x, unsigned long p);

}  // namespace padicig
