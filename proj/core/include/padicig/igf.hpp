#pragma once

// Intersection counting and Monte Carlo estimators for integral geometry and
// expected zero counts.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padicig/proj.hpp"
#include "padicig/roots.hpp"
#include "padicig/sample.hpp"

namespace padicig {

/// A linear subspace of P^n given by integer equations (one per row).
class LinearSubspace {
 public:
  LinearSubspace(long n, std::vector<std::vector<Integer>> equations, unsigned long p);

  /// P^n itself (no equations).
  static LinearSubspace whole(long n, unsigned long p);
  /// The span of the given coordinate axes, e.g. {0, 1} is {x2 = ... = xn = 0}.
  static LinearSubspace coordinate(long n, const std::vector<long>& axes, unsigned long p);

  long ambient() const { return n_; }
  long codim() const { return static_cast<long>(eqs_.size()); }
  long dim() const { return n_ - codim(); }
  unsigned long prime() const { return p_; }
  const std::vector<std::vector<Integer>>& equations() const { return eqs_; }

 private:
  long n_;
  unsigned long p_;
  std::vector<std::vector<Integer>> eqs_;
};

struct LinearIntersection {
  bool infinite = false;  // rank deficient: not a single point
  std::optional<ProjPoint> point;
  /// Least valuation among the maximal minors; 0 means transversal mod p.
  long minor_valuation = 0;
};

/// Stack the equation rows (n rows for P^n) and solve by signed maximal minors.
/// Throws InsufficientPrecision when every minor vanishes at the working precision.
LinearIntersection intersect_rows(const std::vector<PadicVector>& rows);
LinearIntersection intersect_linear(const std::vector<LinearSubspace>& subspaces);

struct McReport {
  std::string estimator;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  long n_samples = 0;
  long excluded = 0;
  double mean = 0;
  double std_error = 0;
  Rational target = 0;
  long max_count = 0;
  std::vector<long> histogram;  // histogram[c] = samples with count c
  bool pass = false;
  long precision_extensions = 0;  // samples that needed more than the starting precision

  double excluded_fraction() const {
    return n_samples == 0 ? 0.0 : static_cast<double>(excluded) / static_cast<double>(n_samples);
  }
};

struct McOptions {
  long samples = 20000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  long start_precision = kDefaultPrecision;
  long precision_cap = kPrecisionCap;
  /// Statistical tolerance in standard errors.
  double tolerance = 4.0;
};

/// Result of one Monte Carlo sample: a count, or nullopt to exclude it.
struct SampleOutcome {
  std::optional<long> count;
  bool extended = false;
};

/// Run per-sample functions over sample indices 0..samples-1 and pool them.
/// Sample i depends only on (seed, i), so results do not depend on workers.
McReport run_monte_carlo(const std::string& estimator, const McOptions& opt, const Rational& target,
                         const std::function<SampleOutcome(const DigitStream&)>& sample, unsigned long p);

/// A linear space with a ball of radius p^{-radius} around `center`
/// (radius 0 is the whole space).
struct LinearBall {
  LinearSubspace space;
  ProjPoint center;
  long radius = 0;
};

/// vol(ball) / vol(space) for a ball of radius p^{-r} in P^a.
Rational ball_fraction(unsigned long p, long a, long r);

/// E #(g_x U_x cap g_y U_y cap H) over independent Haar g_x, g_y.
McReport mc_linear_lemma(const LinearBall& x, const LinearBall& y, const LinearSubspace& h, const McOptions& opt);

enum class CurveKind { StandardVeronese, Line, MahlerAffine, MahlerAnnulus };

struct Curve {
  CurveKind kind = CurveKind::StandardVeronese;
  long d = 2;
  long m = 1;  // annulus index for MahlerAnnulus
  unsigned long p = 3;

  /// Dimension of the ambient projective space.
  long ambient() const;
  std::string name() const;
};

/// vol_1(curve) / vol_1(P^1), computed from count_vol and the Mahler arc lengths.
Rational curve_target(const Curve& c);

/// E #(curve cap gL) for Haar g and L = {y0 = 0}. `twist`, a fixed matrix in
/// GL(Z_p) given row-major, replaces the curve by its image under twist.
McReport mc_igf_curve(const Curve& c, const McOptions& opt,
                      const std::optional<std::vector<Integer>>& twist = std::nullopt);

enum class RegionKind { P1, Zp, Annulus, Qp };

struct Region {
  RegionKind kind = RegionKind::Zp;
  long m = 1;
  std::string name() const;
  static Region parse(const std::string& s);
};

/// Closed-form expected number of zeros of the model in the region.
Rational expected_zeros_target(const RandomPolyModel& model, const Region& region);

McReport mc_expected_zeros(const RandomPolyModel& model, const Region& region, const McOptions& opt);

struct DensityReport {
  std::string model;
  unsigned long p = 2;
  long d = 1;
  long samples = 0;
  long excluded = 0;
  std::vector<long> counts;  // classes [0:1], ..., [p-1:1], then [1:0]
  double chi_square = 0;
  double p_value = 0;
  bool rejects_uniform = false;  // p_value < 1e-3
};

/// One uniformly chosen root per sample, binned by its class in P^1(F_p),
/// tested against the uniform law with a chi-square statistic.
DensityReport density_uniformity_test(const RandomPolyModel& model, const McOptions& opt);

}  // namespace padicig
