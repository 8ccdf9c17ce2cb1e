#pragma once

// Certified counting of distinct p-adic roots of univariate polynomials.

#include <functional>
#include <string>
#include <vector>

#include "padicig/poly.hpp"

namespace padicig {

enum class RootStatus { Exact, LowerBound, Undetermined };

std::string to_string(RootStatus s);

/// A ball center + p^level Z_p (in the coordinate of `chart`) holding exactly
/// one root. hensel_point lies in the ball and satisfies
/// v(g(hensel_point)) > 2 v(g'(hensel_point)) for the chart polynomial g.
struct RootWitness {
  std::string chart;
  Integer center;
  long level = 0;
  Integer hensel_point;
  long value_valuation = 0;  // kInfinite when g(hensel_point) == 0
  long slope_valuation = 0;
};

struct ChartPart {
  std::string chart;
  long count = 0;
  std::vector<Integer> poly;  // the polynomial searched, in chart coordinates
};

struct RootReport {
  long count = 0;
  RootStatus status = RootStatus::Exact;
  std::vector<RootWitness> witnesses;
  long precision_consumed = 0;  // largest content valuation divided out on a branch
  long working_precision = kInfinite;
  long undetermined_branches = 0;
  /// Counts per chart, in the order the charts were searched.
  std::vector<ChartPart> parts;
};

struct RootOptions {
  /// Recursion levels before a branch is declared undetermined; 0 means 4(d+1).
  long depth_budget = 0;
};

/// Distinct roots of f in Z_p.
RootReport count_roots_zp(const UnivariatePoly& f, const RootOptions& opt = {});

/// Distinct zeros on P^1 of the binary form F(x0, x1) = sum_i c_i x0^i x1^{d-i}:
/// roots of F(t, 1) in Z_p plus roots of F(1, s) with s in pZ_p.
RootReport count_roots_p1(const UnivariatePoly& form, const RootOptions& opt = {});

/// Distinct roots x with |x| = p^m, m >= 1.
RootReport count_roots_annulus(const UnivariatePoly& f, long m, const RootOptions& opt = {});

/// Distinct roots in Q_p: Z_p plus the outside, via x = 1/y with y in pZ_p \ {0}.
RootReport count_roots_qp(const UnivariatePoly& f, const RootOptions& opt = {});

inline constexpr long kPrecisionCap = 64;

/// Run `count` at precisions 8, 16, 32, 64 until it returns Exact.
/// Throws CertificationCapExceeded otherwise.
RootReport adaptive_count(const std::function<RootReport(long precision)>& count,
                          long start = kDefaultPrecision, long cap = kPrecisionCap);

/// Chart polynomial used for the part outside Z_p: F(1, p u).
std::vector<Integer> infinity_chart(const std::vector<Integer>& coeffs, unsigned long p);
/// rev(f)(p^m u), whose unit roots u give the roots 1/(p^m u) of f.
std::vector<Integer> annulus_chart(const std::vector<Integer>& coeffs, unsigned long p, long m);

}  // namespace padicig
