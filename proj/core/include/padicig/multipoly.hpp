#pragma once

// Sparse multivariate integer polynomials in x0..xn.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padicig/rational.hpp"
#include "padicig/residue.hpp"

namespace padicig {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  /// Parse sums of products of integers, x<i>, powers and parentheses,
  /// e.g. "x0*x2 - x1^2" or "(x0+3*x1)^2". nvars 0 infers from the text.
  static MultiPoly parse(const std::string& text, std::size_t nvars = 0);
  static MultiPoly constant(std::size_t nvars, const Integer& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Same polynomial viewed in more variables.
  MultiPoly widened(std::size_t nvars) const;

  MultiPoly derivative(std::size_t i) const;
  /// Divide out the largest power of p dividing every coefficient.
  MultiPoly without_p_content(unsigned long p) const;

  Integer evaluate(const std::vector<Integer>& x) const;
  std::uint64_t evaluate(const ModRing& ring, const std::vector<std::uint64_t>& x) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, Integer> terms_;
};

}  // namespace padicig
