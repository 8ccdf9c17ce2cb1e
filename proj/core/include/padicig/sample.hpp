#pragma once

// Seeded randomness: digit streams, Haar matrices, random polynomials.

#include <cstdint>
#include <vector>

#include "padicig/poly.hpp"
#include "padicig/zp_arith.hpp"

namespace padicig {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Uniform base-p digits addressed by (seed, stream id, index). Every digit
/// is a pure function of its address, so asking for more digits refines an
/// earlier draw rather than replacing it.
class DigitStream {
 public:
  DigitStream(unsigned long p, std::uint64_t seed, std::uint64_t stream_id = 0);

  unsigned long prime() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t id() const { return id_; }

  unsigned long digit(std::uint64_t index) const;
  /// sum_{i<m} digit(i) p^i.
  Integer residue(long m) const;
  /// An independent stream derived from this one.
  DigitStream substream(std::uint64_t child) const;

 private:
  unsigned long p_;
  std::uint64_t seed_;
  std::uint64_t id_;
  std::uint64_t limit_;  // largest multiple of p not exceeding 2^64
};

PadicScalar sample_zp(const DigitStream& s, long m);

/// A Haar sample of GL_size(Z_p) as residues mod p^m (row-major).
struct HaarSample {
  std::vector<Integer> entries;
  std::size_t size = 0;
  std::uint64_t attempt = 0;  // index of the accepted rejection round
};

/// Rejection sampler: entries uniform mod p, redrawn until det is a unit.
/// The accepted round is fixed by the mod-p digits, so raising m refines.
HaarSample sample_haar_gl_residues(const DigitStream& s, std::size_t size, long m);
PadicMatrix sample_haar_gl(const DigitStream& s, std::size_t size, long m);
/// Row `row` of the matrix sample_haar_gl would return, without the other rows' digits.
std::vector<Integer> sample_haar_row(const DigitStream& s, std::size_t size, std::size_t row, long m);

/// Determinant of a square integer matrix modulo a prime p.
unsigned long det_mod_p(const std::vector<Integer>& entries, std::size_t size, unsigned long p);

enum class PolyBasis { Monomial, Mahler };

struct RandomPolyModel {
  PolyBasis basis = PolyBasis::Monomial;
  long degree = 1;
  long nvars = 1;  // projective variables minus one; the Mahler model is univariate
  unsigned long prime = 2;
};

/// Number of random coefficients: C(n + d, d) monomials, d + 1 Mahler terms.
std::size_t coefficient_count(const RandomPolyModel& model);

/// Coefficient zeta_i mod p^m; coefficient i draws from substream i.
std::vector<Integer> sample_coefficients(const RandomPolyModel& model, const DigitStream& s, long m);

/// The univariate sample at precision m. Monomial model: the binary form
/// sum_i zeta_i x0^i x1^{d-i}. Mahler model: d! * sum_k zeta_k C(t, k) in the
/// monomial basis, which has the same roots.
UnivariatePoly sample_poly(const RandomPolyModel& model, const DigitStream& s, long m);

}  // namespace padicig
