#include "padicig/sample.hpp"

#include <stdexcept>

#include "padicig/residue.hpp"

namespace padicig {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DigitStream::DigitStream(unsigned long p, std::uint64_t seed, std::uint64_t stream_id)
    : p_(p), seed_(seed), id_(stream_id) {
  if (p < 2) throw std::invalid_argument("digit stream needs p >= 2");
  limit_ = (~std::uint64_t{0} / p) * p;
}

unsigned long DigitStream::digit(std::uint64_t index) const {
  const std::uint64_t base = mix64(mix64(seed_) ^ mix64(id_ + 0x632be59bd9b4e019ULL)) ^ index;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t x = mix64(mix64(base + attempt * 0xd1b54a32d192ed03ULL) ^ index);
    if (x < limit_) return static_cast<unsigned long>(x % p_);
  }
}

Integer DigitStream::residue(long m) const {
  Integer r = 0;
  for (long i = m; i-- > 0;) r = r * p_ + digit(static_cast<std::uint64_t>(i));
  return r;
}

DigitStream DigitStream::substream(std::uint64_t child) const {
  return DigitStream(p_, seed_, mix64(id_ * 0x9e3779b97f4a7c15ULL + mix64(child + 1)));
}

PadicScalar sample_zp(const DigitStream& s, long m) {
  if (m < 1) throw std::invalid_argument("sample precision must be positive");
  return PadicScalar::from_residue(Prime(s.prime()), s.residue(m), m);
}

unsigned long det_mod_p(const std::vector<Integer>& entries, std::size_t size, unsigned long p) {
  const ModRing ring(p, 1);
  std::vector<std::uint64_t> a(size * size);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.reduce(entries[i]);
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t piv = k;
    while (piv < size && a[piv * size + k] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < size; ++c) std::swap(a[piv * size + c], a[k * size + c]);
      det = ring.neg(det);
    }
    det = ring.mul(det, a[k * size + k]);
    const std::uint64_t inv = ring.inverse(a[k * size + k]);
    for (std::size_t r = k + 1; r < size; ++r) {
      const std::uint64_t f = ring.mul(a[r * size + k], inv);
      if (f == 0) continue;
      for (std::size_t c = k; c < size; ++c) {
        a[r * size + c] = ring.sub(a[r * size + c], ring.mul(f, a[k * size + c]));
      }
    }
  }
  return static_cast<unsigned long>(det);
}

namespace {

// Index of the first rejection round whose matrix is invertible mod p.
std::uint64_t accepted_round(const DigitStream& s, std::size_t size) {
  std::vector<Integer> low(size * size);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const DigitStream round = s.substream(attempt);
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = round.substream(i).digit(0);
    if (det_mod_p(low, size, s.prime()) != 0) return attempt;
  }
}

}  // namespace

HaarSample sample_haar_gl_residues(const DigitStream& s, std::size_t size, long m) {
  if (m < 1 || size == 0) throw std::invalid_argument("need m >= 1 and a positive size");
  HaarSample out;
  out.size = size;
  out.attempt = accepted_round(s, size);
  const DigitStream round = s.substream(out.attempt);
  out.entries.resize(size * size);
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = round.substream(i).residue(m);
  return out;
}

std::vector<Integer> sample_haar_row(const DigitStream& s, std::size_t size, std::size_t row, long m) {
  if (m < 1 || size == 0 || row >= size) throw std::invalid_argument("bad Haar row request");
  const DigitStream round = s.substream(accepted_round(s, size));
  std::vector<Integer> out(size);
  for (std::size_t j = 0; j < size; ++j) out[j] = round.substream(row * size + j).residue(m);
  return out;
}

PadicMatrix sample_haar_gl(const DigitStream& s, std::size_t size, long m) {
  const HaarSample h = sample_haar_gl_residues(s, size, m);
  return PadicMatrix::from_residues(Prime(s.prime()), size, size, h.entries, m);
}

std::size_t coefficient_count(const RandomPolyModel& model) {
  if (model.basis == PolyBasis::Mahler) return static_cast<std::size_t>(model.degree + 1);
  // C(n + d, d)
  Integer c = 1;
  for (long i = 1; i <= model.nvars; ++i) {
    c *= static_cast<unsigned long>(model.degree + i);
    c /= static_cast<unsigned long>(i);
  }
  return c.get_ui();
}

std::vector<Integer> sample_coefficients(const RandomPolyModel& model, const DigitStream& s, long m) {
  if (model.degree < 1) throw std::invalid_argument("degree must be positive");
  if (model.basis == PolyBasis::Mahler && model.nvars != 1) {
    throw std::invalid_argument("the Mahler model is univariate");
  }
  if (s.prime() != model.prime) throw std::invalid_argument("stream and model use different primes");
  const std::size_t n = coefficient_count(model);
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s.substream(i).residue(m);
  return out;
}

UnivariatePoly sample_poly(const RandomPolyModel& model, const DigitStream& s, long m) {
  if (model.nvars != 1) throw std::invalid_argument("univariate sample requested for a multivariate model");
  const Prime p(model.prime);
  std::vector<Integer> zeta = sample_coefficients(model, s, m);
  if (model.basis == PolyBasis::Monomial) return UnivariatePoly::truncated(p, std::move(zeta), m);
  return UnivariatePoly::truncated(p, mahler_to_monomial(zeta), m);
}

}  // namespace padicig
