#include "padicig/zp_arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicig/errors.hpp"

namespace padicig {

namespace {

void require_same_prime(Prime a, Prime b) {
  if (!(a == b)) throw std::invalid_argument("mixed primes in p-adic arithmetic");
}

long add_saturating(long a, long b) {
  if (a == kInfinite || b == kInfinite) return kInfinite;
  return a + b;
}

}  // namespace

Rational PadicNorm::value(unsigned long p) const {
  switch (kind) {
    case Kind::Zero:
      return Rational(0);
    case Kind::Exact:
      return prime_power(p, exponent);
    case Kind::AtMost:
      break;
  }
  throw InsufficientPrecision("norm is only bounded by p^" + std::to_string(exponent));
}

PadicNorm max_norm(const PadicNorm& a, const PadicNorm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_exact() && b.is_exact()) return PadicNorm::exact(std::max(a.exponent, b.exponent));
  if (a.is_bound() && b.is_bound()) return PadicNorm::at_most(std::max(a.exponent, b.exponent));
  const PadicNorm& ex = a.is_exact() ? a : b;
  const PadicNorm& bd = a.is_exact() ? b : a;
  if (ex.exponent >= bd.exponent) return ex;
  return bd;
}

std::string to_string(const PadicNorm& n, unsigned long p) {
  switch (n.kind) {
    case PadicNorm::Kind::Zero:
      return "0";
    case PadicNorm::Kind::Exact:
      return to_string(prime_power(p, n.exponent));
    case PadicNorm::Kind::AtMost:
      break;
  }
  return "<=" + to_string(prime_power(p, n.exponent));
}

// ---------------------------------------------------------------------------
// PadicScalar

PadicScalar PadicScalar::normalize(Prime p, Integer value, long shift, long abs_precision) {
  // value * p^shift, known modulo p^abs_precision.
  if (abs_precision != kInfinite) {
    const long digits = abs_precision - shift;
    if (digits <= 0) return zero_at(p, abs_precision);
    value = mod(value, ipow(p, static_cast<unsigned long>(digits)));
  }
  if (value == 0) {
    return abs_precision == kInfinite ? PadicScalar(p, kInfinite, Integer(0), kInfinite)
                                      : zero_at(p, abs_precision);
  }
  const long w = padicig::valuation(value, p);
  if (w > 0) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), ipow(p, w).get_mpz_t());
  return PadicScalar(p, shift + w, std::move(value), abs_precision);
}

PadicScalar PadicScalar::exact(Prime p, const Integer& value) {
  return normalize(p, value, 0, kInfinite);
}

PadicScalar PadicScalar::exact_power(Prime p, long v, const Integer& unit) {
  if (unit == 0 || padicig::valuation(unit, p) != 0) {
    throw std::invalid_argument("exact_power needs a p-adic unit");
  }
  return PadicScalar(p, v, unit, kInfinite);
}

PadicScalar PadicScalar::from_residue(Prime p, const Integer& value, long abs_precision) {
  if (abs_precision < 0 || abs_precision == kInfinite) {
    throw std::invalid_argument("from_residue needs a finite non-negative precision");
  }
  return normalize(p, value, 0, abs_precision);
}

PadicScalar PadicScalar::zero_at(Prime p, long abs_precision) {
  return PadicScalar(p, kInfinite, Integer(0), abs_precision);
}

long PadicScalar::relative_precision() const {
  if (is_zero() || is_exact()) return kInfinite;
  return abs_precision_ - valuation_;
}

PadicNorm PadicScalar::norm() const {
  if (!is_zero()) return PadicNorm::exact(-valuation_);
  if (is_exact()) return PadicNorm::zero();
  return PadicNorm::at_most(-abs_precision_);
}

Integer PadicScalar::residue(long m) const {
  if (m > abs_precision_) {
    throw PrecisionTooLow("residue mod p^" + std::to_string(m) + " requested from precision " +
                          std::to_string(abs_precision_));
  }
  if (is_zero() || valuation_ >= m) return Integer(0);
  if (valuation_ < 0) throw std::domain_error("residue of a non-integral p-adic number");
  const Integer modulus = ipow(p_, static_cast<unsigned long>(m));
  return mod(unit_ * ipow(p_, static_cast<unsigned long>(valuation_)), modulus);
}

Integer PadicScalar::to_integer() const {
  if (!is_exact()) throw InsufficientPrecision("to_integer on a truncated value");
  if (is_zero()) return Integer(0);
  if (valuation_ < 0) throw std::domain_error("to_integer of a non-integral value");
  return unit_ * ipow(p_, static_cast<unsigned long>(valuation_));
}

PadicScalar PadicScalar::truncated(long abs_precision) const {
  if (abs_precision >= abs_precision_) return *this;
  if (is_zero() || valuation_ >= abs_precision) return zero_at(p_, abs_precision);
  const long r = abs_precision - valuation_;
  return PadicScalar(p_, valuation_, mod(unit_, ipow(p_, static_cast<unsigned long>(r))),
                     abs_precision);
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  if (is_exact()) return PadicScalar(p_, valuation_, -unit_, kInfinite);
  const long r = abs_precision_ - valuation_;
  return PadicScalar(p_, valuation_, mod(-unit_, ipow(p_, static_cast<unsigned long>(r))),
                     abs_precision_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a.p_, b.p_);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const Prime p = a.p_;
  const long abs = std::min(a.abs_precision_, b.abs_precision_);
  const long vmin = std::min(a.valuation_, b.valuation_);
  if (vmin != kInfinite && abs != kInfinite && vmin >= abs) return PadicScalar::zero_at(p, abs);
  if (vmin == kInfinite) return PadicScalar::zero_at(p, abs);
  Integer s = 0;
  if (!a.is_zero()) s += a.unit_ * ipow(p, static_cast<unsigned long>(a.valuation_ - vmin));
  if (!b.is_zero()) s += b.unit_ * ipow(p, static_cast<unsigned long>(b.valuation_ - vmin));
  return PadicScalar::normalize(p, std::move(s), vmin, abs);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a.p_, b.p_);
  const Prime p = a.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicScalar::exact(p, 0);
  if (a.is_zero() || b.is_zero()) {
    // x = 0 mod p^A and y = p^w * unit: the product is 0 mod p^{A + w}.
    long bound;
    if (a.is_zero() && b.is_zero()) {
      bound = add_saturating(a.abs_precision_, b.abs_precision_);
    } else {
      const PadicScalar& z = a.is_zero() ? a : b;
      const PadicScalar& y = a.is_zero() ? b : a;
      bound = z.abs_precision_ + y.valuation_;
    }
    return PadicScalar::zero_at(p, bound);
  }
  const long v = a.valuation_ + b.valuation_;
  const long r = std::min(a.relative_precision(), b.relative_precision());
  Integer u = a.unit_ * b.unit_;
  if (r == kInfinite) return PadicScalar(p, v, std::move(u), kInfinite);
  u = mod(u, ipow(p, static_cast<unsigned long>(r)));
  return PadicScalar(p, v, std::move(u), v + r);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a.p_, b.p_);
  const Prime p = a.p_;
  if (b.is_exact_zero()) throw std::domain_error("division by exact zero");
  if (b.is_zero()) throw InsufficientPrecision("division by a value that is zero at precision");
  if (a.is_exact_zero()) return a;
  if (a.is_zero()) return PadicScalar::zero_at(p, a.abs_precision_ - b.valuation_);
  const long v = a.valuation_ - b.valuation_;
  const long r = std::min(a.relative_precision(), b.relative_precision());
  if (r == kInfinite) {
    if (b.unit_ == 1) return PadicScalar(p, v, a.unit_, kInfinite);
    if (b.unit_ == -1) return PadicScalar(p, v, -a.unit_, kInfinite);
    throw std::domain_error("exact division by a non-trivial unit");
  }
  const Integer modulus = ipow(p, static_cast<unsigned long>(r));
  Integer u = mod(a.unit_ * inverse_mod(b.unit_, modulus), modulus);
  return PadicScalar(p, v, std::move(u), v + r);
}

bool operator==(const PadicScalar& a, const PadicScalar& b) {
  return a.p_ == b.p_ && a.valuation_ == b.valuation_ && a.abs_precision_ == b.abs_precision_ &&
         a.unit_ == b.unit_;
}

std::string PadicScalar::to_string() const {
  const std::string ps = std::to_string(p_.value());
  if (is_zero()) return is_exact() ? "0" : "O(" + ps + "^" + std::to_string(abs_precision_) + ")";
  std::string s = unit_.get_str() + "*" + ps + "^" + std::to_string(valuation_);
  if (!is_exact()) s += " + O(" + ps + "^" + std::to_string(abs_precision_) + ")";
  return s;
}

// ---------------------------------------------------------------------------
// PadicVector

PadicVector::PadicVector(std::vector<PadicScalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty p-adic vector");
  for (const auto& e : entries_) require_same_prime(e.prime(), entries_.front().prime());
}

PadicVector PadicVector::exact(Prime p, std::span<const Integer> values) {
  std::vector<PadicScalar> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back(PadicScalar::exact(p, v));
  return PadicVector(std::move(e));
}

PadicVector PadicVector::exact(Prime p, std::initializer_list<long> values) {
  std::vector<Integer> v(values.begin(), values.end());
  return exact(p, std::span<const Integer>(v));
}

PadicVector PadicVector::from_residues(Prime p, std::span<const Integer> values,
                                       long abs_precision) {
  std::vector<PadicScalar> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back(PadicScalar::from_residue(p, v, abs_precision));
  return PadicVector(std::move(e));
}

PadicNorm PadicVector::norm() const {
  PadicNorm n = PadicNorm::zero();
  for (const auto& e : entries_) n = max_norm(n, e.norm());
  return n;
}

long PadicVector::absolute_precision() const {
  long a = kInfinite;
  for (const auto& e : entries_) a = std::min(a, e.absolute_precision());
  return a;
}

bool PadicVector::on_sphere() const {
  const PadicNorm n = norm();
  return n.is_exact() && n.exponent == 0;
}

long PadicVector::min_valuation() const {
  long v = kInfinite;
  for (const auto& e : entries_) v = std::min(v, e.valuation());
  return v;
}

PadicVector PadicVector::sphere_normalized() const {
  const long v = min_valuation();
  if (v == kInfinite) throw InsufficientPrecision("cannot normalize a vector that vanishes");
  if (v == 0) return *this;
  return scaled(PadicScalar::exact_power(prime(), -v, Integer(1)));
}

PadicVector PadicVector::scaled(const PadicScalar& c) const {
  std::vector<PadicScalar> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x * c);
  return PadicVector(std::move(e));
}

PadicVector operator-(const PadicVector& a, const PadicVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<PadicScalar> e;
  e.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e.push_back(a[i] - b[i]);
  return PadicVector(std::move(e));
}

// ---------------------------------------------------------------------------
// PadicMatrix

PadicMatrix::PadicMatrix(std::size_t rows, std::size_t cols, std::vector<PadicScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix shape does not match its entries");
  }
  for (const auto& e : entries_) require_same_prime(e.prime(), entries_.front().prime());
}

PadicMatrix PadicMatrix::exact(Prime p, std::size_t rows, std::size_t cols,
                               std::span<const Integer> values) {
  std::vector<PadicScalar> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back(PadicScalar::exact(p, v));
  return PadicMatrix(rows, cols, std::move(e));
}

PadicMatrix PadicMatrix::exact(Prime p, std::size_t rows, std::size_t cols,
                               std::initializer_list<long> values) {
  std::vector<Integer> v(values.begin(), values.end());
  return exact(p, rows, cols, std::span<const Integer>(v));
}

PadicMatrix PadicMatrix::from_residues(Prime p, std::size_t rows, std::size_t cols,
                                       std::span<const Integer> values, long abs_precision) {
  std::vector<PadicScalar> e;
  e.reserve(values.size());
  for (const auto& v : values) e.push_back(PadicScalar::from_residue(p, v, abs_precision));
  return PadicMatrix(rows, cols, std::move(e));
}

PadicMatrix PadicMatrix::identity(Prime p, std::size_t size) {
  std::vector<PadicScalar> e;
  e.reserve(size * size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) e.push_back(PadicScalar::exact(p, r == c ? 1 : 0));
  }
  return PadicMatrix(size, size, std::move(e));
}

PadicVector PadicMatrix::row(std::size_t r) const {
  return PadicVector(std::vector<PadicScalar>(entries_.begin() + r * cols_,
                                              entries_.begin() + (r + 1) * cols_));
}

PadicVector PadicMatrix::apply(const PadicVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<PadicScalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    PadicScalar acc = PadicScalar::exact(prime(), 0);
    for (std::size_t c = 0; c < cols_; ++c) acc = acc + (*this)(r, c) * v[c];
    out.push_back(std::move(acc));
  }
  return PadicVector(std::move(out));
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  std::vector<PadicScalar> out;
  out.reserve(a.rows_ * b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      PadicScalar acc = PadicScalar::exact(a.prime(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(r, k) * b(k, c);
      out.push_back(std::move(acc));
    }
  }
  return PadicMatrix(a.rows_, b.cols_, std::move(out));
}

PadicMatrix PadicMatrix::column_subset(std::span<const std::size_t> cols) const {
  std::vector<PadicScalar> out;
  out.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : cols) out.push_back((*this)(r, c));
  }
  return PadicMatrix(rows_, cols.size(), std::move(out));
}

namespace {

Rational to_rational(const PadicScalar& x) {
  if (x.is_zero()) return 0;
  Rational r(x.unit());
  r *= prime_power(x.prime(), x.valuation());
  return r;
}

// Gaussian elimination over Q; entries have p-power denominators only.
PadicScalar exact_determinant(const PadicMatrix& m) {
  const std::size_t n = m.rows();
  const Prime p = m.prime();
  std::vector<Rational> a;
  for (const auto& x : m.entries()) a.push_back(to_rational(x));
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * n + c]; };
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) return PadicScalar::exact(p, 0);
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
      det = -det;
    }
    det *= at(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (at(r, k) == 0) continue;
      const Rational f = at(r, k) / at(k, k);
      for (std::size_t c = k; c < n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  det.canonicalize();
  const long v = padicig::valuation(det, p);
  Rational unit = det / prime_power(p, v);
  unit.canonicalize();
  if (unit.get_den() != 1) throw DomainViolation("determinant has a denominator prime to p");
  return PadicScalar::exact_power(p, v, unit.get_num());
}

}  // namespace

PadicScalar determinant(const PadicMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Prime p = m.prime();
  bool all_exact = true;
  for (const auto& x : m.entries()) all_exact = all_exact && x.is_exact();
  if (all_exact) return exact_determinant(m);
  std::vector<PadicScalar> a = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> PadicScalar& { return a[r * n + c]; };
  PadicScalar det = PadicScalar::exact(p, 1);
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot on the entry of least valuation in the trailing block.
    std::size_t pr = k, pc = k;
    long best = kInfinite;
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (at(r, c).valuation() < best) {
          best = at(r, c).valuation();
          pr = r;
          pc = c;
        }
      }
    }
    if (best == kInfinite) {
      // Every remaining entry vanishes; the determinant is zero, possibly
      // only at precision.
      long bound = kInfinite;
      for (std::size_t r = k; r < n; ++r) {
        for (std::size_t c = k; c < n; ++c) bound = std::min(bound, at(r, c).absolute_precision());
      }
      if (bound == kInfinite) return PadicScalar::exact(p, 0);
      // det = det_so_far * det(trailing block); the block's determinant lies
      // in p^{bound * (n - k)} Z_p.
      const long block = bound * static_cast<long>(n - k);
      return PadicScalar::zero_at(p, det.valuation() + block);
    }
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pr, c), at(k, c));
      det = -det;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pc), at(r, k));
      det = -det;
    }
    const PadicScalar pivot = at(k, k);
    det = det * pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (at(r, k).is_exact_zero()) continue;
      const PadicScalar factor = at(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) at(r, c) = at(r, c) - factor * at(k, c);
    }
  }
  return det;
}

long mat_det_valuation(const PadicMatrix& m) {
  const PadicScalar d = determinant(m);
  if (d.is_exact_zero()) return kInfinite;
  if (d.is_zero()) {
    throw InsufficientPrecision("determinant vanishes modulo p^" +
                                std::to_string(d.absolute_precision()));
  }
  return d.valuation();
}

PadicNorm wedge_norm_bound(const PadicVector& a, const PadicVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("wedge of vectors of different sizes");
  require_same_prime(a.prime(), b.prime());
  PadicNorm n = PadicNorm::zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      n = max_norm(n, (a[i] * b[j] - a[j] * b[i]).norm());
    }
  }
  return n;
}

PadicNorm wedge_norm(const PadicVector& a, const PadicVector& b) {
  const PadicNorm n = wedge_norm_bound(a, b);
  if (n.is_bound()) {
    throw InsufficientPrecision("all 2x2 minors vanish modulo p^" + std::to_string(-n.exponent));
  }
  return n;
}

}  // namespace padicig
