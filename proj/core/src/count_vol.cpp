#include "padicig/count_vol.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "padicig/errors.hpp"
#include "padicig/residue.hpp"

namespace padicig {

AlgebraicSet::AlgebraicSet(long n, std::vector<MultiPoly> gens, long k, std::optional<long> degree)
    : n_(n), k_(k), degree_(degree) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (k < 0 || k >= n) throw DimensionMismatch("claimed dimension must lie in [0, n)");
  if (static_cast<long>(gens.size()) != n - k) {
    throw DimensionMismatch("expected " + std::to_string(n - k) +
                            " generators for a complete intersection of dimension " +
                            std::to_string(k) + ", got " + std::to_string(gens.size()));
  }
  for (auto& g : gens) {
    if (g.nvars() > static_cast<std::size_t>(n + 1)) {
      throw std::invalid_argument("generator uses more than n+1 variables");
    }
    g = g.widened(static_cast<std::size_t>(n + 1));
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!g.is_homogeneous()) throw std::invalid_argument("generator " + g.to_string() + " is not homogeneous");
  }
  gens_ = std::move(gens);
}

AlgebraicSet AlgebraicSet::parse(long n, const std::vector<std::string>& gens, long k,
                                 std::optional<long> degree) {
  std::vector<MultiPoly> g;
  for (const auto& s : gens) g.push_back(MultiPoly::parse(s, static_cast<std::size_t>(n + 1)));
  return AlgebraicSet(n, std::move(g), k, degree);
}

std::vector<std::string> AlgebraicSet::gen_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

namespace {

using Coords = std::vector<std::uint64_t>;

enum class Decision { Certified, Empty, Split };
enum class Tri { Meets, Empty, Unknown };

std::uint64_t det_mod(const ModRing& ring, std::vector<std::uint64_t> a, std::size_t r) {
  if (r == 1) return a[0];
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < r; ++c) {
    std::vector<std::uint64_t> minor;
    minor.reserve((r - 1) * (r - 1));
    for (std::size_t i = 1; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (j != c) minor.push_back(a[i * r + j]);
      }
    }
    const std::uint64_t t = ring.mul(a[c], det_mod(ring, std::move(minor), r - 1));
    acc = (c % 2 == 0) ? ring.add(acc, t) : ring.sub(acc, t);
  }
  return acc;
}

class Engine {
 public:
  Engine(const AlgebraicSet& x, unsigned long p, const CountOptions& opt)
      : x_(x), p_(p), n_(x.ambient()), k_(x.dim()), r_(n_ - k_), opt_(opt) {
    for (const auto& g : x.gens()) {
      gens_.push_back(g.without_p_content(p));
      std::vector<MultiPoly> row;
      for (long j = 0; j <= n_; ++j) row.push_back(gens_.back().derivative(static_cast<std::size_t>(j)));
      partials_.push_back(std::move(row));
    }
  }

  long k() const { return k_; }
  std::uint64_t visited() const { return visited_; }

  void tick() {
    if (++visited_ > opt_.budget) {
      throw BudgetExceeded("more than " + std::to_string(opt_.budget) + " classes visited");
    }
  }

  static std::size_t unit_index(const Coords& c, unsigned long p) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] % p != 0) return i;
    }
    throw std::logic_error("class without a unit coordinate");
  }

  bool vanishes(const Coords& c, long level) const {
    const ModRing ring(p_, level);
    for (const auto& g : gens_) {
      if (g.evaluate(ring, c) != 0) return false;
    }
    return true;
  }

  // min valuation of the r x r minors of the chart Jacobian, capped at level.
  long jacobian_valuation(const Coords& c, long level) const {
    const ModRing ring(p_, level);
    const std::size_t i0 = unit_index(c, p_);
    std::vector<std::size_t> cols;
    for (long j = 0; j <= n_; ++j) {
      if (static_cast<std::size_t>(j) != i0) cols.push_back(static_cast<std::size_t>(j));
    }
    std::vector<std::vector<std::uint64_t>> jac(static_cast<std::size_t>(r_));
    for (long a = 0; a < r_; ++a) {
      for (std::size_t j : cols) jac[a].push_back(partials_[a][j].evaluate(ring, c));
    }
    long best = level;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r_));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
      if (best == 0) return;
      if (depth == pick.size()) {
        std::vector<std::uint64_t> m;
        for (long a = 0; a < r_; ++a) {
          for (std::size_t j : pick) m.push_back(jac[a][j]);
        }
        best = std::min(best, ring.valuation(det_mod(ring, std::move(m), pick.size())));
        return;
      }
      for (std::size_t j = start; j < cols.size(); ++j) {
        pick[depth] = j;
        rec(depth + 1, j + 1);
      }
    };
    rec(0, 0);
    return best;
  }

  // Visit c + p^level * delta for delta in [0, p^width)^n away from the unit index.
  template <class F>
  bool any_lift(const Coords& c, long level, long width, F&& f) {
    const std::size_t i0 = unit_index(c, p_);
    const std::uint64_t step = upow(p_, level);
    const std::uint64_t range = upow(p_, width);
    std::vector<std::uint64_t> delta(c.size(), 0);
    Coords child = c;
    while (true) {
      tick();
      for (std::size_t j = 0; j < c.size(); ++j) child[j] = c[j] + step * delta[j];
      if (f(child)) return true;
      std::size_t j = c.size();
      while (j-- > 0) {
        if (j == i0) continue;
        if (++delta[j] < range) break;
        delta[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) return false;
    }
  }

  std::vector<Coords> children(const Coords& c, long level) {
    std::vector<Coords> out;
    any_lift(c, level, 1, [&](const Coords& child) {
      if (vanishes(child, level + 1)) out.push_back(child);
      return false;
    });
    return out;
  }

  // Depth-first over surviving descendants down to `target`.
  bool has_vanishing_lift(const Coords& c, long level, long target) {
    if (level == target) return true;
    for (const auto& child : children(c, level)) {
      if (has_vanishing_lift(child, level + 1, target)) return true;
    }
    return false;
  }

  // A surviving class at `level`: certify, eliminate or split.
  std::pair<Decision, long> decide(const Coords& c, long level) {
    const long e = jacobian_valuation(c, level);
    if (2 * e >= level) return {Decision::Split, e};
    // With 2e < level the class holds a point of X iff some lift to level
    // level + e still vanishes there.
    const bool hit = e == 0 || has_vanishing_lift(c, level, level + e);
    return {hit ? Decision::Certified : Decision::Empty, e};
  }

  // Breadth-first, so the shallowest certified descendant settles the class.
  Tri explore(const Coords& c, long level, long limit) {
    std::vector<Coords> layer{c};
    for (long l = level; l <= limit && !layer.empty(); ++l) {
      std::vector<Coords> next;
      for (const auto& x : layer) {
        const Decision d = decide(x, l).first;
        if (d == Decision::Certified) return Tri::Meets;
        if (d == Decision::Split && l < limit) {
          for (auto& child : children(x, l)) next.push_back(std::move(child));
        } else if (d == Decision::Split) {
          next.push_back(x);
        }
      }
      if (l == limit) return next.empty() ? Tri::Empty : Tri::Unknown;
      layer = std::move(next);
    }
    return Tri::Empty;
  }

  std::vector<Coords> level_one() {
    std::vector<Coords> out;
    for_each_proj(p_, n_, 1, [&](const ResidueProjPoint& pt) {
      tick();
      if (vanishes(pt.coords, 1)) out.push_back(pt.coords);
    }, opt_.budget);
    return out;
  }

 private:
  const AlgebraicSet& x_;
  unsigned long p_;
  long n_, k_, r_;
  CountOptions opt_;
  std::vector<MultiPoly> gens_;
  std::vector<std::vector<MultiPoly>> partials_;
  std::uint64_t visited_ = 0;
};

}  // namespace

CountResult count_points_mod(const AlgebraicSet& x, unsigned long p, long m, const CountOptions& opt) {
  if (m < 1) throw std::invalid_argument("level must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const long lookahead = opt.lookahead < 0 ? m + 1 : opt.lookahead;
  if (!ModRing::fits(p, 3 * (m + lookahead) / 2 + 1)) throw BudgetExceeded("p^level exceeds 63 bits");
  Engine eng(x, p, opt);
  CountResult res;
  res.p = p;
  res.m = m;
  std::vector<Coords> frontier = eng.level_one();
  long open = 0;
  for (long level = 1; level <= m; ++level) {
    std::vector<Coords> next;
    for (const auto& c : frontier) {
      const auto [d, e] = eng.decide(c, level);
      if (d == Decision::Empty) continue;
      if (d == Decision::Certified) {
        res.certified.push_back({ResidueProjPoint{p, level, c}, e});
        res.n_certified += ipow(p, static_cast<unsigned long>((m - level) * x.dim()));
        continue;
      }
      if (level < m) {
        for (auto& child : eng.children(c, level)) next.push_back(std::move(child));
        continue;
      }
      ++open;
      switch (eng.explore(c, level, level + lookahead)) {
        case Tri::Meets:
          ++res.lookahead_met;
          break;
        case Tri::Unknown:
          ++res.unknown_classes;
          break;
        case Tri::Empty:
          break;
      }
    }
    frontier = std::move(next);
  }
  res.fully_certified = open == 0;
  res.n_lo = res.n_certified + res.lookahead_met;
  res.n_hi = res.n_lo + res.unknown_classes;
  res.classes_visited = eng.visited();
  if (opt.check_tower) {
    const long want = static_cast<long>(ipow(p, static_cast<unsigned long>(x.dim())).get_si());
    for (std::size_t i = 0; i < res.certified.size() && i < opt.tower_check_limit; ++i) {
      const long got = certified_children(x, res.certified[i]);
      if (got != want) {
        throw DimensionMismatch("certified class " + to_string(res.certified[i].cls) + " has " +
                                std::to_string(got) + " certified children, expected " +
                                std::to_string(want));
      }
    }
  }
  return res;
}

long certified_children(const AlgebraicSet& x, const CertifiedClass& c) {
  CountOptions opt;
  Engine eng(x, c.cls.p, opt);
  long n = 0;
  for (const auto& child : eng.children(c.cls.coords, c.cls.m)) {
    if (eng.decide(child, c.cls.m + 1).first == Decision::Certified) ++n;
  }
  return n;
}

Rational VolumeEstimate::value() const {
  if (!known()) throw InsufficientPrecision("volume did not stabilize; only an interval is known");
  return value_lo;
}

VolumeEstimate estimate_volume(const AlgebraicSet& x, unsigned long p, long max_level,
                               const CountOptions& opt) {
  if (max_level < 1) throw std::invalid_argument("max level must be at least 1");
  VolumeEstimate est;
  est.p = p;
  est.k = x.dim();
  est.max_level = max_level;
  for (long m = 1; m <= max_level; ++m) est.levels.push_back(count_points_mod(x, p, m, opt));
  const long k = x.dim();
  for (long m0 = 1; m0 <= max_level && !est.stabilized; ++m0) {
    const CountResult& base = est.levels[m0 - 1];
    if (!base.fully_certified) continue;
    bool ok = true;
    for (long m = m0; m <= max_level; ++m) {
      const CountResult& r = est.levels[m - 1];
      const Integer want = base.n_lo * ipow(p, static_cast<unsigned long>((m - m0) * k));
      if (r.n_lo != want || r.n_hi != want) ok = false;
    }
    if (ok) {
      est.stabilized = true;
      est.m0 = m0;
      est.value_lo = est.value_hi = Rational(base.n_lo) / Rational(ipow(p, static_cast<unsigned long>(m0 * k)));
      est.value_lo.canonicalize();
      est.value_hi.canonicalize();
    }
  }
  if (!est.stabilized) {
    const Integer pk = ipow(p, static_cast<unsigned long>(k));
    for (long m0 = 1; m0 + 2 <= max_level && !est.extrapolated; ++m0) {
      bool ok = true;
      for (long m = m0; m <= max_level; ++m) ok = ok && est.levels[m - 1].n_lo == est.levels[m - 1].n_hi;
      if (!ok) continue;
      const Integer defect = est.levels[m0].n_lo - pk * est.levels[m0 - 1].n_lo;
      for (long m = m0 + 1; m < max_level; ++m) ok = ok && est.levels[m].n_lo - pk * est.levels[m - 1].n_lo == defect;
      if (!ok || k == 0) continue;
      est.extrapolated = true;
      est.m0 = m0;
      est.defect = defect;
      Rational v = (Rational(est.levels[m0 - 1].n_lo) + Rational(defect) / Rational(pk - 1)) /
                   Rational(ipow(p, static_cast<unsigned long>(m0 * k)));
      v.canonicalize();
      est.value_lo = est.value_hi = v;
    }
  }
  if (!est.known()) {
    const CountResult& last = est.levels.back();
    const Rational scale(ipow(p, static_cast<unsigned long>(max_level * k)));
    est.value_lo = Rational(last.n_lo) / scale;
    est.value_hi = Rational(last.n_hi) / scale;
    est.value_lo.canonicalize();
    est.value_hi.canonicalize();
  }
  return est;
}

DegreeBoundReport check_degree_bound(const AlgebraicSet& x, const VolumeEstimate& est) {
  if (!x.degree()) throw std::invalid_argument("degree bound needs a claimed degree");
  DegreeBoundReport r;
  r.degree = *x.degree();
  r.raw = est.value_hi;
  r.normalized = est.value_hi / volume_proj_space(est.p, est.k);
  r.normalized.canonicalize();
  r.raw_pass = r.raw <= r.degree;
  r.normalized_pass = r.normalized <= r.degree;
  r.slack = Rational(r.degree) - r.normalized;
  r.slack.canonicalize();
  return r;
}

Rational weil_special_case(const AlgebraicSet& x, unsigned long p) {
  CountOptions opt;
  Engine eng(x, p, opt);
  const auto pts = eng.level_one();
  for (const auto& c : pts) {
    if (eng.jacobian_valuation(c, 1) != 0) {
      throw NotSmoothModP("singular point " + to_string(ResidueProjPoint{p, 1, c}) + " mod p");
    }
  }
  Rational v(Integer(static_cast<unsigned long>(pts.size())), ipow(p, static_cast<unsigned long>(x.dim())));
  v.canonicalize();
  return v;
}

}  // namespace padicig
