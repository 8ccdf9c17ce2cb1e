#include "padicig/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicig/errors.hpp"

namespace padicig {

std::string to_string(RootStatus s) {
  switch (s) {
    case RootStatus::Exact:
      return "Exact";
    case RootStatus::LowerBound:
      return "LowerBound";
    case RootStatus::Undetermined:
      break;
  }
  return "Undetermined";
}

namespace {

long val_or_inf(const Integer& x, unsigned long p) { return x == 0 ? kInfinite : valuation(x, p); }

// Newton lift of a simple root s0 mod p of g to a root mod p^r.
Integer hensel_lift(const std::vector<Integer>& g, Integer s, unsigned long p, long r) {
  const std::vector<Integer> dg = derivative(g);
  long k = 1;
  while (k < r) {
    k = std::min(2 * k, r);
    const Integer q = ipow(p, k);
    const Integer num = evaluate_mod(g, s, q);
    const Integer den = evaluate_mod(dg, s, q);
    s = mod(s - num * inverse_mod(den, q), q);
  }
  return s;
}

struct Search {
  unsigned long p = 2;
  long precision = kInfinite;  // absolute precision of the chart polynomial's coefficients
  long depth_budget = 0;
  bool zero_ambiguous = false;  // a ball containing 0 cannot be certified
  bool unit_filter = false;     // top level: only residues 1..p-1
  std::string chart;
  const std::vector<Integer>* top = nullptr;

  std::vector<RootWitness> witnesses;
  long undetermined = 0;
  long consumed = 0;

  void run(std::vector<Integer> g, const Integer& center, long level, long w, long depth) {
    // Content removal: coefficients with valuation >= precision - w are
    // indistinguishable from zero.
    const long local = precision == kInfinite ? kInfinite : precision - w;
    long v = kInfinite;
    for (const auto& c : g) {
      if (c == 0) continue;
      const long cv = valuation(c, p);
      if (cv < local) v = std::min(v, cv);
    }
    if (v == kInfinite) {
      if (depth == 0) {
        throw IdenticallyZeroAtPrecision("chart polynomial vanishes modulo p^" +
                                         std::to_string(precision));
      }
      ++undetermined;
      return;
    }
    if (v > 0) {
      const Integer pv = ipow(p, v);
      for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pv.get_mpz_t());
      w += v;
    }
    consumed = std::max(consumed, w);
    const std::vector<Integer> dg = derivative(g);
    const Integer pz(p);
    const Integer scale = ipow(p, level);
    for (unsigned long a = (depth == 0 && unit_filter) ? 1 : 0; a < p; ++a) {
      const Integer ai(a);
      if (evaluate_mod(g, ai, pz) != 0) continue;
      const Integer c = center + scale * ai;
      if (evaluate_mod(dg, ai, pz) != 0) {
        if (zero_ambiguous && mod(c, scale * pz) == 0) {
          ++undetermined;
          continue;
        }
        add_witness(g, ai, center, level, w);
        continue;
      }
      if (depth + 1 > depth_budget) {
        ++undetermined;
        continue;
      }
      run(taylor_shift(g, ai, pz), c, level + 1, w, depth + 1);
    }
  }

  void add_witness(const std::vector<Integer>& g, const Integer& a, const Integer& center, long level,
                   long w) {
    // top(center + p^level s) = p^w g(s); lifting s to r digits gives
    // v(top) >= w + r against 2 v(top') = 2(w - level).
    const long r = std::max(1L, w - 2 * level + 1);
    const Integer s = hensel_lift(g, a, p, r);
    RootWitness wt;
    wt.chart = chart;
    wt.level = level + 1;
    wt.center = mod(center + ipow(p, level) * a, ipow(p, level + 1));
    wt.hensel_point = center + ipow(p, level) * s;
    wt.value_valuation = val_or_inf(evaluate(*top, wt.hensel_point), p);
    wt.slope_valuation = val_or_inf(evaluate(derivative(*top), wt.hensel_point), p);
    witnesses.push_back(std::move(wt));
  }
};

long default_depth(const RootOptions& opt, long degree) {
  return opt.depth_budget > 0 ? opt.depth_budget : 4 * (std::max(degree, 0L) + 1);
}

void append(RootReport& rep, Search& s, const std::vector<Integer>& poly) {
  rep.count += static_cast<long>(s.witnesses.size());
  rep.parts.push_back({s.chart, static_cast<long>(s.witnesses.size()), poly});
  rep.undetermined_branches += s.undetermined;
  rep.precision_consumed = std::max(rep.precision_consumed, s.consumed);
  for (auto& w : s.witnesses) rep.witnesses.push_back(std::move(w));
}

void finish(RootReport& rep) {
  if (rep.undetermined_branches == 0) {
    rep.status = RootStatus::Exact;
  } else {
    rep.status = rep.count == 0 ? RootStatus::Undetermined : RootStatus::LowerBound;
  }
}

bool exactly_zero(const std::vector<Integer>& c) {
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

// Search one chart. `poly` is already in chart coordinates.
void search_chart(RootReport& rep, const std::vector<Integer>& poly, const UnivariatePoly& f,
                  const std::string& chart, bool unit_filter, bool zero_ambiguous,
                  const RootOptions& opt) {
  Search s;
  s.p = f.p;
  s.precision = f.precision;
  s.depth_budget = default_depth(opt, f.degree());
  s.zero_ambiguous = zero_ambiguous;
  s.unit_filter = unit_filter;
  s.chart = chart;
  s.top = &poly;
  s.run(poly, Integer(0), 0, 0, 0);
  append(rep, s, poly);
}

std::vector<Integer> scale_variable(std::vector<Integer> g, const Integer& c) {
  Integer ck = 1;
  for (auto& x : g) {
    x *= ck;
    ck *= c;
  }
  return g;
}

std::vector<Integer> strip_zero_roots(std::vector<Integer> g) {
  std::size_t k = 0;
  while (k + 1 < g.size() && g[k] == 0) ++k;
  g.erase(g.begin(), g.begin() + static_cast<long>(k));
  return g;
}

void require_nonzero(const UnivariatePoly& f) {
  if (f.is_exact() && exactly_zero(f.coeffs)) {
    throw IdenticallyZeroAtPrecision("polynomial is identically zero");
  }
  if (!f.is_exact() && f.is_zero()) {
    throw IdenticallyZeroAtPrecision("polynomial vanishes modulo p^" + std::to_string(f.precision));
  }
}

std::vector<Integer> zp_chart(const UnivariatePoly& f) {
  return f.is_exact() ? squarefree_part(f.coeffs) : f.coeffs;
}

}  // namespace

std::vector<Integer> infinity_chart(const std::vector<Integer>& coeffs, unsigned long p) {
  return scale_variable(reversed(coeffs), Integer(p));
}

std::vector<Integer> annulus_chart(const std::vector<Integer>& coeffs, unsigned long p, long m) {
  return scale_variable(reversed(coeffs), ipow(p, m));
}

RootReport count_roots_zp(const UnivariatePoly& f, const RootOptions& opt) {
  require_nonzero(f);
  RootReport rep;
  rep.working_precision = f.precision;
  search_chart(rep, zp_chart(f), f, "zp", false, false, opt);
  finish(rep);
  return rep;
}

RootReport count_roots_p1(const UnivariatePoly& form, const RootOptions& opt) {
  require_nonzero(form);
  RootReport rep;
  rep.working_precision = form.precision;
  if (form.is_exact()) {
    search_chart(rep, squarefree_part(form.coeffs), form, "zp", false, false, opt);
    const auto inf = scale_variable(squarefree_part(reversed(form.coeffs)), Integer(form.p));
    search_chart(rep, inf, form, "p1-infinity", false, false, opt);
  } else {
    search_chart(rep, form.coeffs, form, "zp", false, false, opt);
    search_chart(rep, infinity_chart(form.coeffs, form.p), form, "p1-infinity", false, false, opt);
  }
  finish(rep);
  return rep;
}

RootReport count_roots_annulus(const UnivariatePoly& f, long m, const RootOptions& opt) {
  if (m < 1) throw std::invalid_argument("annulus index must be at least 1");
  require_nonzero(f);
  RootReport rep;
  rep.working_precision = f.precision;
  std::vector<Integer> rev = reversed(f.coeffs);
  if (f.is_exact()) rev = squarefree_part(strip_zero_roots(rev));
  search_chart(rep, scale_variable(rev, ipow(f.p, m)), f, "annulus", true, false, opt);
  finish(rep);
  return rep;
}

RootReport count_roots_qp(const UnivariatePoly& f, const RootOptions& opt) {
  require_nonzero(f);
  RootReport rep;
  rep.working_precision = f.precision;
  search_chart(rep, zp_chart(f), f, "zp", false, false, opt);
  std::vector<Integer> rev = reversed(f.coeffs);
  bool ambiguous = false;
  if (f.is_exact()) {
    rev = squarefree_part(strip_zero_roots(rev));
  } else {
    const Integer& lead = f.coeffs.back();
    ambiguous = lead == 0 || valuation(lead, f.p) >= f.precision;
  }
  search_chart(rep, scale_variable(rev, Integer(f.p)), f, "qp-outside", false, ambiguous, opt);
  finish(rep);
  return rep;
}

RootReport adaptive_count(const std::function<RootReport(long)>& count, long start, long cap) {
  for (long m = start; m <= cap; m *= 2) {
    try {
      RootReport r = count(m);
      if (r.status == RootStatus::Exact) return r;
    } catch (const IdenticallyZeroAtPrecision&) {
    }
  }
  throw CertificationCapExceeded("no exact count up to precision " + std::to_string(cap));
}

}  // namespace padicig
