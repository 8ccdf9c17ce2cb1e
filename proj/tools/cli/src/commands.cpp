#include "padicig_cli/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "padicig/count_vol.hpp"
#include "padicig/errors.hpp"
#include "padicig/roots.hpp"
#include "padicig/veronese.hpp"
#include "padicig_cli/serialize.hpp"

namespace padicig::cli {

namespace {

const std::string* find_option(const ExperimentConfig& c, const std::string& key) {
  auto it = c.options.find(key);
  return it == c.options.end() ? nullptr : &it->second;
}

std::string option(const ExperimentConfig& c, const std::string& key, const std::string& fallback) {
  const std::string* v = find_option(c, key);
  return v ? *v : fallback;
}

long long_option(const ExperimentConfig& c, const std::string& key, long fallback) {
  const std::string* v = find_option(c, key);
  if (!v) return fallback;
  std::size_t used = 0;
  const long x = std::stol(*v, &used);
  if (used != v->size()) throw std::invalid_argument("--" + key + " expects an integer, got '" + *v + "'");
  return x;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

long degree_of(const ExperimentConfig& c, long fallback) {
  return c.degrees.empty() ? fallback : c.degrees.front();
}

AlgebraicSet algebraic_set(const ExperimentConfig& c) {
  const std::vector<std::string> gens = split(option(c, "gens", ""), ';');
  if (gens.empty()) throw std::invalid_argument("--gens is required");
  long n = long_option(c, "n", -1);
  if (n < 0) {
    std::size_t vars = 0;
    for (const auto& g : gens) vars = std::max(vars, MultiPoly::parse(g).nvars());
    n = static_cast<long>(vars) - 1;
  }
  const long k = long_option(c, "dim", n - static_cast<long>(gens.size()));
  std::optional<long> degree;
  if (!c.degrees.empty()) degree = c.degrees.front();
  return AlgebraicSet::parse(n, gens, k, degree);
}

CountOptions count_options(const ExperimentConfig& c) {
  CountOptions o;
  o.lookahead = long_option(c, "lookahead", -1);
  return o;
}

Table level_table(const VolumeEstimate& v) {
  Table t{{"m", "n_lo", "n_hi", "n_certified", "unknown_classes", "fully_certified"}, {}};
  for (const auto& l : v.levels) {
    t.rows.push_back({std::to_string(l.m), l.n_lo.get_str(), l.n_hi.get_str(), l.n_certified.get_str(),
                      std::to_string(l.unknown_classes), l.fully_certified ? "true" : "false"});
  }
  return t;
}

Table histogram_table(const McReport& r) {
  Table t{{"count", "samples"}, {}};
  for (std::size_t i = 0; i < r.histogram.size(); ++i) {
    t.rows.push_back({std::to_string(i), std::to_string(r.histogram[i])});
  }
  return t;
}

}  // namespace

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& s : split(text, ',')) {
    Integer x;
    if (x.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    out.push_back(x);
  }
  return out;
}

PolyBasis parse_basis(const std::string& model) {
  if (model == "monomial") return PolyBasis::Monomial;
  if (model == "mahler") return PolyBasis::Mahler;
  throw std::invalid_argument("unknown model '" + model + "' (expected monomial or mahler)");
}

McOptions mc_options(const ExperimentConfig& c) {
  McOptions o;
  o.samples = c.samples;
  o.seed = c.seed;
  o.workers = c.workers;
  o.start_precision = c.start_precision;
  o.precision_cap = c.precision_cap;
  return o;
}

Report run_roots(const ExperimentConfig& c) {
  const std::vector<Integer> coeffs = parse_integers(option(c, "coeffs", ""));
  if (coeffs.empty()) throw std::invalid_argument("--coeffs is required");
  const Prime p(c.prime);
  const long precision = long_option(c, "precision", kInfinite);
  const UnivariatePoly f =
      precision == kInfinite ? UnivariatePoly::exact(p, coeffs) : UnivariatePoly::truncated(p, coeffs, precision);
  const std::string chart = option(c, "chart", "zp");
  RootReport r;
  if (chart == "zp") {
    r = count_roots_zp(f);
  } else if (chart == "p1") {
    r = count_roots_p1(f);
  } else if (chart == "qp") {
    r = count_roots_qp(f);
  } else if (chart.rfind("annulus:", 0) == 0) {
    r = count_roots_annulus(f, std::stol(chart.substr(8)));
  } else {
    throw std::invalid_argument("unknown chart '" + chart + "'");
  }
  Report rep{c, to_json(r), std::nullopt, r.status == RootStatus::Exact};
  return rep;
}

Report run_count(const ExperimentConfig& c) {
  const AlgebraicSet x = algebraic_set(c);
  const long m = long_option(c, "level", 1);
  const VolumeEstimate v = estimate_volume(x, c.prime, m, count_options(c));
  nlohmann::json j;
  j["count"] = to_json(v.levels.back());
  j["volume"] = to_json(v);
  j["generators"] = x.gen_strings();
  j["ambient"] = x.ambient();
  return {c, j, level_table(v), v.levels.back().fully_certified};
}

Report run_volume(const ExperimentConfig& c) {
  const AlgebraicSet x = algebraic_set(c);
  const long m = long_option(c, "level", 4);
  const VolumeEstimate v = estimate_volume(x, c.prime, m, count_options(c));
  nlohmann::json j;
  j["volume"] = to_json(v);
  j["generators"] = x.gen_strings();
  j["ambient"] = x.ambient();
  j["projective_volume"] = json_rational(volume_proj_space(c.prime, x.dim()));
  bool pass = v.known();
  if (x.degree()) {
    const DegreeBoundReport b = check_degree_bound(x, v);
    j["degree_bound"] = to_json(b);
    pass = pass && b.normalized_pass;
  }
  return {c, j, level_table(v), pass};
}

Report run_veronese(const ExperimentConfig& c) {
  const std::string kind = option(c, "kind", "standard");
  const std::string check = option(c, "check", "isometry");
  const long n = long_option(c, "n", 1);
  const long d = long_option(c, "d", degree_of(c, 2));
  const long pairs = long_option(c, "pairs", 1000);
  const unsigned long p = c.prime;
  if (kind != "standard" && kind != "mahler") throw std::invalid_argument("unknown kind '" + kind + "'");
  if (kind == "mahler" && n != 1) throw std::invalid_argument("the Mahler map is defined for n = 1");
  nlohmann::json j;
  bool pass = true;
  if (check == "isometry") {
    const IsometryReport r =
        kind == "standard" ? isometry_check_standard(p, n, d, pairs, c.seed) : isometry_check_mahler(p, d, pairs, c.seed);
    j["isometry"] = to_json(r);
    pass = r.pass();
  } else if (check == "jacobian") {
    if (kind != "mahler") throw std::invalid_argument("--check jacobian applies to --kind mahler");
    j["affine"] = nlohmann::json::array();
    for (long a = 0; a < pairs && a < 20; ++a) {
      const JacobianNormReport r = mahler_jacobian_norm(p, d, Integer(a));
      pass = pass && r.matches;
      j["affine"].push_back(to_json(r));
    }
    j["annulus"] = nlohmann::json::array();
    for (long m = 1; m <= 3; ++m) {
      for (unsigned long u = 1; u <= p; ++u) {
        if (u % p == 0) continue;
        const JacobianNormReport r = mahler_extended_jacobian_norm(p, d, Rational(Integer(u), ipow(p, m)));
        pass = pass && r.matches;
        j["annulus"].push_back(to_json(r));
      }
    }
  } else if (check == "arclength") {
    if (kind == "standard") {
      if (n != 1) throw std::invalid_argument("--check arclength applies to curves (n = 1)");
      const IsometryReport iso = isometry_check_standard(p, 1, d, pairs, c.seed);
      j["isometry"] = to_json(iso);
      j["arc_length"] = json_rational(volume_proj_space(p, 1));
      pass = iso.pass();
    } else {
      const Rational arc = mahler_affine_arc_length(p, d);
      j["arc_length"] = json_rational(arc);
      j["image_counts"] = nlohmann::json::array();
      for (long m = 1; m <= 3; ++m) {
        const Integer count = mahler_image_count(p, d, m);
        const Rational ratio = Rational(count) / ipow(p, static_cast<unsigned long>(m));
        j["image_counts"].push_back({{"m", m}, {"count", json_integer(count)}, {"ratio", json_rational(ratio)}});
        pass = pass && ratio == arc;
      }
      for (long m = 1; m <= 3; ++m) {
        j["annulus_arc_length"].push_back({{"m", m}, {"value", json_rational(mahler_annulus_arc_length(p, d, m))}});
      }
    }
  } else {
    throw std::invalid_argument("unknown check '" + check + "'");
  }
  return {c, j, std::nullopt, pass};
}

Report run_igf(const ExperimentConfig& c) {
  const std::string experiment = option(c, "experiment", "expected-zeros");
  const McOptions o = mc_options(c);
  const unsigned long p = c.prime;
  const long d = degree_of(c, 2);
  const std::string model = option(c, "model", "monomial");
  if (experiment == "linear-lemma") {
    const long n = long_option(c, "n", 2);
    const long a = long_option(c, "dim-x", 1);
    const long r = long_option(c, "radius", 1);
    if (a < 0 || a > n) throw std::invalid_argument("--dim-x must lie in [0, n]");
    std::vector<long> ax, ay;
    for (long i = 0; i <= a; ++i) ax.push_back(i);
    for (long i = 0; i <= n - a; ++i) ay.push_back(i);
    std::vector<Integer> e0(static_cast<std::size_t>(n + 1), Integer(0));
    e0[0] = 1;
    const ProjPoint center = ProjPoint(PadicVector::exact(Prime(p), e0));
    const LinearBall x{LinearSubspace::coordinate(n, ax, p), center, r};
    const LinearBall y{LinearSubspace::coordinate(n, ay, p), center, r};
    const McReport rep = mc_linear_lemma(x, y, LinearSubspace::whole(n, p), o);
    return {c, to_json(rep), histogram_table(rep), rep.pass};
  }
  if (experiment == "curve") {
    Curve cv;
    cv.p = p;
    cv.d = d;
    if (parse_basis(model) == PolyBasis::Monomial) {
      cv.kind = d == 1 ? CurveKind::Line : CurveKind::StandardVeronese;
    } else {
      const Region reg = Region::parse(option(c, "region", "zp"));
      if (reg.kind == RegionKind::Zp) {
        cv.kind = CurveKind::MahlerAffine;
      } else if (reg.kind == RegionKind::Annulus) {
        cv.kind = CurveKind::MahlerAnnulus;
        cv.m = reg.m;
      } else {
        throw std::invalid_argument("Mahler curves are sampled over zp or annulus:m");
      }
    }
    std::optional<std::vector<Integer>> twist;
    if (const std::string* t = find_option(c, "twist")) twist = parse_integers(*t);
    const McReport rep = mc_igf_curve(cv, o, twist);
    return {c, to_json(rep), histogram_table(rep), rep.pass && rep.max_count <= d};
  }
  if (experiment == "expected-zeros") {
    const RandomPolyModel m{parse_basis(model), d, 1, p};
    const McReport rep = mc_expected_zeros(m, Region::parse(option(c, "region", "p1")), o);
    return {c, to_json(rep), histogram_table(rep), rep.pass};
  }
  if (experiment == "density") {
    const RandomPolyModel m{parse_basis(model), d, 1, p};
    const DensityReport rep = density_uniformity_test(m, o);
    const bool expect_uniform = m.basis == PolyBasis::Monomial || d < static_cast<long>(p);
    nlohmann::json j = to_json(rep);
    j["expected_uniform"] = expect_uniform;
    Table t{{"class", "roots"}, {}};
    for (std::size_t i = 0; i < rep.counts.size(); ++i) {
      t.rows.push_back({i + 1 == rep.counts.size() ? "[1:0]" : "[" + std::to_string(i) + ":1]",
                        std::to_string(rep.counts[i])});
    }
    return {c, j, t, rep.rejects_uniform != expect_uniform};
  }
  throw std::invalid_argument("unknown experiment '" + experiment + "'");
}

}  // namespace padicig::cli
