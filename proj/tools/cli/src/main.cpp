#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <iostream>

#include "padicig/errors.hpp"
#include "padicig_cli/commands.hpp"
#include "padicig_cli/reproduce.hpp"

namespace {

using padicig::cli::ExperimentConfig;

struct Flags {
  std::string coeffs, chart = "zp", gens, kind = "standard", check = "isometry", experiment = "expected-zeros",
                      model = "monomial", region, twist;
  long precision = -1, n = -1, dim = -1, level = -1, lookahead = -1, d = -1, pairs = 1000, radius = 1,
       dim_x = 1;
  long degree = -1;
};

void set(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (!value.empty()) c.options[key] = value;
}

void set(ExperimentConfig& c, const std::string& key, long value) {
  if (value >= 0) c.options[key] = std::to_string(value);
}

void common(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--prime,-p", c.prime, "Prime p")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "64-bit seed");
  app->add_option("--out-dir", c.output_dir, "Report directory (default: $PADICIG_OUTPUT_DIR or .)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic integral geometry toolkit"};
  app.require_subcommand(1);
  ExperimentConfig c;
  Flags f;

  auto* roots = app.add_subcommand("roots", "Count distinct p-adic roots of a polynomial");
  common(roots, c);
  roots->add_option("--coeffs", f.coeffs, "Coefficients, constant term first, comma separated")->required();
  roots->add_option("--chart", f.chart, "zp, p1, qp or annulus:m");
  roots->add_option("--precision", f.precision, "Truncate coefficients mod p^M (default: exact)");

  auto add_set_flags = [&](CLI::App* cmd, long default_level) {
    common(cmd, c);
    cmd->add_option("--gens", f.gens, "Generators separated by ';', e.g. \"x0*x2-x1^2\"")->required();
    cmd->add_option("--n", f.n, "Ambient dimension (default: from the variables used)");
    cmd->add_option("--dim", f.dim, "Dimension k of the set");
    cmd->add_option("--level,-m", f.level, "Level m")->default_val(default_level);
    cmd->add_option("--degree", f.degree, "Degree, checked against the volume");
    cmd->add_option("--lookahead", f.lookahead, "Extra levels for open classes (default m+1)");
  };
  auto* count = app.add_subcommand("count", "Certified N_m for a projective complete intersection");
  add_set_flags(count, 1);
  auto* volume = app.add_subcommand("volume", "Volume from stabilized counts");
  add_set_flags(volume, 4);

  auto* ver = app.add_subcommand("veronese", "Veronese and Mahler map checks");
  common(ver, c);
  ver->add_option("--kind", f.kind)->check(CLI::IsMember({"standard", "mahler"}));
  ver->add_option("--n", f.n, "Source dimension");
  ver->add_option("--d", f.d, "Degree")->required();
  ver->add_option("--check", f.check)->check(CLI::IsMember({"isometry", "jacobian", "arclength"}));
  ver->add_option("--pairs", f.pairs, "Random pairs for the isometry check");

  auto* igf = app.add_subcommand("igf", "Monte Carlo integral geometry experiments");
  common(igf, c);
  igf->add_option("--experiment", f.experiment)
      ->check(CLI::IsMember({"linear-lemma", "curve", "expected-zeros", "density"}));
  igf->add_option("--model", f.model)->check(CLI::IsMember({"monomial", "mahler"}));
  igf->add_option("--degree,-d", f.degree, "Polynomial or curve degree");
  igf->add_option("--region", f.region, "p1, zp, qp or annulus:m");
  igf->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
  igf->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
  igf->add_option("--output", c.format, "Format printed to stdout")->check(CLI::IsMember({"json", "csv"}));
  igf->add_option("--radius", f.radius, "Ball radius p^-r (linear-lemma; 0 = whole space)");
  igf->add_option("--n", f.n, "Ambient dimension (linear-lemma)");
  igf->add_option("--dim-x", f.dim_x, "Dimension of X (linear-lemma)");
  igf->add_option("--twist", f.twist, "Fixed GL matrix applied to the curve, row-major");
  igf->add_option("--start-precision", c.start_precision);
  igf->add_option("--precision-cap", c.precision_cap);

  auto* rep = app.add_subcommand("reproduce-paper", "Run the acceptance suite");
  common(rep, c);
  rep->add_option("--samples", c.samples)->check(CLI::PositiveNumber);
  rep->add_option("--workers", c.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CLI::App* used = app.get_subcommands().front();
  c.subcommand = used->get_name();
  if (f.degree >= 0) c.degrees = {f.degree};
  if (!padicig::is_prime(c.prime)) {
    std::cerr << "error: --prime " << c.prime << " is not prime\n";
    return 2;
  }
  if (used == roots) {
    set(c, "coeffs", f.coeffs);
    set(c, "chart", f.chart);
    set(c, "precision", f.precision);
  } else if (used == count || used == volume) {
    set(c, "gens", f.gens);
    set(c, "n", f.n);
    set(c, "dim", f.dim);
    set(c, "level", f.level);
    set(c, "lookahead", f.lookahead);
  } else if (used == ver) {
    set(c, "kind", f.kind);
    set(c, "n", f.n);
    set(c, "d", f.d);
    set(c, "check", f.check);
    set(c, "pairs", f.pairs);
  } else if (used == igf) {
    set(c, "experiment", f.experiment);
    set(c, "model", f.model);
    set(c, "region", f.region);
    if (f.experiment == "linear-lemma") {
      set(c, "radius", f.radius);
      set(c, "n", f.n);
      set(c, "dim-x", f.dim_x);
    }
    set(c, "twist", f.twist);
  }

  try {
    padicig::cli::Report r;
    if (used == roots) r = padicig::cli::run_roots(c);
    else if (used == count) r = padicig::cli::run_count(c);
    else if (used == volume) r = padicig::cli::run_volume(c);
    else if (used == ver) r = padicig::cli::run_veronese(c);
    else if (used == igf) r = padicig::cli::run_igf(c);
    else r = padicig::cli::run_reproduce(c);

    const auto paths = padicig::cli::emit_report(r);
    if (used == rep) {
      std::printf("%s: %s\n", r.pass ? "ALL PASS" : "SOME FAILED", paths.front().c_str());
    } else if (c.format == "csv" && r.table) {
      std::cout << padicig::cli::to_csv(*r.table);
    } else {
      std::cout << padicig::cli::render_json(r);
    }
    return r.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
