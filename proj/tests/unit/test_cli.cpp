#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "padicig_cli/commands.hpp"
#include "padicig_cli/report.hpp"
#include "padicig_cli/reproduce.hpp"

using namespace padicig;
using namespace padicig::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig config(const std::string& sub, std::map<std::string, std::string> options) {
  ExperimentConfig c;
  c.subcommand = sub;
  c.options = std::move(options);
  c.output_dir = (std::filesystem::temp_directory_path() / "padicig_test_cli").string();
  return c;
}

}  // namespace

TEST_CASE("rationals and decimals") {
  CHECK(json_rational(Rational(8, 6)).dump() == R"({"den":3,"num":4})");
  CHECK(rational_from_json(json_rational(Rational(-5, 7))) == Rational(-5, 7));
  const Integer big = ipow(3, 80);
  CHECK(json_integer(big).is_string());
  CHECK(rational_from_json(json_rational(Rational(big, 7))) == Rational(big, 7));
  CHECK(decimal(1.0 / 3.0) == "0.333333333333");
  CHECK(decimal(2.25) == "2.25");
}

TEST_CASE("config round trip") {
  ExperimentConfig c = config("igf", {{"experiment", "curve"}, {"model", "mahler"}});
  c.degrees = {3};
  c.seed = 18446744073709551615ull;
  CHECK(config_from_json(to_json(c)) == c);
}

TEST_CASE("roots command") {
  const Report r = run_roots(config("roots", {{"coeffs", "1,0,-1"}}));
  CHECK(r.results["count"] == 2);
  CHECK(r.pass);
  const Report back = parse_report(render_json(r));
  CHECK(back.config == r.config);
  CHECK(back.results == r.results);
  CHECK(back.pass == r.pass);
}

TEST_CASE("count command") {
  ExperimentConfig c = config("count", {{"gens", "x0*x2-x1^2"}, {"level", "3"}, {"dim", "1"}});
  const Report r = run_count(c);
  CHECK(r.results["count"]["n_lo"] == 36);
  CHECK(r.results["count"]["n_hi"] == 36);
  CHECK(r.results["volume"]["volume"] == json_rational(Rational(4, 3)));
  REQUIRE(r.table);
  CHECK(r.table->rows.size() == 3);
}

TEST_CASE("reports are byte-identical for identical configs") {
  ExperimentConfig c = config("igf", {{"experiment", "expected-zeros"}, {"model", "mahler"}, {"region", "zp"}});
  c.degrees = {3};
  c.samples = 2000;
  c.seed = 777;
  const auto first = emit_report(run_igf(c));
  const std::string a = slurp(first.front());
  const auto second = emit_report(run_igf(c));
  CHECK(slurp(second.front()) == a);
  CHECK(a.find("\"seed\": 777") != std::string::npos);
  const Report parsed = parse_report(a);
  CHECK(parsed.config == c);
  CHECK(parsed.results["target_num"] == 9);
  CHECK(parsed.results["target_den"] == 4);
}

TEST_CASE("veronese command") {
  ExperimentConfig c = config("veronese", {{"kind", "mahler"}, {"d", "4"}, {"check", "isometry"}, {"pairs", "200"}});
  c.prime = 2;
  CHECK(run_veronese(c).pass);
  c.options["check"] = "jacobian";
  CHECK(run_veronese(c).pass);
  c.options["check"] = "arclength";
  const Report a = run_veronese(c);
  CHECK(a.pass);
  CHECK(a.results["arc_length"] == json_rational(Rational(4)));
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(run_roots(config("roots", {{"coeffs", "1,x"}})), std::invalid_argument);
  CHECK_THROWS_AS(run_igf(config("igf", {{"experiment", "nope"}})), std::invalid_argument);
}

TEST_CASE("acceptance suite layout") {
  CHECK(criterion_count() == 12);
  ReproduceOptions o;
  const CriterionResult r = run_criterion(2, o);
  CHECK(r.pass);
  CHECK(r.id == 2);
}
