#include "padicig_cli/serialize.hpp"

#include "padicig_cli/report.hpp"

namespace padicig::cli {

nlohmann::json json_long(long v) {
  if (v == kInfinite) return nullptr;
  return v;
}

namespace {

nlohmann::json json_integers(const std::vector<Integer>& xs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : xs) a.push_back(json_integer(x));
  return a;
}

}  // namespace

nlohmann::json to_json(const RootReport& r) {
  nlohmann::json j;
  j["count"] = r.count;
  j["status"] = to_string(r.status);
  j["precision_consumed"] = r.precision_consumed;
  j["working_precision"] = json_long(r.working_precision);
  j["undetermined_branches"] = r.undetermined_branches;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    j["witnesses"].push_back({{"chart", w.chart},
                              {"center", json_integer(w.center)},
                              {"level", w.level},
                              {"hensel_point", json_integer(w.hensel_point)},
                              {"value_valuation", json_long(w.value_valuation)},
                              {"slope_valuation", json_long(w.slope_valuation)}});
  }
  j["parts"] = nlohmann::json::array();
  for (const auto& p : r.parts) {
    j["parts"].push_back({{"chart", p.chart}, {"count", p.count}, {"poly", json_integers(p.poly)}});
  }
  return j;
}

nlohmann::json to_json(const CountResult& r) {
  nlohmann::json j;
  j["prime"] = r.p;
  j["level"] = r.m;
  j["n_lo"] = json_integer(r.n_lo);
  j["n_hi"] = json_integer(r.n_hi);
  j["n_certified"] = json_integer(r.n_certified);
  j["lookahead_met"] = r.lookahead_met;
  j["unknown_classes"] = r.unknown_classes;
  j["fully_certified"] = r.fully_certified;
  j["exact"] = r.n_lo == r.n_hi;
  j["certified_classes"] = r.certified.size();
  j["classes_visited"] = r.classes_visited;
  return j;
}

nlohmann::json to_json(const VolumeEstimate& v) {
  nlohmann::json j;
  j["prime"] = v.p;
  j["dim"] = v.k;
  j["stabilized"] = v.stabilized;
  j["extrapolated"] = v.extrapolated;
  if (v.extrapolated) j["defect"] = json_integer(v.defect);
  j["m0"] = json_long(v.known() ? v.m0 : kInfinite);
  j["max_level"] = v.max_level;
  j["value_lo"] = json_rational(v.value_lo);
  j["value_hi"] = json_rational(v.value_hi);
  if (v.known()) j["volume"] = json_rational(v.value());
  j["levels"] = nlohmann::json::array();
  for (const auto& l : v.levels) j["levels"].push_back(to_json(l));
  return j;
}

nlohmann::json to_json(const DegreeBoundReport& r) {
  return {{"degree", r.degree},
          {"raw", json_rational(r.raw)},
          {"normalized", json_rational(r.normalized)},
          {"raw_pass", r.raw_pass},
          {"normalized_pass", r.normalized_pass},
          {"slack", json_rational(r.slack)}};
}

nlohmann::json to_json(const IsometryReport& r) {
  nlohmann::json j{{"map", r.map}, {"prime", r.p}, {"n", r.n},          {"d", r.d},
                   {"pairs", r.pairs}, {"failures", r.failures}, {"pass", r.pass()}};
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const JacobianNormReport& r) {
  return {{"point", json_rational(r.point)},   {"value", json_rational(r.value)},
          {"exponent", r.exponent},            {"certificate", r.certificate},
          {"expected", json_rational(r.expected)}, {"matches", r.matches}};
}

nlohmann::json to_json(const McReport& r) {
  Rational t = r.target;
  t.canonicalize();
  nlohmann::json j;
  j["experiment"] = r.estimator;
  j["params"] = r.params;
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  j["excluded"] = r.excluded;
  j["mean"] = decimal(r.mean);
  j["stderr"] = decimal(r.std_error);
  j["target_num"] = json_integer(t.get_num());
  j["target_den"] = json_integer(t.get_den());
  j["pass"] = r.pass;
  j["max_count"] = r.max_count;
  j["histogram"] = r.histogram;
  j["precision_extensions"] = r.precision_extensions;
  return j;
}

nlohmann::json to_json(const DensityReport& r) {
  return {{"model", r.model},
          {"prime", r.p},
          {"degree", r.d},
          {"n_samples", r.samples},
          {"excluded", r.excluded},
          {"counts", r.counts},
          {"chi_square", decimal(r.chi_square)},
          {"p_value", decimal(r.p_value)},
          {"rejects_uniform", r.rejects_uniform}};
}

}  // namespace padicig::cli
