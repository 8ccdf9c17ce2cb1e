#include "padicig_cli/config.hpp"

#include <cstdlib>

namespace padicig::cli {

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["subcommand"] = c.subcommand;
  j["prime"] = c.prime;
  j["degrees"] = c.degrees;
  j["start_precision"] = c.start_precision;
  j["precision_cap"] = c.precision_cap;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["output_dir"] = c.output_dir;
  j["format"] = c.format;
  j["options"] = c.options;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.prime = j.at("prime").get<unsigned long>();
  c.degrees = j.at("degrees").get<std::vector<long>>();
  c.start_precision = j.at("start_precision").get<long>();
  c.precision_cap = j.at("precision_cap").get<long>();
  c.samples = j.at("samples").get<long>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.workers = j.at("workers").get<unsigned>();
  c.output_dir = j.at("output_dir").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.options = j.at("options").get<std::map<std::string, std::string>>();
  return c;
}

std::string resolve_output_dir(const ExperimentConfig& c) {
  if (!c.output_dir.empty()) return c.output_dir;
  if (const char* env = std::getenv("PADICIG_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

}  // namespace padicig::cli
