#pragma once

// Experiment configuration shared by every subcommand.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace padicig::cli {

struct ExperimentConfig {
  std::string subcommand;
  unsigned long prime = 3;
  std::vector<long> degrees;
  long start_precision = 8;
  long precision_cap = 64;
  long samples = 20000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  /// Directory for report files; empty means $PADICIG_OUTPUT_DIR, then ".".
  std::string output_dir;
  std::string format = "json";
  /// Subcommand-specific flags, verbatim.
  std::map<std::string, std::string> options;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// output_dir, else the environment default, else ".".
std::string resolve_output_dir(const ExperimentConfig& c);

}  // namespace padicig::cli
