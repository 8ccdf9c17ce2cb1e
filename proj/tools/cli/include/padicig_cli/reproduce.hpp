#pragma once

// The acceptance suite: twelve criteria, each with pinned parameters,
// tolerances and runtime budgets.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicig_cli/report.hpp"

namespace padicig::cli {

struct ReproduceOptions {
  /// Prime for the criteria stated at a single prime (1, 8, 9, 10).
  unsigned long prime = 3;
  std::uint64_t seed = 42;
  long samples = 20000;
  unsigned workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool within_budget = true;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
  nlohmann::json data;
};

int criterion_count();
/// Run one criterion (1-based). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const ReproduceOptions& opt);

/// All criteria in order; `on_result` sees each one as soon as it finishes.
std::vector<CriterionResult> run_all(const ReproduceOptions& opt,
                                     const std::function<void(const CriterionResult&)>& on_result = nullptr);

/// options: none beyond prime, seed, samples, workers. Writes the table as it goes.
Report run_reproduce(const ExperimentConfig& c);

}  // namespace padicig::cli
