#pragma once

// JSON and CSV report rendering.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicig/rational.hpp"
#include "padicig_cli/config.hpp"

namespace padicig::cli {

/// A number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json json_integer(const Integer& x);
/// {"num": .., "den": ..} in lowest terms.
nlohmann::json json_rational(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
/// 12 significant digits.
std::string decimal(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);

struct Report {
  ExperimentConfig config;
  nlohmann::json results;
  std::optional<Table> table;
  bool pass = true;
};

/// {"config": ..., "pass": ..., "results": ...}; keys sorted, two-space indent.
std::string render_json(const Report& r);
/// Inverse of render_json (the table is not stored).
Report parse_report(const std::string& text);

/// Base file name: the subcommand plus any experiment or check name.
std::string report_stem(const ExperimentConfig& c);

/// Write <dir>/<stem>.json and, when there is a table, <dir>/<stem>.csv.
/// Returns the paths written. Throws std::runtime_error naming the path on IO failure.
std::vector<std::string> emit_report(const Report& r);

}  // namespace padicig::cli
