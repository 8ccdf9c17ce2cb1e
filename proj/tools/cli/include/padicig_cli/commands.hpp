#pragma once

// Subcommand implementations. Each reads its flags from the config and
// returns a report; pass is false when any checked claim fails.

#include <string>
#include <vector>

#include "padicig/igf.hpp"
#include "padicig/sample.hpp"
#include "padicig_cli/report.hpp"

namespace padicig::cli {

/// options: coeffs (ascending, comma separated), chart (zp|p1|qp|annulus:m),
/// precision (absent means exact).
Report run_roots(const ExperimentConfig& c);
/// options: gens (';' separated), n, dim, level, lookahead; degrees[0] is the degree.
Report run_count(const ExperimentConfig& c);
/// As count; level is the deepest level examined.
Report run_volume(const ExperimentConfig& c);
/// options: kind (standard|mahler), n, d, check (isometry|jacobian|arclength), pairs.
Report run_veronese(const ExperimentConfig& c);
/// options: experiment, model, region, radius, n, twist; degrees[0] is the degree.
Report run_igf(const ExperimentConfig& c);

McOptions mc_options(const ExperimentConfig& c);
PolyBasis parse_basis(const std::string& model);
/// Comma-separated integers.
std::vector<Integer> parse_integers(const std::string& text);

}  // namespace padicig::cli
