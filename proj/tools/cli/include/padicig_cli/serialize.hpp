#pragma once

// JSON views of library results.

#include <json.hpp>

#include "padicig/count_vol.hpp"
#include "padicig/igf.hpp"
#include "padicig/roots.hpp"
#include "padicig/veronese.hpp"

namespace padicig::cli {

/// kInfinite becomes null.
nlohmann::json json_long(long v);

nlohmann::json to_json(const RootReport& r);
nlohmann::json to_json(const CountResult& r);
nlohmann::json to_json(const VolumeEstimate& v);
nlohmann::json to_json(const DegreeBoundReport& r);
nlohmann::json to_json(const IsometryReport& r);
nlohmann::json to_json(const JacobianNormReport& r);
/// The igf schema: experiment, params, n_samples, excluded, mean, stderr,
/// target_num, target_den, pass, plus the histogram and diagnostics.
nlohmann::json to_json(const McReport& r);
nlohmann::json to_json(const DensityReport& r);

}  // namespace padicig::cli
