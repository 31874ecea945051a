#pragma once

#include <filesystem>
#include <optional>

#include "json.hpp"

#include "conic/conic_analyzer.hpp"
#include "conic/number_ring.hpp"

namespace conic {

/// One analysis job, as read from a JSON document:
///   {"min_poly": [...], "a": [...], "b": [...], "c": [...],
///    "oracle_degree_bound": 2}
/// Integers may be JSON numbers or decimal strings.
struct JobConfig {
  IntVector min_poly;
  IntVector a;
  IntVector b;
  IntVector c;
  std::optional<int> oracle_degree_bound;
};

/// Integers beyond the 53-bit safe range become decimal strings.
nlohmann::json integer_to_json(const Integer& k);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json coords_to_json(const IntVector& coords);
IntVector coords_from_json(const nlohmann::json& j, const char* field);

/// Throws InputError on any schema violation.
JobConfig parse_job_config(const nlohmann::json& j);
JobConfig load_job_config(const std::filesystem::path& path);
nlohmann::json job_config_to_json(const JobConfig& config);

/// Builds the ring and the three coefficients. Throws InputError.
ConicInput make_conic_input(const JobConfig& config);

}  // namespace conic
