#pragma once

#include <string>

#include <json.hpp>

#include "mqmi/density_matrix.hpp"
#include "mqmi/verify.hpp"

namespace mqmi {

/// State file schema:
///   { "parties": [{"label": "A", "dim": 2}, ...],
///     "matrix":  [[re, im], ...] }       row-major flattening
nlohmann::json state_to_json(const DensityMatrix& rho);

/// Validates every density-matrix invariant; the error message names the
/// violated ones.
DensityMatrix state_from_json(const nlohmann::json& j);

DensityMatrix read_state_file(const std::string& path);
void write_state_file(const std::string& path, const DensityMatrix& rho);

/// Report serialization: id, quantity echo, margins, witness in the state
/// schema, and provenance (seed, tolerance, version string). Timestamps are
/// deliberately absent so identical runs give identical bytes.
nlohmann::json report_to_json(const CheckReport& report);

inline constexpr const char* kVersionString = "mqmi 0.1.0";

}  // namespace mqmi
