#pragma once

// JSON interchange for scenes and audit reports. Every rational is written
// as a canonical "p/q" string (integers without "/1").

#include "geoseries/geometry.hpp"

#include "json.hpp"

namespace geoseries {

inline constexpr int json_schema_version = 1;

nlohmann::json scene_to_json(const Scene& scene);

/// Throws std::invalid_argument on schema violations.
Scene scene_from_json(const nlohmann::json& doc);

nlohmann::json audit_to_json(const AuditReport& report);

} // namespace geoseries
