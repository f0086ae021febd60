#pragma once

#include <string>

#include <json.hpp>

#include "harper/certify.hpp"
#include "harper/core.hpp"
#include "harper/diffusion.hpp"
#include "harper/flows.hpp"
#include "harper/polygon.hpp"

namespace harper {

using json = nlohmann::json;

/// Polygon as an array of [x, y] vertex pairs.
json polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const json& j);

json certificate_to_json(const HalfPlaneCertificate& cert);
HalfPlaneCertificate certificate_from_json(const json& j);

json mode_lock_report_to_json(const ModeLockReport& report);
json fixed_point_reports_to_json(const std::vector<FixedPointReport>& reports);
json convergence_report_to_json(const ConvergenceReport& report);
json scan_summary_to_json(const ScanGrid& grid);

std::string shape_name(SetShape shape);

/// FNV-1a over a byte string; stable across platforms, used to fingerprint
/// emitted artifacts and configurations.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace harper
