#include "harper/json_io.hpp"

#include <vector>

namespace harper {

json polygon_to_json(const ConvexPolygon& poly) {
  json arr = json::array();
  for (const auto& v : poly.vertices()) arr.push_back({v.x(), v.y()});
  return arr;
}

ConvexPolygon polygon_from_json(const json& j) {
  std::vector<Vec2> pts;
  pts.reserve(j.size());
  for (const auto& pair : j) pts.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
  return ConvexPolygon::hull_of(pts);
}

json certificate_to_json(const HalfPlaneCertificate& cert) {
  return {
      {"params", {{"alpha", cert.params.alpha}, {"beta", cert.params.beta}}},
      {"v", {cert.request.normal.x(), cert.request.normal.y()}},
      {"u", {cert.request.translation.x(), cert.request.translation.y()}},
      {"c", cert.request.offset},
      {"power", cert.request.power},
      {"step", cert.request.step},
      {"grid_max", cert.bound.grid_max},
      {"lipschitz", cert.bound.lipschitz},
      {"rigorous_bound", cert.bound.rigorous_bound},
      {"target", cert.bound.target},
      {"verdict", cert.bound.verdict},
      {"rotation_bound", cert.rotation_bound},
  };
}

HalfPlaneCertificate certificate_from_json(const json& j) {
  HalfPlaneCertificate cert;
  cert.params = {j.at("params").at("alpha").get<double>(), j.at("params").at("beta").get<double>()};
  cert.request.normal = {j.at("v").at(0).get<double>(), j.at("v").at(1).get<double>()};
  cert.request.translation = {j.at("u").at(0).get<int>(), j.at("u").at(1).get<int>()};
  cert.request.offset = j.at("c").get<double>();
  cert.request.power = j.at("power").get<int>();
  cert.request.step = j.at("step").get<double>();
  cert.bound.grid_max = j.at("grid_max").get<double>();
  cert.bound.grid_step = cert.request.step;
  cert.bound.lipschitz = j.at("lipschitz").get<double>();
  cert.bound.rigorous_bound = j.at("rigorous_bound").get<double>();
  cert.bound.target = j.at("target").get<double>();
  cert.bound.verdict = j.at("verdict").get<bool>();
  cert.rotation_bound = j.at("rotation_bound").get<double>();
  return cert;
}

json mode_lock_report_to_json(const ModeLockReport& report) {
  json corners = json::array();
  for (const auto& [params, ok] : report.corner_results) {
    corners.push_back({{"alpha", params.alpha}, {"beta", params.beta}, {"certified", ok}});
  }
  json vertices = json::array();
  for (const auto& rot : report.vertex_witnesses) {
    vertices.push_back({{"vector", {rot.vector().x(), rot.vector().y()}},
                        {"period", rot.period},
                        {"witness", {rot.witness.x(), rot.witness.y()}}});
  }
  json polygon = json::array();
  for (const auto& v : report.locked_polygon) polygon.push_back({v.x(), v.y()});
  return {
      {"case", report.which == ModeLockCase::Square11 ? "square11" : "diamondhalf"},
      {"center", {{"alpha", report.center.alpha}, {"beta", report.center.beta}}},
      {"certificate", certificate_to_json(report.center_certificate)},
      {"corners", corners},
      {"vertex_witnesses", vertices},
      {"locked_polygon", polygon},
      {"verdict", report.verdict},
  };
}

json fixed_point_reports_to_json(const std::vector<FixedPointReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json vecs = json::array();
    for (const auto& v : r.eigenvectors) vecs.push_back({v.x(), v.y()});
    const char* name = "";
    switch (r.classification) {
      case Stability::Hyperbolic: name = "hyperbolic"; break;
      case Stability::Elliptic: name = "elliptic"; break;
      case Stability::Parabolic: name = "parabolic"; break;
      case Stability::NonElementary: name = "non_elementary"; break;
    }
    arr.push_back({
        {"location", {r.location.x(), r.location.y()}},
        {"eigenvalues",
         {{r.eigenvalues[0].real(), r.eigenvalues[0].imag()},
          {r.eigenvalues[1].real(), r.eigenvalues[1].imag()}}},
        {"eigenvectors", vecs},
        {"classification", name},
    });
  }
  return arr;
}

json convergence_report_to_json(const ConvergenceReport& report) {
  return {
      {"deltas", report.deltas},
      {"sup_errors_c0", report.sup_errors_c0},
      {"sup_errors_c1", report.sup_errors_c1},
      {"fitted_order_c0", report.fitted_order_c0},
      {"fitted_order_c1", report.fitted_order_c1},
  };
}

json scan_summary_to_json(const ScanGrid& grid) {
  std::size_t detected = 0;
  for (const auto& v : grid.verdicts) {
    if (v.verdict == Verdict::NDetected) ++detected;
  }
  return {
      {"alpha_range", {grid.spec.alpha_lo, grid.spec.alpha_hi}},
      {"beta_range", {grid.spec.beta_lo, grid.spec.beta_hi}},
      {"resolution", {grid.spec.nx, grid.spec.ny}},
      {"pixels", grid.verdicts.size()},
      {"n_detected", detected},
      {"e_presumed", grid.verdicts.size() - detected},
  };
}

std::string shape_name(SetShape shape) {
  switch (shape) {
    case SetShape::Origin: return "origin";
    case SetShape::HorizontalSegment: return "horizontal_segment";
    case SetShape::VerticalSegment: return "vertical_segment";
    case SetShape::FullDim: return "full_dim";
  }
  return "unknown";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace harper
