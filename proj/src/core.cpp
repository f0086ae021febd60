#include "harper/core.hpp"

#include <cmath>

namespace harper {

namespace {

constexpr double kUnitCircleTol = 1e-9;

Stability classify_from_eigenvalues(const std::complex<double>& l1,
                                    const std::complex<double>& l2) {
  if (std::abs(l1 - 1.0) < kUnitCircleTol || std::abs(l2 - 1.0) < kUnitCircleTol) {
    return Stability::NonElementary;
  }
  const bool real_pair =
      std::abs(l1.imag()) < kUnitCircleTol && std::abs(l2.imag()) < kUnitCircleTol;
  if (!real_pair) {
    // Complex conjugate pair with product 1 lies on the unit circle.
    return Stability::Elliptic;
  }
  if (std::abs(std::abs(l1) - 1.0) < kUnitCircleTol ||
      std::abs(std::abs(l2) - 1.0) < kUnitCircleTol) {
    return Stability::Parabolic;
  }
  return Stability::Hyperbolic;
}

FixedPointReport analyze_fixed_point(const Params& p, const Vec2& location) {
  const Mat2 d = jacobian(p, location);
  const double trace = d.trace();
  // Eigenvalues of an area-preserving 2x2 matrix from the trace alone:
  // lambda = (T +/- sqrt(T^2 - 4)) / 2 with det = 1.
  const std::complex<double> disc = std::sqrt(std::complex<double>(trace * trace - 4.0, 0.0));
  const std::complex<double> l1 = (trace - disc) / 2.0;
  const std::complex<double> l2 = (trace + disc) / 2.0;

  FixedPointReport report;
  report.location = location;
  report.eigenvalues = {l1, l2};
  report.classification = classify_from_eigenvalues(l1, l2);

  if (std::abs(l1.imag()) < kUnitCircleTol && std::abs(l2.imag()) < kUnitCircleTol) {
    for (const auto& lambda : report.eigenvalues) {
      const double lr = lambda.real();
      // Row choice guards against a vanishing off-diagonal entry.
      Vec2 v;
      if (std::abs(d(1, 0)) > std::abs(d(0, 1))) {
        v = {lr - d(1, 1), d(1, 0)};
      } else if (d(0, 1) != 0.0) {
        v = {d(0, 1), lr - d(0, 0)};
      } else {
        v = (std::abs(lr - d(0, 0)) < std::abs(lr - d(1, 1))) ? Vec2{1.0, 0.0}
                                                              : Vec2{0.0, 1.0};
      }
      report.eigenvectors.push_back(v.normalized());
    }
  }
  return report;
}

}  // namespace

std::vector<FixedPointReport> fixed_point_reports(const Params& p) {
  if (p.alpha * p.beta == 0.0) {
    throw DegenerateParams("fixed points form a continuum when alpha*beta == 0");
  }
  const std::array<Vec2, 4> locations = {Vec2{0.0, 0.0}, Vec2{0.0, 0.5},
                                         Vec2{0.5, 0.0}, Vec2{0.5, 0.5}};
  std::vector<FixedPointReport> reports;
  reports.reserve(locations.size());
  for (const auto& z : locations) {
    reports.push_back(analyze_fixed_point(p, z));
  }
  return reports;
}

}  // namespace harper
