#include "harper/certify.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <stdexcept>

#include "harper/parallel.hpp"

namespace harper {

namespace {

constexpr double kGuard = 1.0 + 0x1p-40;

double guarded_up(double x) { return x * kGuard; }

Vec2 line_point(const LineSpec& line, double t) {
  if (line.normal.y() != 0.0) {
    return {t, (line.offset - line.normal.x() * t) / line.normal.y()};
  }
  return {line.offset / line.normal.x(), t};
}

Vec2 line_direction(const LineSpec& line) {
  if (line.normal.y() != 0.0) return {1.0, -line.normal.x() / line.normal.y()};
  return {0.0, 1.0};
}

void validate_line(const LineSpec& line) {
  if (line.normal.isZero()) throw std::invalid_argument("line normal must be nonzero");
  const Vec2 d = line_direction(line);
  if (d.x() != std::nearbyint(d.x()) || d.y() != std::nearbyint(d.y())) {
    throw std::invalid_argument("line parameterization is not 1-periodic");
  }
}

}  // namespace

double jacobian_norm_bound(const Params& p) {
  const double ab = 4.0 * pi<double> * pi<double> * std::abs(p.alpha * p.beta) + 1.0;
  const double ax = two_pi<double> * p.alpha;
  const double by = two_pi<double> * p.beta;
  return guarded_up(std::sqrt(ab * ab + ax * ax + by * by + 1.0));
}

double lipschitz_bound(const Params& p, int power) {
  if (power < 1) throw std::invalid_argument("lipschitz_bound: power must be >= 1");
  const double l = jacobian_norm_bound(p);
  double result = l;
  for (int k = 1; k < power; ++k) result = guarded_up(result * l);
  return result;
}

CertBound certified_line_max(const Params& p, int power, const LineSpec& line, double step,
                             double target) {
  if (step <= 0.0) throw std::invalid_argument("certified_line_max: step must be positive");
  if (power < 1) throw std::invalid_argument("certified_line_max: power must be >= 1");
  validate_line(line);

  const Vec2 v = line.normal;
  const auto phi = [&](double t) {
    const Vec2 z0 = line_point(line, t);
    Vec2 z = z0;
    for (int k = 0; k < power; ++k) z = lift(p, z);
    return (z - z0).dot(v);
  };

  const std::size_t n_points = static_cast<std::size_t>(std::ceil(1.0 / step)) + 1;
  const std::size_t n_chunks = std::max<std::size_t>(1, std::min<std::size_t>(256, n_points / 4096));
  std::vector<double> chunk_max(n_chunks, -std::numeric_limits<double>::infinity());
  parallel_for(n_chunks, [&](std::size_t c) {
    const std::size_t begin = c * n_points / n_chunks;
    const std::size_t end = (c + 1) * n_points / n_chunks;
    double local = -std::numeric_limits<double>::infinity();
    for (std::size_t i = begin; i < end; ++i) {
      local = std::max(local, phi(static_cast<double>(i) * step));
    }
    chunk_max[c] = local;
  });

  CertBound bound;
  bound.grid_max = -std::numeric_limits<double>::infinity();
  for (const double m : chunk_max) bound.grid_max = std::max(bound.grid_max, m);
  bound.grid_step = step;
  bound.lipschitz =
      guarded_up(lipschitz_bound(p, power) * line_direction(line).norm() * v.norm());
  bound.rigorous_bound = bound.grid_max + guarded_up(bound.lipschitz * step);
  bound.target = target;
  bound.verdict = bound.rigorous_bound < target;
  return bound;
}

HalfPlaneCertificate certify_half_plane(const Params& p, const HalfPlaneRequest& request) {
  HalfPlaneCertificate cert;
  cert.params = p;
  cert.request = request;
  const double target = request.translation.cast<double>().dot(request.normal);
  cert.bound = certified_line_max(p, request.power, {request.normal, request.offset},
                                  request.step, target);
  cert.rotation_bound = target / request.power;
  return cert;
}

namespace {

ModeLockReport build_mode_lock_report(ModeLockCase which) {
  ModeLockReport report;
  report.which = which;
  if (which == ModeLockCase::Square11) {
    report.center = {1.0, 1.0};
    report.locked_polygon = {{1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}};
  } else {
    report.center = {0.5, 0.5};
    report.locked_polygon = {{0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}};
  }
  return report;
}

HalfPlaneRequest mode_lock_request(ModeLockCase which) {
  if (which == ModeLockCase::Square11) {
    // F^2 maps the line y = 1/8 strictly below its translate by (0,2):
    // max pi_2(rho) <= 1, and the axis/quarter-turn symmetries close the
    // other three sides of the square.
    return {{0.0, 1.0}, {0, 2}, 0.125, 2, 1e-6};
  }
  // F^4 maps the antidiagonal x + y = 0 strictly left of its translate by
  // (2,0): max of x + y over rho is <= 1/2, symmetries give the diamond.
  return {{1.0, 1.0}, {2, 0}, 0.0, 4, 1e-6};
}

}  // namespace

ModeLockReport verify_mode_lock(ModeLockCase which) {
  ModeLockReport report = build_mode_lock_report(which);
  const HalfPlaneRequest request = mode_lock_request(which);

  report.center_certificate = certify_half_plane(report.center, request);
  bool ok = report.center_certificate.certified();

  // Lower bound: the locked polygon's corners are verified rotation vectors.
  const int level = (which == ModeLockCase::Square11) ? 1 : 0;
  for (const auto& rot : exact_rotations(report.center, std::max(level, 1))) {
    for (const auto& corner : report.locked_polygon) {
      if ((rot.vector() - corner).norm() < 1e-12) {
        report.vertex_witnesses.push_back(rot);
      }
    }
  }
  ok = ok && report.vertex_witnesses.size() >= report.locked_polygon.size();

  constexpr double kOffset = 1e-4;
  for (const double da : {-kOffset, kOffset}) {
    for (const double db : {-kOffset, kOffset}) {
      const Params corner{report.center.alpha + da, report.center.beta + db};
      const HalfPlaneCertificate cert = certify_half_plane(corner, request);
      report.corner_results.emplace_back(corner, cert.certified());
      ok = ok && cert.certified();
    }
  }

  report.verdict = ok;
  return report;
}

double min_variation(double amplitude, double delta, int grid) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("min_variation: delta must lie in (0, 1)");
  }
  if (grid < 1000) throw std::invalid_argument("min_variation: grid must be >= 1000");
  if (amplitude == 0.0) return 0.0;

  constexpr int kRefine = 1000;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / grid;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= kRefine; ++j) {
      const double s = sin2pi(t + delta * j / kRefine);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    best = std::min(best, hi - lo);
  }
  return std::abs(amplitude) * best;
}

}  // namespace harper
