#include "harper/flows.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "harper/orbit.hpp"
#include "harper/parallel.hpp"
#include "harper/rng.hpp"

namespace harper {

Vec2 flow_field(const FlowSpec& spec, const Vec2& z) {
  const double inner = z.y() + spec.alpha * spec.lambda * sin2pi(z.x());
  return {sin2pi(inner), spec.lambda * sin2pi(z.x())};
}

Mat2 flow_field_jacobian(const FlowSpec& spec, const Vec2& z) {
  const double c = spec.alpha * spec.lambda;
  const double inner = z.y() + c * sin2pi(z.x());
  const double d_inner = two_pi<double> * cos2pi(inner);
  const double dx = two_pi<double> * cos2pi(z.x());
  Mat2 j;
  j << d_inner * c * dx, d_inner, spec.lambda * dx, 0.0;
  return j;
}

double euler_step_identity_error(const FlowSpec& spec, const Vec2& z) {
  const Params p{spec.alpha, spec.lambda * spec.alpha};
  const Vec2 via_map = lift(p, z);
  const Vec2 via_field = z + spec.alpha * flow_field(spec, z);
  return (via_map - via_field).norm();
}

namespace {

// One classical fourth-order step of the joint (point, derivative) system:
// z' = W(z), U' = DW(z) U.
FlowStateC1 rk4_step_c1(const FlowSpec& spec, const FlowStateC1& s, double h) {
  const auto f = [&](const FlowStateC1& u) -> FlowStateC1 {
    return {flow_field(spec, u.point), flow_field_jacobian(spec, u.point) * u.derivative};
  };
  const FlowStateC1 k1 = f(s);
  const FlowStateC1 k2 = f({s.point + 0.5 * h * k1.point, s.derivative + 0.5 * h * k1.derivative});
  const FlowStateC1 k3 = f({s.point + 0.5 * h * k2.point, s.derivative + 0.5 * h * k2.derivative});
  const FlowStateC1 k4 = f({s.point + h * k3.point, s.derivative + h * k3.derivative});
  return {s.point + (h / 6.0) * (k1.point + 2.0 * k2.point + 2.0 * k3.point + k4.point),
          s.derivative +
              (h / 6.0) * (k1.derivative + 2.0 * k2.derivative + 2.0 * k3.derivative + k4.derivative)};
}

Vec2 rk4_step(const FlowSpec& spec, const Vec2& z, double h) {
  const Vec2 k1 = flow_field(spec, z);
  const Vec2 k2 = flow_field(spec, z + 0.5 * h * k1);
  const Vec2 k3 = flow_field(spec, z + 0.5 * h * k2);
  const Vec2 k4 = flow_field(spec, z + h * k3);
  return z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void validate_tol(double tol) {
  if (tol < 1e-13) throw std::invalid_argument("flow_reference: tol must be >= 1e-13");
}

// Doubles the step count until the h vs h/2 comparison drops below tol.
// The error metric is supplied so the point-only and joint solves share the
// control flow.
template <typename State, typename StepFn, typename ErrFn>
State richardson(double t, const State& start, double tol, const StepFn& step,
                 const ErrFn& error) {
  long n = std::max<long>(8, static_cast<long>(std::ceil(std::abs(t) / 0.05)));
  const auto solve = [&](long steps) {
    State s = start;
    const double h = t / static_cast<double>(steps);
    for (long k = 0; k < steps; ++k) s = step(s, h);
    return s;
  };
  State coarse = solve(n);
  for (;;) {
    const State fine = solve(2 * n);
    if (error(fine, coarse) <= tol) return fine;
    n *= 2;
    if (n > (1L << 24)) {
      throw ToleranceUnreachable("flow_reference: step underflow before reaching tol");
    }
    coarse = fine;
  }
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::max(y[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

Vec2 flow_reference(const FlowSpec& spec, double t, const Vec2& z, double tol) {
  validate_tol(tol);
  if (t == 0.0) return z;
  return richardson(
      t, z, tol, [&](const Vec2& s, double h) { return rk4_step(spec, s, h); },
      [](const Vec2& a, const Vec2& b) { return (a - b).cwiseAbs().maxCoeff(); });
}

FlowStateC1 flow_reference_c1(const FlowSpec& spec, double t, const Vec2& z, double tol) {
  validate_tol(tol);
  if (t == 0.0) return {z, Mat2::Identity()};
  return richardson(
      t, FlowStateC1{z, Mat2::Identity()}, tol,
      [&](const FlowStateC1& s, double h) { return rk4_step_c1(spec, s, h); },
      [](const FlowStateC1& a, const FlowStateC1& b) {
        return std::max((a.point - b.point).cwiseAbs().maxCoeff(),
                        (a.derivative - b.derivative).cwiseAbs().maxCoeff());
      });
}

ConvergenceReport euler_convergence_study(double lambda, std::span<const double> alphas,
                                          int samples) {
  if (samples < 1) throw std::invalid_argument("euler_convergence_study: samples must be >= 1");
  ConvergenceReport report;
  report.deltas.assign(alphas.begin(), alphas.end());
  report.sup_errors_c0.resize(alphas.size());
  report.sup_errors_c1.resize(alphas.size());

  std::vector<Vec2> starts;
  starts.reserve(samples);
  R2Sequence seq(0x0f10a5u);
  for (int i = 0; i < samples; ++i) starts.push_back(seq.next());

  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double alpha = alphas[a];
    const FlowSpec spec{lambda, alpha};
    const Params p{alpha, lambda * alpha};
    const long n = spec.euler_steps();
    const double t = static_cast<double>(n) * alpha;

    std::vector<double> c0(starts.size()), c1(starts.size());
    parallel_for(starts.size(), [&](std::size_t i) {
      Vec2 z = starts[i];
      Mat2 chain = Mat2::Identity();
      for (long k = 0; k < n; ++k) {
        chain = jacobian(p, z) * chain;
        z = lift(p, z);
      }
      const FlowStateC1 ref = flow_reference_c1(spec, t, starts[i], 1e-9);
      c0[i] = (z - ref.point).norm();
      c1[i] = (chain - ref.derivative).norm();
    });
    report.sup_errors_c0[a] = *std::max_element(c0.begin(), c0.end());
    report.sup_errors_c1[a] = *std::max_element(c1.begin(), c1.end());
  }

  report.fitted_order_c0 = loglog_slope(report.deltas, report.sup_errors_c0);
  report.fitted_order_c1 = loglog_slope(report.deltas, report.sup_errors_c1);
  return report;
}

std::vector<RayOnsetRow> ray_onset_study(double lambda, std::span<const double> alphas,
                                         const PixelBudget& budget, std::uint64_t seed) {
  std::vector<RayOnsetRow> rows;
  rows.reserve(alphas.size());
  for (const double alpha : alphas) {
    const Params p{alpha, lambda * alpha};
    RayOnsetRow row;
    row.alpha = alpha;
    row.verdict = classify_pixel(p, budget, splitmix64(seed ^ std::hash<double>{}(alpha))).verdict;

    // Vertical range explored from the annulus y in [0.05, 0.2].
    R2Sequence seq(seed);
    const int annulus_seeds = std::max(4, budget.n_seeds / 4);
    for (int i = 0; i < annulus_seeds; ++i) {
      const Vec2 u = seq.next();
      const Vec2 start{u.x(), 0.05 + 0.15 * u.y()};
      const OrbitStats stats = orbit_stats(p, start, budget.n_iters);
      row.dy_annulus = std::max(row.dy_annulus, stats.dy_max);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace harper
