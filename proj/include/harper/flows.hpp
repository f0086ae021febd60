#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harper/diffusion.hpp"

namespace harper {

/// Parameters of the shear-flow field whose Euler step reproduces the map
/// family along the ray beta = lambda*alpha.
struct FlowSpec {
  double lambda = 0.0;
  double alpha = 0.0;

  long euler_steps() const { return alpha > 0.0 ? static_cast<long>(std::floor(1.0 / alpha)) : 0; }
};

/// W(x, y) = (sin(2*pi*(y + alpha*lambda*sin(2*pi*x))), lambda*sin(2*pi*x)).
Vec2 flow_field(const FlowSpec& spec, const Vec2& z);

/// Derivative of flow_field at z.
Mat2 flow_field_jacobian(const FlowSpec& spec, const Vec2& z);

/// || lift_{alpha, lambda*alpha}(z) - (z + alpha*W(z)) ||; the Euler step of
/// the field is the map itself, so this is roundoff-sized.
double euler_step_identity_error(const FlowSpec& spec, const Vec2& z);

/// Time-t flow of the field by fixed-step fourth-order integration; the step
/// count doubles until the half-step Richardson comparison is below tol.
/// Deterministic. Throws ToleranceUnreachable if the step underflows.
Vec2 flow_reference(const FlowSpec& spec, double t, const Vec2& z, double tol);

/// Flow together with its derivative (first-variation matrix along the
/// trajectory), integrated jointly by the same scheme.
struct FlowStateC1 {
  Vec2 point;
  Mat2 derivative;
};
FlowStateC1 flow_reference_c1(const FlowSpec& spec, double t, const Vec2& z, double tol);

struct ConvergenceReport {
  std::vector<double> deltas;
  std::vector<double> sup_errors_c0;
  std::vector<double> sup_errors_c1;
  double fitted_order_c0 = 0.0;  // log-log slope
  double fitted_order_c1 = 0.0;
};

/// For each step size alpha: sup over quasi-random starts of the distance
/// between the euler_steps()-fold iterated map and the reference flow at the
/// matching time, in value (C0) and in the chained derivative against the
/// first variation (C1).
ConvergenceReport euler_convergence_study(double lambda, std::span<const double> alphas,
                                          int samples);

/// Diffusion onset along the ray beta = lambda*alpha: classifies each alpha
/// and records the vertical range explored by orbits seeded in the annulus
/// y in [0.05, 0.2].
struct RayOnsetRow {
  double alpha = 0.0;
  Verdict verdict = Verdict::EPresumed;
  double dy_annulus = 0.0;
};
std::vector<RayOnsetRow> ray_onset_study(double lambda, std::span<const double> alphas,
                                         const PixelBudget& budget, std::uint64_t seed);

}  // namespace harper
