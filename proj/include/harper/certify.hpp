#pragma once

#include <vector>

#include "harper/core.hpp"
#include "harper/orbit.hpp"

namespace harper {

/// Conservative scalar bound from a grid maximum plus a Lipschitz correction.
/// Not interval arithmetic: every upper-bound operation carries a guard
/// factor of (1 + 2^-40) to absorb rounding.
struct CertBound {
  double grid_max = 0.0;
  double grid_step = 0.0;
  double lipschitz = 0.0;  // Lipschitz bound of the sampled functional in the line parameter
  double rigorous_bound = 0.0;  // grid_max + lipschitz * grid_step
  double target = 0.0;
  bool verdict = false;  // rigorous_bound < target
};

/// Global bound on the operator norm of the derivative of lift(): the
/// Frobenius norm of the entrywise worst case, rounded up.
double jacobian_norm_bound(const Params& p);

/// jacobian_norm_bound raised to the given power with guarded multiplies;
/// bounds the Lipschitz constant of the power-fold iterate.
double lipschitz_bound(const Params& p, int power);

/// The line {z : <z, normal> = offset}, walked with unit parameter period.
/// The parameterization direction must be an integer vector so values of
/// periodic functionals repeat after one parameter unit.
struct LineSpec {
  Vec2 normal;
  double offset = 0.0;
};

/// Certified maximum of phi(z) = <F^power(z) - z, normal> along the line:
/// evaluates a grid with the given parameter spacing and adds the chain
/// Lipschitz correction lipschitz_bound * |direction| * |normal| * step.
CertBound certified_line_max(const Params& p, int power, const LineSpec& line, double step,
                             double target);

struct HalfPlaneRequest {
  Vec2 normal;                   // v
  Eigen::Vector2i translation;   // u
  double offset = 0.0;           // c
  int power = 1;                 // which iterate F^power
  double step = 1e-6;
};

/// A successful certificate implies <F^power(z) - z, v> <= <u, v> on the
/// whole line, hence rho(F^power) lies in the half-plane {w : <w,v> <= <u,v>}
/// and max <rho(F), v> <= <u, v> / power.
struct HalfPlaneCertificate {
  Params params;
  HalfPlaneRequest request;
  CertBound bound;
  double rotation_bound = 0.0;  // <u, v> / power, meaningful when bound.verdict
  bool certified() const { return bound.verdict; }
};

HalfPlaneCertificate certify_half_plane(const Params& p, const HalfPlaneRequest& request);

enum class ModeLockCase { Square11, DiamondHalf };

/// Full mode-locking verification: a half-plane certificate at the target
/// parameters, closed under the axis/quarter-turn symmetries, meets the
/// exact periodic-orbit vertices from below. The same certificate is re-run
/// at four parameter corners offset by 1e-4 to exhibit local constancy of
/// the upper bound.
struct ModeLockReport {
  ModeLockCase which;
  Params center;
  HalfPlaneCertificate center_certificate;
  std::vector<std::pair<Params, bool>> corner_results;
  std::vector<RationalRotation> vertex_witnesses;
  std::vector<Vec2> locked_polygon;  // the concluded rotation set, CCW
  bool verdict = false;
};

ModeLockReport verify_mode_lock(ModeLockCase which);

/// Minimal variation of amplitude*sin(2*pi*x) over windows of length delta:
/// min over `grid` window positions in one period of (max - min on the
/// window), window extrema sampled on a 1000-point refinement. The sampled
/// value under-estimates the true variation, so lower-bound assertions made
/// with it are sound.
double min_variation(double amplitude, double delta, int grid);

}  // namespace harper
