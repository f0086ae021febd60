#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harper/diffusion.hpp"

namespace harper {

/// Standard non-twist map parameters: a acts mod 1, b is the vertical kick.
struct NontwistParams {
  double a = 0.0;
  double b = 0.0;
};

inline constexpr double kappa = 39.478417604357434;  // 4*pi^2, |s''(1/4)| for s = sin(2*pi*x)

/// Lift of the standard non-twist map:
/// (x, y) -> (x + a - kappa*y^2, y + b*sin(2*pi*(x + a - kappa*y^2))).
Vec2 nontwist_lift(const NontwistParams& q, const Vec2& z);

/// Derivative of nontwist_lift at z; unit determinant up to roundoff.
Mat2 nontwist_jacobian(const NontwistParams& q, const Vec2& z);

/// The swapped-composition lift conjugated by the rescaling
/// (x, y) -> (x, sqrt(kappa*alpha)*(y - 1/4)) that blows up the critical
/// line y = 1/4. Requires alpha > 0 (NonpositiveAlpha otherwise).
Vec2 rescaled_lift(const Params& p, const Vec2& z);

/// Sup distance (x compared mod 1) over a grid x grid sample of the annulus
/// T^1 x [0,1] between the rescaled shear-only annulus map at alpha0 + n and
/// its integrable quadratic limit, for each n. The sequence decreases
/// toward zero like 1/n.
std::vector<double> rescaling_convergence(double alpha0, std::span<const int> n_list, int grid);

/// Displacement classification of one non-twist parameter pair: unbounded
/// motion is declared when the vertical displacement reaches 1 within
/// budget, mirroring the torus-map threshold test. Presumptive by nature.
PixelVerdict classify_nontwist_pixel(const NontwistParams& q, const PixelBudget& budget,
                                     std::uint64_t seed);

/// The rescaling experiment for the periodic strip structure: scans the
/// diffusion verdicts on [n, n+1] x [0, 1/sqrt(n)] (the strip that maps onto
/// [0,1]^2 under (alpha, beta) -> (alpha - n, sqrt(n)*beta)) next to the
/// non-twist unbounded-orbit grid on [0,1]^2 at the same resolution.
struct RescaledSetGrids {
  int n = 1;
  ScanGrid harper_grid;    // original coordinates, alpha in [n, n+1], beta in [0, 1/sqrt(n)]
  ScanGrid nontwist_grid;  // params field holds (a, b) of the non-twist map
};

RescaledSetGrids conjecture_grids(int n, int nx, int ny, const PixelBudget& budget,
                                  std::uint64_t master_seed);

/// Fraction of same-resolution pixels whose verdicts differ; used to compare
/// successive rescaled grids (n vs 4n) and the non-twist grid.
double verdict_symmetric_difference(const ScanGrid& a, const ScanGrid& b);

}  // namespace harper
