#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harper/orbit.hpp"
#include "harper/polygon.hpp"

namespace harper {

struct RotsetBudget {
  int n_orbits = 256;
  long n_iters = 100000;
  std::uint64_t seed = 1;
};

/// Inner approximation of the rotation set: convex hull of long-orbit
/// Birkhoff displacement averages over low-discrepancy seeds, unioned with
/// all verified exact rational rotations (explicit periodic orbits and
/// half-line crossings) and the origin, closed under the axis reflections
/// (plus the quarter turn when alpha == beta).
ConvexPolygon approx_rotation_set(const Params& p, const RotsetBudget& budget);

/// Max Hausdorff distance between the approximation at p and at n_samples
/// parameters on the circle of the given radius around p.
double continuity_probe(const Params& p, double radius, int n_samples,
                        const RotsetBudget& budget);

/// Nested-hull experiment along the diagonal alpha = beta: approximates the
/// rotation set at each diagonal parameter and reports how far each hull
/// sticks out of the next one (zero everywhere means monotone growth).
struct DiagonalHullRow {
  double alpha;
  ConvexPolygon hull;
  double outside_next;  // max distance of this hull's vertices to the next hull; NaN for last
};
std::vector<DiagonalHullRow> diagonal_monotonicity_experiment(std::span<const double> alphas,
                                                              const RotsetBudget& budget);

}  // namespace harper
