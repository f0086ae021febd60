#include "harper/rotset.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

#include "harper/parallel.hpp"
#include "harper/rng.hpp"

namespace harper {

namespace {

// Axis seeds for the crossing detector; crossings at irrational parameters
// are rare, but structured cases (e.g. beta a half-integer) close exactly.
constexpr int kAxisSeeds = 8;

void inject_exact_points(const Params& p, long n_max, std::vector<Vec2>& points) {
  const int n_top = static_cast<int>(std::floor(std::min(std::abs(p.alpha), std::abs(p.beta))));
  for (int n = 1; n <= n_top; ++n) {
    for (const auto& rot : exact_rotations(p, n)) points.push_back(rot.vector());
  }
  if (n_top < 1) {
    for (const auto& rot : exact_rotations(p, 1)) points.push_back(rot.vector());
  }

  for (int i = 0; i < kAxisSeeds; ++i) {
    const double t = (i + 0.5) / kAxisSeeds;
    for (const Axis axis : {Axis::Vertical, Axis::Horizontal}) {
      const Vec2 seed = (axis == Axis::Vertical) ? Vec2{t, 0.0} : Vec2{0.0, t};
      try {
        if (auto rot = find_half_line_crossing(p, seed, axis, n_max)) {
          points.push_back(rot->vector());
        }
      } catch (const ToleranceAmbiguous&) {
        // A near-miss that fails closure confirmation contributes nothing.
      }
    }
  }
}

}  // namespace

ConvexPolygon approx_rotation_set(const Params& p, const RotsetBudget& budget) {
  const int n_orbits = std::max(1, budget.n_orbits);
  const long n_iters = std::max<long>(100, budget.n_iters);

  std::vector<Vec2> seeds;
  seeds.reserve(n_orbits);
  R2Sequence seq(budget.seed);
  for (int i = 0; i < n_orbits; ++i) seeds.push_back(seq.next());

  std::vector<Vec2> points(n_orbits);
  parallel_for(static_cast<std::size_t>(n_orbits), [&](std::size_t i) {
    points[i] = orbit_stats(p, seeds[i], n_iters).birkhoff;
  });

  points.push_back(Vec2::Zero());  // the origin is a fixed point
  inject_exact_points(p, std::min<long>(n_iters, 4096), points);

  const ConvexPolygon hull = ConvexPolygon::hull_of(points);
  return symmetrized(hull, p.alpha == p.beta);
}

double continuity_probe(const Params& p, double radius, int n_samples,
                        const RotsetBudget& budget) {
  const ConvexPolygon base = approx_rotation_set(p, budget);
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double theta = two_pi<double> * i / std::max(1, n_samples);
    const Params q{p.alpha + radius * std::cos(theta), p.beta + radius * std::sin(theta)};
    worst = std::max(worst, hausdorff_distance(base, approx_rotation_set(q, budget)));
  }
  return worst;
}

std::vector<DiagonalHullRow> diagonal_monotonicity_experiment(std::span<const double> alphas,
                                                              const RotsetBudget& budget) {
  std::vector<DiagonalHullRow> rows;
  rows.reserve(alphas.size());
  for (const double a : alphas) {
    rows.push_back({a, approx_rotation_set({a, a}, budget),
                    std::numeric_limits<double>::quiet_NaN()});
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    double outside = 0.0;
    for (const auto& v : rows[i].hull.vertices()) {
      outside = std::max(outside, rows[i + 1].hull.distance_to(v));
    }
    rows[i].outside_next = outside;
  }
  return rows;
}

}  // namespace harper
