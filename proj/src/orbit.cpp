#include "harper/orbit.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

namespace harper {

namespace {

constexpr double kCrossingTol = 1e-9;
constexpr double kConfirmTol = 1e-6;
constexpr double kWitnessTol = 1e-8;

bool confirmed(const Params& p, const Vec2& witness, long period,
               const Eigen::Vector2i& displacement, double tol) {
  Vec2 z = witness;
  for (long k = 0; k < period; ++k) z = lift(p, z);
  const Vec2 expected = witness + displacement.cast<double>();
  return (z - expected).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

OrbitStats orbit_stats(const Params& p, const Vec2& seed, long n) {
  if (n < 1) throw std::invalid_argument("orbit_stats: n must be >= 1");
  OrbitStats stats;
  stats.seed = seed;
  stats.n_iters = n;
  Vec2 z = seed;
  for (long k = 0; k < n; ++k) {
    z = lift(p, z);
    stats.dx_max = std::max(stats.dx_max, std::abs(z.x() - seed.x()));
    stats.dy_max = std::max(stats.dy_max, std::abs(z.y() - seed.y()));
  }
  stats.birkhoff = (z - seed) / static_cast<double>(n);
  return stats;
}

std::optional<RationalRotation> find_half_line_crossing(const Params& p, const Vec2& seed,
                                                        Axis axis, long n_max) {
  const int coord = (axis == Axis::Vertical) ? 1 : 0;
  if (std::abs(seed[coord]) > kCrossingTol) {
    throw std::invalid_argument("find_half_line_crossing: seed must start on the zero line");
  }

  Vec2 z = seed;
  for (long n = 1; n <= n_max; ++n) {
    z = lift(p, z);
    const double doubled = 2.0 * z[coord];
    const double k = std::nearbyint(doubled);
    if (k != 0.0 && std::abs(doubled - k) < 2.0 * kCrossingTol) {
      RationalRotation rot;
      rot.displacement = Eigen::Vector2i::Zero();
      rot.displacement[coord] = static_cast<int>(k);
      rot.period = 2 * n;
      rot.witness = seed;
      if (!confirmed(p, seed, rot.period, rot.displacement, kConfirmTol)) {
        throw ToleranceAmbiguous("half-line crossing failed closure confirmation");
      }
      return rot;
    }
  }
  return std::nullopt;
}

Vec2 mean_rotation_vector(const Params& p, int grid) {
  if (grid < 2) throw std::invalid_argument("mean_rotation_vector: grid must be >= 2");
  Vec2 sum = Vec2::Zero();
  const double h = 1.0 / grid;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) * h;
    const double sx = sin2pi(x);
    for (int j = 0; j < grid; ++j) {
      const double y = (j + 0.5) * h;
      sum.x() += p.alpha * sin2pi(y + p.beta * sx);
      sum.y() += p.beta * sx;
    }
  }
  return sum / (static_cast<double>(grid) * grid);
}

std::vector<RationalRotation> exact_rotations(const Params& p, int n) {
  std::vector<RationalRotation> out;

  auto push_if_confirmed = [&](const Vec2& witness, long period, int dx, int dy) {
    RationalRotation rot;
    rot.displacement = {dx, dy};
    rot.period = period;
    rot.witness = witness;
    if (confirmed(p, witness, period, rot.displacement, kWitnessTol)) {
      out.push_back(rot);
    }
  };

  if (n >= 1 && std::abs(p.alpha) >= n && std::abs(p.beta) >= n) {
    // lift(eps*x, eta*y) = (eps*x + eta*n, eta*y + eps*n) when
    // sin(2*pi*x) = n/beta and sin(2*pi*y) = n/alpha.
    const double x = std::asin(n / p.beta) / two_pi<double>;
    const double y = std::asin(n / p.alpha) / two_pi<double>;
    for (const int eps : {1, -1}) {
      for (const int eta : {1, -1}) {
        push_if_confirmed({eps * x, eta * y}, 1, eta * n, eps * n);
      }
    }
  }

  if (std::abs(p.alpha) >= 0.5) {
    // lift^2(0, y) = (1, y) when sin(2*pi*y) = 1/(2*alpha).
    const double y = std::asin(0.5 / p.alpha) / two_pi<double>;
    push_if_confirmed({0.0, y}, 2, 1, 0);
    push_if_confirmed({0.0, -y}, 2, -1, 0);
  }

  if (std::abs(p.beta) >= 0.5) {
    const double x = std::asin(0.5 / p.beta) / two_pi<double>;
    push_if_confirmed({x, 0.0}, 2, 0, 1);
    push_if_confirmed({-x, 0.0}, 2, 0, -1);
  }

  return out;
}

}  // namespace harper
