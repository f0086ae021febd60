#pragma once

#include <optional>
#include <vector>

#include "harper/core.hpp"

namespace harper {

/// Running displacement record of a forward orbit of lift(). Coordinates are
/// kept in the plane (never reduced mod 1) so displacements accumulate
/// exactly.
struct OrbitStats {
  long n_iters = 0;
  double dx_max = 0.0;
  double dy_max = 0.0;
  Vec2 birkhoff = Vec2::Zero();
  Vec2 seed = Vec2::Zero();
};

/// Iterates lift() n times from seed, tracking the max coordinatewise
/// distance from the seed and the n-step displacement average.
OrbitStats orbit_stats(const Params& p, const Vec2& seed, long n);

/// A rational rotation vector displacement/period realized by an explicit
/// orbit: lift^period(witness) = witness + displacement.
struct RationalRotation {
  Eigen::Vector2i displacement;
  long period = 1;
  Vec2 witness = Vec2::Zero();

  Vec2 vector() const { return displacement.cast<double>() / static_cast<double>(period); }
};

enum class Axis { Horizontal, Vertical };

/// Reversibility-based crossing detector. For Axis::Vertical the seed must
/// lie on y = 0; if some iterate n <= n_max lands within 1e-9 of a line
/// R x {k/2}, k != 0, the orbit closes up to the rational rotation
/// (0, k/(2n)), which is confirmed by direct iteration before being
/// returned. Axis::Horizontal is the mirrored statement for seeds on x = 0.
/// Throws ToleranceAmbiguous when a detected crossing fails confirmation.
std::optional<RationalRotation> find_half_line_crossing(const Params& p, const Vec2& seed,
                                                        Axis axis, long n_max);

/// Midpoint-rule quadrature of the one-step displacement over the unit
/// square; zero for every parameter pair (the family is Hamiltonian).
Vec2 mean_rotation_vector(const Params& p, int grid);

/// The explicitly constructible rotation vectors: (+/-n, +/-n) when
/// |alpha|, |beta| >= n, (+/-1/2, 0) when |alpha| >= 1/2 and (0, +/-1/2)
/// when |beta| >= 1/2. Every returned witness is verified by direct
/// iteration; amplitudes below all thresholds give an empty list.
std::vector<RationalRotation> exact_rotations(const Params& p, int n);

}  // namespace harper
