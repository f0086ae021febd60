#pragma once

#include <cstdint>

#include "harper/types.hpp"

namespace harper {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stable per-pixel seed so a parameter sweep is reproducible regardless of
/// execution order.
inline std::uint64_t pixel_seed(std::uint64_t master, std::uint64_t i, std::uint64_t j) {
  return splitmix64(splitmix64(master ^ (i * 0xa24baed4963ee407ULL)) ^
                    (j * 0x9fb21c651e98df25ULL));
}

inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Deterministic low-discrepancy points in [0,1)^2 (additive recurrence with
/// the plastic-number ratios), offset by a seed-derived shift.
class R2Sequence {
 public:
  explicit R2Sequence(std::uint64_t seed)
      : u_(unit_double(splitmix64(seed))), v_(unit_double(splitmix64(seed ^ 0x5851f42d4c957f2dULL))) {}

  Vec2 next() {
    const Vec2 point{u_, v_};
    u_ += 0.7548776662466927;
    if (u_ >= 1.0) u_ -= 1.0;
    v_ += 0.5698402909980532;
    if (v_ >= 1.0) v_ -= 1.0;
    return point;
  }

 private:
  double u_;
  double v_;
};

}  // namespace harper
