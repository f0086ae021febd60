#pragma once

#include <functional>
#include <random>

#include "harper/core.hpp"

namespace harper::test {

/// Central-difference derivative, the independent oracle for analytic
/// Jacobians.
inline Mat2 fd_jacobian(const std::function<Vec2(const Vec2&)>& f, const Vec2& z, double h) {
  Mat2 j;
  for (int c = 0; c < 2; ++c) {
    Vec2 zp = z, zm = z;
    zp[c] += h;
    zm[c] -= h;
    const Vec2 d = (f(zp) - f(zm)) / (2.0 * h);
    j(0, c) = d.x();
    j(1, c) = d.y();
  }
  return j;
}

/// Richardson-extrapolated central difference: O(h^4) accurate.
inline Mat2 fd_jacobian_rich(const std::function<Vec2(const Vec2&)>& f, const Vec2& z, double h) {
  const Mat2 coarse = fd_jacobian(f, z, h);
  const Mat2 fine = fd_jacobian(f, z, h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

struct RandomStream {
  std::mt19937_64 gen;
  explicit RandomStream(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  Vec2 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
  Params params(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

}  // namespace harper::test
