#pragma once

#include <cmath>

namespace harper {

template <typename Scalar>
inline constexpr Scalar two_pi = Scalar(6.283185307179586476925286766559L);

template <typename Scalar>
inline constexpr Scalar pi = Scalar(3.141592653589793238462643383279L);

/// Fractional part of x relative to the nearest integer, in [-1/2, 1/2].
/// The subtraction is exact in floating point, so no accuracy is lost even
/// for lift coordinates that have drifted far from the fundamental domain.
template <typename Scalar>
inline Scalar reduce_unit(Scalar x) {
  return x - std::nearbyint(x);
}

/// sin(2*pi*x), evaluated after reducing x mod 1 and folding into [-1/4, 1/4]
/// so the final sine argument never exceeds pi/2 in magnitude.
template <typename Scalar>
inline Scalar sin2pi(Scalar x) {
  Scalar r = reduce_unit(x);
  if (r > Scalar(0.25)) {
    r = Scalar(0.5) - r;
  } else if (r < Scalar(-0.25)) {
    r = Scalar(-0.5) - r;
  }
  return std::sin(two_pi<Scalar> * r);
}

/// cos(2*pi*x) via the quarter-period shift of sin2pi; even in x.
template <typename Scalar>
inline Scalar cos2pi(Scalar x) {
  const Scalar r = std::abs(reduce_unit(x));
  return std::sin(two_pi<Scalar> * (Scalar(0.25) - r));
}

}  // namespace harper
