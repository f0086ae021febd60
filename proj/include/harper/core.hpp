#pragma once

#include <array>
#include <complex>
#include <vector>

#include "harper/math.hpp"
#include "harper/types.hpp"

namespace harper {

namespace detail {
template <typename Derived>
using ScalarOf = typename Derived::Scalar;

template <typename Derived>
inline constexpr bool is_plane_vec =
    Derived::RowsAtCompileTime == 2 && Derived::ColsAtCompileTime == 1;
}  // namespace detail

/// Horizontal shear (x, y) -> (x + alpha*sin(2*pi*y), y).
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline PlaneVec<Scalar> shear_h(const ParamsT<Scalar>& p, const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  return {z.x() + p.alpha * sin2pi(z.y()), z.y()};
}

/// Vertical shear (x, y) -> (x, y + beta*sin(2*pi*x)).
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline PlaneVec<Scalar> shear_v(const ParamsT<Scalar>& p, const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  return {z.x(), z.y() + p.beta * sin2pi(z.x())};
}

/// The kicked Harper lift: horizontal shear after vertical shear. Commutes
/// with integer translations, preserves area.
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline PlaneVec<Scalar> lift(const ParamsT<Scalar>& p, const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  const Scalar y = z.y() + p.beta * sin2pi(z.x());
  return {z.x() + p.alpha * sin2pi(y), y};
}

/// Exact inverse of lift(): undo the shears in reverse order with negated
/// amplitudes.
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline PlaneVec<Scalar> lift_inverse(const ParamsT<Scalar>& p,
                                     const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  const Scalar x = z.x() - p.alpha * sin2pi(z.y());
  return {x, z.y() - p.beta * sin2pi(x)};
}

/// The conjugate composition order: vertical shear after horizontal shear.
/// Shares its rotation set with lift() and drives the rescaling analysis.
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline PlaneVec<Scalar> lift_swapped(const ParamsT<Scalar>& p,
                                     const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  const Scalar x = z.x() + p.alpha * sin2pi(z.y());
  return {x, z.y() + p.beta * sin2pi(x)};
}

/// Derivative of lift() at z. Determinant is 1 up to roundoff.
template <typename Derived, typename Scalar = detail::ScalarOf<Derived>>
inline Eigen::Matrix<Scalar, 2, 2> jacobian(const ParamsT<Scalar>& p,
                                            const Eigen::MatrixBase<Derived>& z) {
  static_assert(detail::is_plane_vec<Derived>);
  const Scalar y1 = z.y() + p.beta * sin2pi(z.x());
  const Scalar k = two_pi<Scalar> * p.alpha * cos2pi(y1);
  const Scalar m = two_pi<Scalar> * p.beta * cos2pi(z.x());
  Eigen::Matrix<Scalar, 2, 2> d;
  d << k * m + Scalar(1), k, m, Scalar(1);
  return d;
}

/// The linear/affine involutions and half translations used by the symmetry
/// relations of the family.
enum class Symmetry { S1, S2, S, D, R, T1, T2 };

inline Vec2 apply_symmetry(Symmetry sym, const Vec2& z) {
  switch (sym) {
    case Symmetry::S1: return {-z.x(), z.y()};
    case Symmetry::S2: return {z.x(), -z.y()};
    case Symmetry::S:  return {-z.x(), -z.y()};
    case Symmetry::D:  return {z.y(), z.x()};
    case Symmetry::R:  return {-z.y(), z.x()};
    case Symmetry::T1: return {z.x() + 0.5, z.y()};
    case Symmetry::T2: return {z.x(), z.y() + 0.5};
  }
  return z;
}

enum class Stability { Hyperbolic, Elliptic, Parabolic, NonElementary };

struct FixedPointReport {
  Vec2 location;
  std::array<std::complex<double>, 2> eigenvalues;
  std::vector<Vec2> eigenvectors;  // two unit vectors when eigenvalues are real, else empty
  Stability classification;
};

/// Local analysis at the four canonical fixed points (0,0), (0,1/2), (1/2,0),
/// (1/2,1/2). Throws DegenerateParams when alpha*beta == 0, where the fixed
/// point set degenerates to a continuum.
std::vector<FixedPointReport> fixed_point_reports(const Params& p);

}  // namespace harper
