#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace harper {

template <typename Scalar>
using PlaneVec = Eigen::Matrix<Scalar, 2, 1>;

using Vec2 = PlaneVec<double>;
using Mat2 = Eigen::Matrix2d;

/// Kick strengths (alpha horizontal, beta vertical). Any finite values are
/// admissible; the symmetry relations reduce negative parameters to positive
/// ones.
template <typename Scalar = double>
struct ParamsT {
  Scalar alpha{};
  Scalar beta{};
};

using Params = ParamsT<double>;

struct DegenerateParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyPolygon : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonpositiveAlpha : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UpperEndpointNotDiffusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceAmbiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace harper
