#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace hexwalk {

template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Mat3d = Mat3<double>;
using Mat3cd = Mat3<std::complex<double>>;
using Vec3d = Vec3<double>;
using Vec3cd = Vec3<std::complex<double>>;

using cdouble = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace hexwalk
