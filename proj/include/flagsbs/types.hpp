#pragma once

#include <complex>

#include <Eigen/Core>

namespace flagsbs {

template <typename Real>
using ComplexT = std::complex<Real>;

template <typename Real>
using Mat3cT = Eigen::Matrix<ComplexT<Real>, 3, 3>;

template <typename Real>
using Vec3cT = Eigen::Matrix<ComplexT<Real>, 3, 1>;

template <typename Real>
using Vec2cT = Eigen::Matrix<ComplexT<Real>, 2, 1>;

using Complex = ComplexT<double>;
using Mat3c = Mat3cT<double>;
using Vec3c = Vec3cT<double>;
using Vec2c = Vec2cT<double>;
using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-8;

}  // namespace flagsbs
