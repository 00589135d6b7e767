#pragma once

#include <cmath>

#include "rme/core.hpp"

namespace rme {

inline Matrix3d skew(const Vector3d& v) {
  Matrix3d s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

/// Rodrigues' formula.
inline Matrix3d exp_so3(const Vector3d& w) {
  const double th = w.norm();
  if (th < 1e-12) {
    return Matrix3d::Identity() + skew(w);
  }
  const Matrix3d k = skew(w / th);
  return Matrix3d::Identity() + std::sin(th) * k + (1.0 - std::cos(th)) * k * k;
}

/// Rotation vector of R. Robust near 0 and near pi.
inline Vector3d log_so3(const Matrix3d& r) {
  const double tr = r.trace();
  const double c = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
  const double th = std::acos(c);
  if (th < 1e-10) {
    // First-order: R ~ I + [w]x
    return 0.5 * Vector3d(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  }
  if (th > M_PI - 1e-6) {
    // Axis from the symmetric part; sign fixed from the largest component.
    const Matrix3d a = 0.5 * (r + Matrix3d::Identity());
    Vector3d axis(std::sqrt(std::max(a(0, 0), 0.0)), std::sqrt(std::max(a(1, 1), 0.0)),
                  std::sqrt(std::max(a(2, 2), 0.0)));
    int k;
    axis.maxCoeff(&k);
    for (int i = 0; i < 3; ++i) {
      if (i != k && a(k, i) < 0.0) axis[i] = -axis[i];
    }
    // Resolve overall sign with the off-diagonal antisymmetric part.
    const Vector3d v(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    if (axis.dot(v) < 0.0) axis = -axis;
    return th * axis.normalized();
  }
  const double s = 0.5 / std::sin(th);
  return th * s * Vector3d(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
}

inline Matrix3d rotation_about(const Vector3d& unit_axis, double angle) {
  return exp_so3(unit_axis * angle);
}

inline Matrix3d rpy_to_rotation(double roll, double pitch, double yaw) {
  return (Eigen::AngleAxisd(yaw, Vector3d::UnitZ()) *
          Eigen::AngleAxisd(pitch, Vector3d::UnitY()) *
          Eigen::AngleAxisd(roll, Vector3d::UnitX()))
      .toRotationMatrix();
}

inline bool is_rotation(const Matrix3d& r, double tol) {
  return (r.transpose() * r - Matrix3d::Identity()).norm() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace rme
