#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rme {

using Vector3d = Eigen::Vector3d;
using Vector4d = Eigen::Vector4d;
using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix3d = Eigen::Matrix3d;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Raised when the plant state or model becomes unusable mid-run
/// (singular mass matrix, non-finite state).
class SimulationFault : public std::runtime_error {
 public:
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace rme
