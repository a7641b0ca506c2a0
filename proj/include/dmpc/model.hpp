#pragma once

#include <Eigen/Dense>

#include "dmpc/errors.hpp"

namespace dmpc {

/// Longitudinal state of one vehicle at one timestep.
struct VehicleState {
  double position = 0.0;      // m
  double velocity = 0.0;      // m/s
  double acceleration = 0.0;  // m/s^2

  Eigen::Vector3d vec() const { return {position, velocity, acceleration}; }
  static VehicleState from_vec(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }
  bool finite() const;
};

/// Measured output: the (position, velocity) projection of the state.
struct Output {
  double position = 0.0;  // m
  double velocity = 0.0;  // m/s

  Eigen::Vector2d vec() const { return {position, velocity}; }
  static Output from_vec(const Eigen::Vector2d& v) { return {v[0], v[1]}; }
};

/// Per-vehicle dynamics parameters.
struct VehicleParams {
  double tau = 0.5;    // inertial delay, s (> 0)
  double u_min = -3.0;  // m/s^2
  double u_max = 3.0;   // m/s^2

  void validate() const {
    if (!(tau > 0.0)) throw ContractViolation("vehicle tau must be > 0");
    if (!(u_min < u_max)) throw ContractViolation("vehicle input bounds must satisfy u_min < u_max");
  }
};

struct SystemMatrices {
  Eigen::Matrix3d A;
  Eigen::Vector3d B;
  Eigen::Matrix<double, 2, 3> C;
};

/// Discrete-time triple-integrator-with-lag model:
///   p+ = p + dt v,  v+ = v + dt a,  a+ = (1 - dt/tau) a + (dt/tau) u.
/// Commanded acceleration is tracked with a first-order lag of time constant tau.
SystemMatrices system_matrices(const VehicleParams& params, double dt);

/// One dynamics step. The input must lie within the vehicle's bounds; the caller
/// is responsible for saturating first.
VehicleState step(const VehicleState& state, double input, const VehicleParams& params, double dt);

/// Output map y = C x.
Output output(const VehicleState& state);

}  // namespace dmpc
