#include "dmpc/model.hpp"

#include <cmath>

namespace dmpc {

bool VehicleState::finite() const {
  return std::isfinite(position) && std::isfinite(velocity) && std::isfinite(acceleration);
}

SystemMatrices system_matrices(const VehicleParams& params, double dt) {
  params.validate();
  if (!(dt > 0.0)) throw ContractViolation("dt must be > 0");

  SystemMatrices m;
  m.A << 1.0, dt, 0.0,
         0.0, 1.0, dt,
         0.0, 0.0, 1.0 - dt / params.tau;
  m.B << 0.0, 0.0, dt / params.tau;
  m.C << 1.0, 0.0, 0.0,
         0.0, 1.0, 0.0;
  return m;
}

VehicleState step(const VehicleState& state, double input, const VehicleParams& params, double dt) {
  if (input < params.u_min || input > params.u_max) {
    throw ContractViolation("control input " + std::to_string(input) + " outside [" +
                            std::to_string(params.u_min) + ", " + std::to_string(params.u_max) + "]");
  }
  const SystemMatrices m = system_matrices(params, dt);
  return VehicleState::from_vec(m.A * state.vec() + m.B * input);
}

Output output(const VehicleState& state) { return {state.position, state.velocity}; }

}  // namespace dmpc
