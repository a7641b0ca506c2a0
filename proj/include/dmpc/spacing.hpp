#pragma once

#include <Eigen/Dense>
#include <map>

#include "dmpc/model.hpp"

namespace dmpc {

/// Affine spacing policy d(v) = delta_h * v + delta_safe. delta_h = 0 gives a
/// constant distance headway; delta_h > 0 a constant time headway.
struct SpacingPolicy {
  double delta_h = 0.0;     // s
  double delta_safe = 0.0;  // m
};

/// Platoon-wide spacing: a base policy plus optional per-vehicle overrides.
/// Vehicle 1 commonly overrides to (0, 0) since it tracks a virtual leader.
struct SpacingConfig {
  SpacingPolicy base;
  std::map<int, SpacingPolicy> per_vehicle;

  const SpacingPolicy& policy_for(int vehicle) const {
    auto it = per_vehicle.find(vehicle);
    return it == per_vehicle.end() ? base : it->second;
  }

  bool uniform() const { return per_vehicle.empty(); }

  /// delta_safe must be > 0 for every vehicle except vehicle 1.
  void validate(int n_followers) const;
};

/// Desired distance to the immediate predecessor at velocity v.
double desired_gap(const SpacingPolicy& policy, double velocity);

/// Desired output offset between vehicles i and j, evaluated with vehicle i's
/// policy: ((i - j) * (delta_h v + delta_safe), 0). The sign follows (i - j).
Eigen::Vector2d pair_offset(int i, int j, const SpacingConfig& spacing, double velocity);

/// Cumulative desired distance from the leader to vehicle i at the leader's
/// velocity: the sum of per-vehicle gaps over vehicles 1..i.
double cumulative_offset(int i, double leader_velocity, const SpacingConfig& spacing);

/// Desired output of vehicle i given the leader's current output.
Output desired_output(int i, const Output& leader, const SpacingConfig& spacing);

}  // namespace dmpc
