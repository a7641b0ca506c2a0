#include "dmpc/spacing.hpp"

#include <string>

#include "dmpc/errors.hpp"

namespace dmpc {

void SpacingConfig::validate(int n_followers) const {
  auto check = [](int vehicle, const SpacingPolicy& p, bool allow_zero_safe) {
    if (p.delta_h < 0.0)
      throw ScenarioError("spacing.delta_h must be >= 0 (vehicle " + std::to_string(vehicle) + ")");
    if (p.delta_safe < 0.0 || (!allow_zero_safe && p.delta_safe == 0.0))
      throw ScenarioError("spacing.delta_safe must be > 0 for vehicle " + std::to_string(vehicle));
  };
  for (int i = 1; i <= n_followers; ++i) check(i, policy_for(i), i == 1);
  for (const auto& [i, p] : per_vehicle) {
    (void)p;
    if (i < 1 || i > n_followers)
      throw ScenarioError("spacing.per_vehicle refers to nonexistent vehicle " + std::to_string(i));
  }
}

double desired_gap(const SpacingPolicy& policy, double velocity) {
  return policy.delta_h * velocity + policy.delta_safe;
}

Eigen::Vector2d pair_offset(int i, int j, const SpacingConfig& spacing, double velocity) {
  const SpacingPolicy& p = spacing.policy_for(i);
  return {static_cast<double>(i - j) * desired_gap(p, velocity), 0.0};
}

double cumulative_offset(int i, double leader_velocity, const SpacingConfig& spacing) {
  double total = 0.0;
  for (int j = 1; j <= i; ++j) total += desired_gap(spacing.policy_for(j), leader_velocity);
  return total;
}

Output desired_output(int i, const Output& leader, const SpacingConfig& spacing) {
  return {leader.position - cumulative_offset(i, leader.velocity, spacing), leader.velocity};
}

}  // namespace dmpc
