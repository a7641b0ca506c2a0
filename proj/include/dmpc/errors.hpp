#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dmpc {

/// Invalid scenario file or configuration value. The CLI maps this to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vehicle's optimal control problem was reported infeasible (hard terminal
/// constraints unreachable). The CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(int vehicle, std::int64_t timestep, const std::string& detail)
      : std::runtime_error("vehicle " + std::to_string(vehicle) + " at timestep " +
                           std::to_string(timestep) + ": " + detail),
        vehicle(vehicle),
        timestep(timestep) {}

  int vehicle;
  std::int64_t timestep;
};

/// Lockstep message exchange failed (a sender never posted). Exit code 4.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed wire message; `offset` is the byte where decoding failed
/// (for truncated buffers, the offset of the first missing byte).
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::size_t offset, const std::string& detail)
      : std::runtime_error(detail + " (at byte offset " + std::to_string(offset) + ")"),
        offset(offset) {}

  std::size_t offset;
};

/// Precondition violated by a caller (e.g. control input outside its bounds).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dmpc
