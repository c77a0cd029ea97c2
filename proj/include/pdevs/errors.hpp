#pragma once

#include <stdexcept>
#include <string>

namespace pdevs {

// Structural problem: bad port/component definitions, invalid couplings,
// malformed schedules, unknown names.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime problem while simulating: negative time advance, stepping a
// quiescent simulation, step-cap overrun, routing cycles.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdevs
