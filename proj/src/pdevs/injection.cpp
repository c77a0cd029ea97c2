#include "pdevs/injection.hpp"

#include <cmath>

#include "pdevs/errors.hpp"

namespace pdevs {

InjectionSchedule& InjectionSchedule::add(Time time, std::string port, Payload payload) {
  if (!std::isfinite(time) || time < 0) {
    throw ModelError("injection time must be finite and non-negative");
  }
  if (port.empty()) {
    throw ModelError("injection port name must not be empty");
  }
  if (!entries_.empty() && time < entries_.back().time) {
    throw ModelError("injection times must not decrease");
  }
  entries_.push_back(Injection{time, std::move(port), payload});
  return *this;
}

}  // namespace pdevs
