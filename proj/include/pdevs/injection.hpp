#pragma once

#include <string>
#include <vector>

#include "pdevs/types.hpp"

namespace pdevs {

// One payload delivered to one root input port at one time.
struct Injection {
  Time time;
  std::string port;
  Payload payload;

  bool operator==(const Injection&) const = default;
};

// External stimulus for a simulation: a time-ordered list of deliveries to
// the root model's input ports. Distinct event times must be strictly
// increasing; several deliveries at the same time form one simultaneous
// event (e.g. a stimulus fanned out to every root input port).
class InjectionSchedule {
 public:
  // Throws ModelError if `time` is negative, non-finite, or earlier than
  // the last added time.
  InjectionSchedule& add(Time time, std::string port, Payload payload);

  const std::vector<Injection>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Injection> entries_;
};

}  // namespace pdevs
