#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace pdevs {

// Simulation time. Finite values are event times; infinity() means "never".
using Time = double;

constexpr Time infinity() { return std::numeric_limits<Time>::infinity(); }

// Event payload: an opaque integer token. The kernel routes and counts
// payloads; it never interprets them.
using Payload = std::int64_t;

// A bag of payloads delivered to (or emitted from) one port in one step.
// Multiplicity matters, order is deterministic but carries no meaning.
using ValueBag = std::vector<Payload>;

}  // namespace pdevs
