#pragma once

#include <cstdint>

namespace devstone {

// Shared tally owned by one benchmark run and incremented by every atomic in
// that model instance. A confluent transition counts once on each side
// (internal then external) because it is defined as their composition.
struct TransitionCounters {
  std::uint64_t num_delt_ints = 0;
  std::uint64_t num_delt_exts = 0;
  std::uint64_t num_of_events = 0;

  bool operator==(const TransitionCounters&) const = default;
};

}  // namespace devstone
