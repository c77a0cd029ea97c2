#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "devstone/benchmark_spec.hpp"

namespace devstone {

// A predicted count does not fit the checked 128-bit intermediate arithmetic
// or the 64-bit result type. Thrown instead of wrapping silently.
class CountOverflow : public std::runtime_error {
 public:
  explicit CountOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Expected structure and activity of one benchmark run: number of atomic
// models, total internal/external transitions, and total received payloads
// across all atomics, for spec.n_events injected events.
struct AnalyticPrediction {
  std::uint64_t n_atomics = 0;
  std::uint64_t n_delta_int = 0;
  std::uint64_t n_delta_ext = 0;
  std::uint64_t n_events = 0;

  bool operator==(const AnalyticPrediction&) const = default;
};

// Evaluates the closed-form / recursive count predictions for `spec`.
// Transition and event totals scale linearly with spec.n_events; the atomic
// count does not. All arithmetic is overflow-checked; throws CountOverflow.
AnalyticPrediction predict(const BenchmarkSpec& spec);

// Per-family single-event building blocks, exposed for cross-checks.
std::uint64_t li_transition_count(int width, int depth);
// Per-level sum and closed form; they must agree and both are exposed so
// tests can assert that.
std::uint64_t hi_transition_count_summed(int width, int depth);
std::uint64_t hi_transition_count_closed(int width, int depth);
std::uint64_t homod_atomic_count(int width, int depth);
std::uint64_t homod_transition_count(int width, int depth);
std::uint64_t homod_event_count(int width, int depth);
std::uint64_t homem_transition_count(int width, int depth);
std::uint64_t homem_event_count(int width, int depth);

}  // namespace devstone
