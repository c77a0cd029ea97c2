#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "devstone/analytics.hpp"
#include "devstone/benchmark_spec.hpp"
#include "devstone/counters.hpp"
#include "pdevs/simulation.hpp"

namespace devstone::bench {

// Infrastructure failure (spawn failure, protocol corruption, a child that
// died abnormally, an internal invariant broken). Distinct from the four
// benchmark outcomes, which are data, not exceptions.
class HarnessError : public std::runtime_error {
 public:
  explicit HarnessError(const std::string& what) : std::runtime_error(what) {}
};

enum class RunStatus { ok, time_exceeded, mem_exceeded, build_failed };

const char* to_string(RunStatus s);

struct RunConfig {
  BenchmarkSpec spec;
  int trials = 10;
  double time_cap_s = 1200.0;
  std::uint64_t mem_cap_bytes = 4ull * 1024 * 1024 * 1024;
  std::uint64_t step_cap = pdevs::Simulation::default_step_cap;
  // Run each trial in a forked child so the memory high-water mark reflects
  // exactly one model instance. In-process mode is for debugging; its
  // memory figures include everything this process ever did.
  bool isolate = true;
};

struct TrialOutcome {
  RunStatus status = RunStatus::ok;
  double wall_time_s = 0.0;          // timed simulation loop only
  std::uint64_t peak_mem_bytes = 0;  // process high-water mark
  std::uint64_t n_atomics = 0;
  TransitionCounters counters;       // meaningful when status == ok
};

struct RunResult {
  BenchmarkSpec spec;
  int trials = 0;  // trials actually executed (== requested unless truncated)
  std::vector<double> trial_wall_times_s;
  std::vector<std::uint64_t> trial_peak_mem_bytes;
  double mean_wall_time_s = 0.0;
  double mean_peak_mem_bytes = 0.0;
  TransitionCounters observed;  // from the last completed trial
  AnalyticPrediction predicted;
  RunStatus status = RunStatus::ok;
};

// Runs config.trials trials (stopping early after a truncated or failed
// trial: later trials of the same cell would only repeat the truncation).
// Wall time covers the simulation loop only — model construction and
// initialization are excluded by measuring inside the child between the
// build handshake and quiescence. Truncated trials report exactly the cap
// as their wall time (time cap) or peak memory (memory cap).
//
// Throws HarnessError on infrastructure failures and when a completed
// trial's counters contradict the analytic prediction (ok results always
// satisfy observed == predicted).
RunResult run_benchmark(const RunConfig& config);

// One trial in this process. `after_build` (if given) runs between model
// initialization and the timed loop — tests use it to prove setup cost
// never leaks into the measurement. Build errors propagate as exceptions.
TrialOutcome run_trial_in_process(const RunConfig& config,
                                  const std::function<void()>& after_build = {});

}  // namespace devstone::bench
