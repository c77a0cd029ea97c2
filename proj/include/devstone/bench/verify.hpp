#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "devstone/analytics.hpp"
#include "devstone/benchmark_spec.hpp"
#include "devstone/counters.hpp"
#include "pdevs/coupled.hpp"

namespace devstone::bench {

// One grid point of the prediction-vs-simulation comparison.
struct VerifyCell {
  BenchmarkSpec spec;
  AnalyticPrediction predicted;
  std::uint64_t observed_atomics = 0;
  TransitionCounters observed;
  bool match = false;
};

struct VerifyReport {
  std::vector<VerifyCell> cells;
  std::size_t mismatch_count = 0;

  bool ok() const { return mismatch_count == 0; }
};

// Builds the model for `spec`, simulates to quiescence in this process, and
// compares every observed figure against the analytic prediction.
VerifyCell verify_cell(const BenchmarkSpec& spec);

// Same comparison against an already-built tree (counters must be the block
// its atomics share). Lets tests verify deliberately broken structures.
VerifyCell verify_prebuilt(pdevs::CoupledModel& root,
                           const std::shared_ptr<TransitionCounters>& counters,
                           const BenchmarkSpec& spec);

// Full verification grid with one injected event and zero delays:
// LI/HI/HO over width 2..max_width x depth 1..max_depth, HOmod/HOmem over
// width 2..min(max_width,6) x depth 1..min(max_depth,6) (their counts grow
// so fast that larger cells stop being minutes-scale).
VerifyReport verify_grid(int max_width, int max_depth,
                         const std::vector<Family>& families);

// Human-readable report: one line per mismatch with the full observed and
// predicted decomposition, then a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace devstone::bench
