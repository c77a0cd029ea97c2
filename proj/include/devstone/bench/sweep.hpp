#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <vector>

#include "devstone/bench/run.hpp"

namespace devstone::bench {

struct AxisRange {
  int min = 2;
  int step = 1;
  int max = 2;

  // min, min+step, ... while <= max. Throws HarnessError if step < 1.
  std::vector<int> values() const;
};

struct FamilyPlan {
  Family family = Family::LI;
  AxisRange width;
  AxisRange depth;
};

struct SweepConfig {
  std::vector<FamilyPlan> plans;
  int trials = 10;
  double time_cap_s = 1200.0;
  std::uint64_t mem_cap_bytes = 4ull * 1024 * 1024 * 1024;
  double delta_int = 0.0;
  double delta_ext = 0.0;
  std::int64_t n_events = 1;
  std::uint64_t step_cap = pdevs::Simulation::default_step_cap;
  bool isolate = true;
};

// The published measurement grid: LI 2:100:1502 x 1:100:1501, HI and HO
// 2:100:1102 x 1:100:1101, HOmod and HOmem 2:1:10 x 1:1:10, 10 trials,
// caps 1200 s and 4 GiB.
SweepConfig paper_profile();

// A minutes-scale subset: LI/HI/HO capped at 502 x 501 with the same
// coarse steps, HOmod/HOmem up to 8 x 8, 3 trials, and a 120 s per-trial
// time cap so the exponentially large cells truncate instead of running
// for hours.
SweepConfig desk_profile();

// Flat key-value text: global `key = value` lines first, then one
// `[Family]` section per family with width_min/width_step/width_max and
// depth_min/depth_step/depth_max. '#' starts a comment. Global keys
// override `base`; if the file declares any family section, the file's
// family list replaces base.plans entirely. Throws HarnessError with a
// line number on malformed input.
SweepConfig parse_sweep_config(std::istream& in, SweepConfig base = {});

std::size_t sweep_cell_count(const SweepConfig& config);

// Runs every cell (family x width x depth), reporting progress to stderr.
// A cell whose prediction or harness fails is recorded as build_failed and
// the sweep continues. on_cell (if given) fires after each cell with the
// finished result and progress counters — callers use it to flush output
// incrementally.
std::vector<RunResult> run_sweep(
    const SweepConfig& config,
    const std::function<void(const RunResult&, std::size_t done, std::size_t total)>&
        on_cell = {});

}  // namespace devstone::bench
