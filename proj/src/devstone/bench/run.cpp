#include "devstone/bench/run.hpp"

#include <signal.h>

#include <chrono>
#include <memory>
#include <numeric>
#include <string>

#include "devstone/bench/process.hpp"
#include "devstone/generator.hpp"
#include "pdevs/errors.hpp"

namespace devstone::bench {

namespace {

std::string describe(const BenchmarkSpec& spec) {
  return std::string(to_string(spec.family)) + " width=" + std::to_string(spec.width) +
         " depth=" + std::to_string(spec.depth);
}

TrialOutcome map_child_outcome(const ChildOutcome& c, const RunConfig& config) {
  TrialOutcome t;
  t.n_atomics = c.n_atomics;
  if (c.finished && c.exit_code == 0) {
    t.status = RunStatus::ok;
    t.wall_time_s = c.wall_time_s;
    t.peak_mem_bytes = c.peak_mem_bytes;
    t.counters = c.counters;
    return t;
  }
  if (c.killed_time) {
    t.status = RunStatus::time_exceeded;
    t.wall_time_s = config.time_cap_s;  // truncated: report exactly the cap
    t.peak_mem_bytes = c.peak_mem_bytes;
    return t;
  }
  if (c.killed_mem || c.oom || (!c.finished && c.term_signal == SIGKILL)) {
    // Watchdog kill, reported allocation failure, or the kernel's own
    // out-of-memory kill: all mean the memory cap is what stopped the trial.
    t.status = RunStatus::mem_exceeded;
    t.peak_mem_bytes = config.mem_cap_bytes;  // truncated: report exactly the cap
    t.wall_time_s = c.oom_during_build || !c.built ? 0.0 : c.elapsed_run_s;
    return t;
  }
  if (c.build_error) {
    t.status = RunStatus::build_failed;
    t.peak_mem_bytes = c.peak_mem_bytes;
    return t;
  }
  if (c.run_error) {
    throw HarnessError("benchmark child failed mid-run: " + c.error_message);
  }
  throw HarnessError("benchmark child died unexpectedly (exit=" +
                     std::to_string(c.exit_code) +
                     " signal=" + std::to_string(c.term_signal) + ")");
}

}  // namespace

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::time_exceeded: return "time_exceeded";
    case RunStatus::mem_exceeded: return "mem_exceeded";
    case RunStatus::build_failed: return "build_failed";
  }
  return "?";
}

TrialOutcome run_trial_in_process(const RunConfig& config,
                                  const std::function<void()>& after_build) {
  auto counters = std::make_shared<TransitionCounters>();
  auto model = build(config.spec, counters);
  pdevs::Simulation sim(*model, injection_schedule(config.spec));

  TrialOutcome out;
  out.n_atomics = sim.atomic_count();
  if (after_build) after_build();

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::uint64_t steps = 0;
  while (!sim.quiescent()) {
    if (config.time_cap_s > 0 && elapsed() > config.time_cap_s) {
      out.status = RunStatus::time_exceeded;
      out.wall_time_s = config.time_cap_s;
      out.peak_mem_bytes = self_vmhwm_bytes();
      return out;
    }
    if (config.mem_cap_bytes > 0 && steps % 64 == 0 &&
        self_vmhwm_bytes() > config.mem_cap_bytes) {
      out.status = RunStatus::mem_exceeded;
      out.peak_mem_bytes = config.mem_cap_bytes;
      out.wall_time_s = elapsed();
      return out;
    }
    if (steps >= config.step_cap) {
      throw pdevs::SimulationError("step cap of " + std::to_string(config.step_cap) +
                                   " exceeded; suspected instantaneous livelock");
    }
    sim.step();
    ++steps;
  }

  out.status = RunStatus::ok;
  out.wall_time_s = elapsed();
  out.peak_mem_bytes = self_vmhwm_bytes();
  out.counters = *counters;
  return out;
}

RunResult run_benchmark(const RunConfig& config) {
  validate_spec(config.spec);
  if (config.trials < 1) {
    throw HarnessError("trials must be >= 1");
  }

  RunResult result;
  result.spec = config.spec;
  result.predicted = predict(config.spec);

  for (int trial = 0; trial < config.trials; ++trial) {
    TrialOutcome outcome = config.isolate
                               ? map_child_outcome(run_trial_in_child(config), config)
                               : run_trial_in_process(config);
    result.trial_wall_times_s.push_back(outcome.wall_time_s);
    result.trial_peak_mem_bytes.push_back(outcome.peak_mem_bytes);
    if (outcome.status != RunStatus::ok) {
      // Later trials of the same cell would only repeat the truncation.
      result.status = outcome.status;
      break;
    }
    result.observed = outcome.counters;
    if (outcome.counters.num_delt_ints != result.predicted.n_delta_int ||
        outcome.counters.num_delt_exts != result.predicted.n_delta_ext ||
        outcome.counters.num_of_events != result.predicted.n_events ||
        outcome.n_atomics != result.predicted.n_atomics) {
      throw HarnessError("completed trial contradicts the analytic prediction for " +
                         describe(config.spec));
    }
  }

  result.trials = static_cast<int>(result.trial_wall_times_s.size());
  if (result.trials > 0) {
    result.mean_wall_time_s =
        std::accumulate(result.trial_wall_times_s.begin(),
                        result.trial_wall_times_s.end(), 0.0) /
        result.trials;
    long double peak_sum = 0;
    for (std::uint64_t p : result.trial_peak_mem_bytes) peak_sum += p;
    result.mean_peak_mem_bytes = static_cast<double>(peak_sum / result.trials);
  }
  return result;
}

}  // namespace devstone::bench
