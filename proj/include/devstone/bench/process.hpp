#pragma once

#include <sys/types.h>

#include <cstdint>
#include <functional>
#include <string>

#include "devstone/bench/run.hpp"
#include "devstone/counters.hpp"

namespace devstone::bench {

// Raw outcome of one forked benchmark child. The parent enforces the memory
// cap twice (address-space limit inside the child plus a watchdog sampling
// /proc/<pid>/status VmHWM at >= 100 Hz) and starts the time cap when the
// child reports its model built, so build time never counts against the cap.
// Peak memory comes from the kernel's rusage high-water mark after reaping.
struct ChildOutcome {
  bool built = false;           // build handshake seen
  bool finished = false;        // full protocol (counters + wall + done)
  bool killed_time = false;     // watchdog kill, run exceeded time cap
  bool killed_mem = false;      // watchdog kill, high-water mark over cap
  bool oom = false;             // child reported an allocation failure
  bool oom_during_build = false;
  bool build_error = false;     // child reported a model construction error
  bool run_error = false;       // child reported a simulation error
  std::string error_message;
  std::uint64_t n_atomics = 0;
  TransitionCounters counters;
  double wall_time_s = 0.0;           // child-reported timed loop
  double elapsed_run_s = 0.0;         // parent-observed time since build handshake
  std::uint64_t peak_mem_bytes = 0;   // rusage high-water mark
  int exit_code = -1;                 // valid if exited normally
  int term_signal = 0;                // valid if terminated by a signal
};

// Forks, applies the memory cap, runs the build/simulate protocol in the
// child, babysits it, reaps it. Throws HarnessError only on infrastructure
// failure (pipe/fork/waitpid breakage), never on child outcomes.
ChildOutcome run_trial_in_child(const RunConfig& config);

// Generic capped child for harness self-tests: runs `body` in a fork with
// the same cap enforcement (time cap measured from spawn) and returns how
// it ended plus its memory high-water mark. apply_rlimit=false drops the
// in-child address-space limit so only the watchdog enforces the memory
// cap (used to exercise the sampling path on its own).
struct ProbeOutcome {
  bool exited = false;
  int exit_code = -1;
  int term_signal = 0;
  bool killed_time = false;
  bool killed_mem = false;
  std::uint64_t peak_mem_bytes = 0;
};

ProbeOutcome run_probe_in_child(const std::function<int()>& body, double time_cap_s,
                                std::uint64_t mem_cap_bytes, bool apply_rlimit = true);

// Memory high-water mark of a live process / this process, in bytes, from
// /proc/<pid>/status (0 if unreadable).
std::uint64_t read_vmhwm_bytes(pid_t pid);
std::uint64_t self_vmhwm_bytes();

}  // namespace devstone::bench
