#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdevs/coupled.hpp"
#include "pdevs/errors.hpp"
#include "pdevs/injection.hpp"
#include "pdevs/types.hpp"

namespace pdevs {

// Sequential event-driven simulator for a coupled-model tree.
//
// Construction validates the tree, flattens all coupling chains into direct
// routes from flood sources (root input ports and atomic output ports) to
// atomic input ports, and rejects instantaneous routing cycles. The model
// tree must outlive and not change structurally under the simulation.
//
// step() executes one simultaneous event: it advances the clock to the next
// event time, delivers injections due at that time, fires the output
// function of every imminent atomic and routes the emitted bags, then
// applies exactly one transition per involved atomic:
//   imminent only            -> delta_int
//   input only               -> delta_ext with e = clock - time_of_last
//   imminent and input       -> delta_con
// Bags from all simultaneous sources to one port merge into a single bag
// per step; empty bags are never delivered.
class Simulation {
 public:
  static constexpr std::uint64_t default_step_cap = 1'000'000'000ull;

  // Throws ModelError if the tree fails validation or the schedule names a
  // port that is not a root input port; throws SimulationError on a routing
  // cycle or a negative initial time advance.
  Simulation(CoupledModel& root, InjectionSchedule schedule = {});

  Time clock() const { return clock_; }
  // Time of the next scheduled internal or injected event; infinity() at
  // quiescence.
  Time next_event_time() const;
  bool quiescent() const { return next_event_time() == infinity(); }

  // Throws SimulationError when quiescent.
  void step();

  // Steps until quiescence; returns steps executed by this call. Throws
  // SimulationError if more than max_steps steps would be needed (suspected
  // livelock).
  std::uint64_t run_to_quiescence(std::uint64_t max_steps = default_step_cap);

  std::uint64_t steps_executed() const { return steps_; }

  std::size_t atomic_count() const { return atomics_.size(); }
  Time time_of_last(std::size_t atomic_index) const;
  Time time_of_next(std::size_t atomic_index) const;

 private:
  struct Destination {
    std::uint32_t atomic;
    std::uint32_t slot;
  };

  struct AtomicSlot {
    AtomicModel* model = nullptr;
    Time t_last = 0;
    Time t_next = 0;
    std::vector<ValueBag> inputs;                    // one bag per input port
    std::vector<std::vector<Destination>> routes;    // one list per output port
    bool has_input = false;
    bool imminent = false;
    bool in_active = false;
    bool in_candidates = false;
  };

  void collect_atomics(CoupledModel& node);
  void build_routes(CoupledModel& root);
  void deliver(const std::vector<Destination>& dests, const ValueBag& bag);
  void deliver(const std::vector<Destination>& dests, Payload payload);
  void note_input(std::uint32_t atomic_index);
  void schedule_after_transition(AtomicSlot& slot, std::uint32_t index, Time now);

  std::vector<AtomicSlot> atomics_;
  std::vector<std::vector<Destination>> injection_routes_;  // per root input port
  std::vector<Injection> injections_;
  std::vector<std::uint32_t> injection_port_slots_;  // parallel to injections_
  std::size_t injection_pos_ = 0;

  std::vector<std::uint32_t> active_;      // atomics with finite t_next
  std::vector<std::uint32_t> candidates_;  // atomics transitioning this step
  std::vector<ValueBag> lambda_scratch_;

  Time clock_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace pdevs
