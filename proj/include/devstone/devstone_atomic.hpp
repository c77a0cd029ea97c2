#pragma once

#include <memory>
#include <vector>

#include "pdevs/atomic_behavior.hpp"
#include "pdevs/types.hpp"
#include "devstone/counters.hpp"

namespace devstone {

// The instrumented workload atomic used by every benchmark family.
//
//   init:       list empty, passive, sigma = infinity
//   delta_int:  count it, burn delta_int_delay, clear list, passivate
//   delta_ext:  count it, burn delta_ext_delay, count received payloads,
//               append them to list, go active with sigma = 0
//   delta_con:  delta_ext applied after delta_int (composition); with an
//               all-empty bag it degenerates to delta_int alone
//   lambda:     emit list on the single output port
//   ta:         sigma
//
// One input port, one output port. Counters are shared across the whole
// model instance.
class DevstoneAtomic final : public pdevs::AtomicBehavior {
 public:
  enum class Phase { passive, active };

  DevstoneAtomic(double delta_int_delay, double delta_ext_delay,
                 std::shared_ptr<TransitionCounters> counters);

  void init() override;
  void delta_int() override;
  void delta_ext(pdevs::Time e, const std::vector<pdevs::ValueBag>& bags) override;
  void delta_con(const std::vector<pdevs::ValueBag>& bags) override;
  void lambda(std::vector<pdevs::ValueBag>& out) const override;
  pdevs::Time ta() const override;

  // State access for behavioral equivalence tests.
  const pdevs::ValueBag& list() const { return list_; }
  Phase phase() const { return phase_; }
  pdevs::Time sigma() const { return sigma_; }

 private:
  double delta_int_delay_;
  double delta_ext_delay_;
  std::shared_ptr<TransitionCounters> counters_;

  pdevs::ValueBag list_;
  Phase phase_ = Phase::passive;
  pdevs::Time sigma_;
};

std::unique_ptr<pdevs::AtomicBehavior> make_devstone_atomic(
    double delta_int_delay, double delta_ext_delay,
    std::shared_ptr<TransitionCounters> counters);

}  // namespace devstone
