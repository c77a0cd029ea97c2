#include "devstone/devstone_atomic.hpp"

#include "devstone/dhrystone.hpp"
#include "pdevs/errors.hpp"

namespace devstone {

DevstoneAtomic::DevstoneAtomic(double delta_int_delay, double delta_ext_delay,
                               std::shared_ptr<TransitionCounters> counters)
    : delta_int_delay_(delta_int_delay),
      delta_ext_delay_(delta_ext_delay),
      counters_(std::move(counters)),
      sigma_(pdevs::infinity()) {
  if (!counters_) {
    throw pdevs::ModelError("workload atomic requires a counter block");
  }
}

void DevstoneAtomic::init() {
  list_.clear();
  phase_ = Phase::passive;
  sigma_ = pdevs::infinity();
}

void DevstoneAtomic::delta_int() {
  ++counters_->num_delt_ints;
  dhrystone_burn(delta_int_delay_);
  list_.clear();
  phase_ = Phase::passive;
  sigma_ = pdevs::infinity();
}

void DevstoneAtomic::delta_ext(pdevs::Time /*e*/,
                               const std::vector<pdevs::ValueBag>& bags) {
  ++counters_->num_delt_exts;
  dhrystone_burn(delta_ext_delay_);
  std::uint64_t received = 0;
  for (const auto& bag : bags) received += bag.size();
  counters_->num_of_events += received;
  for (const auto& bag : bags) list_.insert(list_.end(), bag.begin(), bag.end());
  phase_ = Phase::active;
  sigma_ = 0;
}

void DevstoneAtomic::delta_con(const std::vector<pdevs::ValueBag>& bags) {
  bool any = false;
  for (const auto& bag : bags) {
    if (!bag.empty()) {
      any = true;
      break;
    }
  }
  // Composition: resolve the internal event first, then absorb the input at
  // zero elapsed time. With nothing actually received this collapses to the
  // internal transition alone.
  delta_int();
  if (any) delta_ext(0, bags);
}

void DevstoneAtomic::lambda(std::vector<pdevs::ValueBag>& out) const {
  out[0] = list_;
}

pdevs::Time DevstoneAtomic::ta() const { return sigma_; }

std::unique_ptr<pdevs::AtomicBehavior> make_devstone_atomic(
    double delta_int_delay, double delta_ext_delay,
    std::shared_ptr<TransitionCounters> counters) {
  return std::make_unique<DevstoneAtomic>(delta_int_delay, delta_ext_delay,
                                          std::move(counters));
}

}  // namespace devstone
