#pragma once

#include <vector>

#include "pdevs/types.hpp"

namespace pdevs {

// The behavioral part of an atomic model. The simulator owns the call
// discipline:
//   - init() once before time starts;
//   - delta_int() when the model is imminent and received nothing;
//   - delta_ext(e, bags) when input arrived and the model is not imminent,
//     with e the time elapsed since its previous transition;
//   - delta_con(bags) when the model is imminent and input arrived in the
//     same step (bags are never all-empty in that call);
//   - lambda(out) immediately before delta_int/delta_con, filling one bag
//     per output port (out is pre-sized and cleared by the caller);
//   - ta() after init and after every transition to schedule the next
//     internal event; must be >= 0 or infinity().
// Input/output bags align positionally with the owning model's port lists.
class AtomicBehavior {
 public:
  virtual ~AtomicBehavior() = default;

  virtual void init() = 0;
  virtual void delta_int() = 0;
  virtual void delta_ext(Time e, const std::vector<ValueBag>& bags) = 0;
  virtual void delta_con(const std::vector<ValueBag>& bags) = 0;
  virtual void lambda(std::vector<ValueBag>& out) const = 0;
  virtual Time ta() const = 0;
};

}  // namespace pdevs
