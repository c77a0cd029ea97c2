#include "pdevs/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "pdevs/validate.hpp"

namespace pdevs {

namespace {

std::string endpoint_key(const Endpoint& e) {
  std::string key;
  key.reserve(e.component.size() + e.port.size() + 1);
  key += e.component;
  key += '\x1f';
  key += e.port;
  return key;
}

}  // namespace

// Flattens coupling chains into direct source-to-atomic routes. Sources are
// root input ports and atomic output ports; everything in between (coupled
// boundary ports) is walked through once here so the step loop never touches
// the coupling relations. Multiple coupling paths to the same port yield
// multiple deliveries (payload multiplicity is preserved); a cycle among
// boundary ports is rejected.
class RouteBuilder {
 public:
  RouteBuilder(CoupledModel& root,
               const std::unordered_map<const AtomicModel*, std::uint32_t>& atomic_index)
      : root_(&root), atomic_index_(atomic_index) {
    index_parents(root);
  }

  CoupledModel* parent_of(const Component* c) const {
    auto it = parents_.find(c);
    return it == parents_.end() ? nullptr : it->second;
  }

  void resolve(CoupledModel* owner, const Endpoint& from,
               std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    const std::string frame = frame_key(owner, from);
    if (!on_stack_.insert(frame).second) {
      throw SimulationError("instantaneous routing cycle through " + owner->name() +
                            " at " + to_string(from));
    }
    const auto& edges = edges_for(owner);
    auto it = edges.find(endpoint_key(from));
    if (it != edges.end()) {
      for (const Coupling* c : it->second) {
        follow(owner, *c, out);
      }
    }
    on_stack_.erase(frame);
  }

 private:
  using Edges = std::unordered_map<std::string, std::vector<const Coupling*>>;

  void follow(CoupledModel* owner, const Coupling& c,
              std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    if (c.to.is_self()) {
      // EOC: the payload surfaces on the owner's boundary output.
      if (owner == root_) return;  // leaves the system
      CoupledModel* parent = parent_of(owner);
      resolve(parent, Endpoint{owner->name(), c.to.port}, out);
      return;
    }
    Component* child = owner->find_component(c.to.component);
    if (child->is_atomic()) {
      auto* atomic = static_cast<AtomicModel*>(child);
      int slot = atomic->port_index(c.to.port, PortDirection::input);
      out.emplace_back(atomic_index_.at(atomic), static_cast<std::uint32_t>(slot));
      return;
    }
    resolve(static_cast<CoupledModel*>(child), Endpoint::self(c.to.port), out);
  }

  const Edges& edges_for(CoupledModel* owner) {
    auto it = edge_cache_.find(owner);
    if (it != edge_cache_.end()) return it->second;
    Edges edges;
    for (CouplingClass cls : {CouplingClass::eic, CouplingClass::ic, CouplingClass::eoc}) {
      for (const Coupling& c : owner->couplings(cls)) {
        edges[endpoint_key(c.from)].push_back(&c);
      }
    }
    return edge_cache_.emplace(owner, std::move(edges)).first->second;
  }

  void index_parents(CoupledModel& node) {
    for (const auto& child : node.components()) {
      parents_[child.get()] = &node;
      if (!child->is_atomic()) {
        index_parents(static_cast<CoupledModel&>(*child));
      }
    }
  }

  std::string frame_key(const CoupledModel* owner, const Endpoint& from) const {
    return std::to_string(reinterpret_cast<std::uintptr_t>(owner)) + '\x1f' +
           endpoint_key(from);
  }

  CoupledModel* root_;
  const std::unordered_map<const AtomicModel*, std::uint32_t>& atomic_index_;
  std::unordered_map<const Component*, CoupledModel*> parents_;
  std::unordered_map<const CoupledModel*, Edges> edge_cache_;
  std::unordered_set<std::string> on_stack_;
};

Simulation::Simulation(CoupledModel& root, InjectionSchedule schedule) {
  ValidationReport report = validate(root);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    std::string msg = "model validation failed: " + v.path + ": " + v.message;
    if (report.violations.size() > 1) {
      msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
    }
    throw ModelError(msg);
  }

  collect_atomics(root);
  build_routes(root);

  injections_ = schedule.entries();
  injection_port_slots_.reserve(injections_.size());
  for (const Injection& inj : injections_) {
    int slot = root.port_index(inj.port, PortDirection::input);
    if (slot < 0) {
      throw ModelError("injection targets unknown root input port '" + inj.port + "'");
    }
    injection_port_slots_.push_back(static_cast<std::uint32_t>(slot));
  }

  for (std::uint32_t i = 0; i < atomics_.size(); ++i) {
    AtomicSlot& slot = atomics_[i];
    slot.model->behavior().init();
    schedule_after_transition(slot, i, 0.0);
  }
}

void Simulation::collect_atomics(CoupledModel& node) {
  for (const auto& child : node.components()) {
    if (child->is_atomic()) {
      AtomicSlot slot;
      slot.model = static_cast<AtomicModel*>(child.get());
      slot.inputs.resize(slot.model->input_ports().size());
      slot.routes.resize(slot.model->output_ports().size());
      atomics_.push_back(std::move(slot));
    } else {
      collect_atomics(static_cast<CoupledModel&>(*child));
    }
  }
}

void Simulation::build_routes(CoupledModel& root) {
  std::unordered_map<const AtomicModel*, std::uint32_t> atomic_index;
  atomic_index.reserve(atomics_.size());
  for (std::uint32_t i = 0; i < atomics_.size(); ++i) {
    atomic_index.emplace(atomics_[i].model, i);
  }

  RouteBuilder builder(root, atomic_index);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dests;
  auto into = [&](std::vector<Destination>& routes) {
    routes.reserve(dests.size());
    for (auto [a, s] : dests) routes.push_back(Destination{a, s});
    dests.clear();
  };

  injection_routes_.resize(root.input_ports().size());
  for (std::size_t p = 0; p < root.input_ports().size(); ++p) {
    builder.resolve(&root, Endpoint::self(root.input_ports()[p].name), dests);
    into(injection_routes_[p]);
  }

  for (auto& slot : atomics_) {
    CoupledModel* owner = builder.parent_of(slot.model);
    const auto& out_ports = slot.model->output_ports();
    for (std::size_t p = 0; p < out_ports.size(); ++p) {
      builder.resolve(owner, Endpoint{slot.model->name(), out_ports[p].name}, dests);
      into(slot.routes[p]);
    }
  }
}

Time Simulation::next_event_time() const {
  Time t = injection_pos_ < injections_.size() ? injections_[injection_pos_].time
                                               : infinity();
  for (std::uint32_t i : active_) {
    t = std::min(t, atomics_[i].t_next);
  }
  return t;
}

void Simulation::note_input(std::uint32_t atomic_index) {
  AtomicSlot& slot = atomics_[atomic_index];
  if (!slot.has_input) {
    slot.has_input = true;
    if (!slot.in_candidates) {
      slot.in_candidates = true;
      candidates_.push_back(atomic_index);
    }
  }
}

void Simulation::deliver(const std::vector<Destination>& dests, const ValueBag& bag) {
  for (const Destination& d : dests) {
    ValueBag& in = atomics_[d.atomic].inputs[d.slot];
    in.insert(in.end(), bag.begin(), bag.end());
    note_input(d.atomic);
  }
}

void Simulation::deliver(const std::vector<Destination>& dests, Payload payload) {
  for (const Destination& d : dests) {
    atomics_[d.atomic].inputs[d.slot].push_back(payload);
    note_input(d.atomic);
  }
}

void Simulation::schedule_after_transition(AtomicSlot& slot, std::uint32_t index,
                                           Time now) {
  Time ta = slot.model->behavior().ta();
  if (std::isnan(ta) || ta < 0) {
    throw SimulationError("atomic '" + slot.model->name() +
                          "' returned a negative or NaN time advance");
  }
  slot.t_next = ta == infinity() ? infinity() : now + ta;
  if (slot.t_next != infinity() && !slot.in_active) {
    slot.in_active = true;
    active_.push_back(index);
  }
}

void Simulation::step() {
  // Compact the active list and find the next event time in one pass.
  Time t = injection_pos_ < injections_.size() ? injections_[injection_pos_].time
                                               : infinity();
  {
    std::size_t w = 0;
    for (std::size_t r = 0; r < active_.size(); ++r) {
      std::uint32_t i = active_[r];
      AtomicSlot& slot = atomics_[i];
      if (slot.t_next == infinity()) {
        slot.in_active = false;
        continue;
      }
      active_[w++] = i;
      t = std::min(t, slot.t_next);
    }
    active_.resize(w);
  }
  if (t == infinity()) {
    throw SimulationError("step() called on a quiescent simulation");
  }

  // Imminent atomics fire their output functions this step.
  for (std::uint32_t i : active_) {
    AtomicSlot& slot = atomics_[i];
    if (slot.t_next == t) {
      slot.imminent = true;
      slot.in_candidates = true;
      candidates_.push_back(i);
    }
  }
  std::sort(candidates_.begin(), candidates_.end());

  // External stimulus due now merges with routed outputs before anyone
  // transitions.
  while (injection_pos_ < injections_.size() &&
         injections_[injection_pos_].time == t) {
    deliver(injection_routes_[injection_port_slots_[injection_pos_]],
            injections_[injection_pos_].payload);
    ++injection_pos_;
  }

  const std::size_t n_imminent = candidates_.size();
  for (std::size_t k = 0; k < n_imminent; ++k) {
    AtomicSlot& slot = atomics_[candidates_[k]];
    lambda_scratch_.resize(slot.routes.size());
    for (ValueBag& bag : lambda_scratch_) bag.clear();
    slot.model->behavior().lambda(lambda_scratch_);
    for (std::size_t p = 0; p < slot.routes.size(); ++p) {
      if (!lambda_scratch_[p].empty() && !slot.routes[p].empty()) {
        deliver(slot.routes[p], lambda_scratch_[p]);
      }
    }
  }

  // Receivers discovered during routing joined candidates_; restore index
  // order so transitions run deterministically.
  std::sort(candidates_.begin(), candidates_.end());

  for (std::uint32_t i : candidates_) {
    AtomicSlot& slot = atomics_[i];
    AtomicBehavior& behavior = slot.model->behavior();
    if (slot.imminent && !slot.has_input) {
      behavior.delta_int();
    } else if (slot.imminent) {
      behavior.delta_con(slot.inputs);
    } else {
      behavior.delta_ext(t - slot.t_last, slot.inputs);
    }
    slot.t_last = t;
    schedule_after_transition(slot, i, t);
    if (slot.has_input) {
      for (ValueBag& bag : slot.inputs) bag.clear();
      slot.has_input = false;
    }
    slot.imminent = false;
    slot.in_candidates = false;
  }
  candidates_.clear();

  clock_ = t;
  ++steps_;
}

std::uint64_t Simulation::run_to_quiescence(std::uint64_t max_steps) {
  std::uint64_t n = 0;
  while (next_event_time() != infinity()) {
    if (n >= max_steps) {
      throw SimulationError("step cap of " + std::to_string(max_steps) +
                            " exceeded; suspected instantaneous livelock");
    }
    step();
    ++n;
  }
  return n;
}

Time Simulation::time_of_last(std::size_t atomic_index) const {
  if (atomic_index >= atomics_.size()) {
    throw SimulationError("atomic index out of range");
  }
  return atomics_[atomic_index].t_last;
}

Time Simulation::time_of_next(std::size_t atomic_index) const {
  if (atomic_index >= atomics_.size()) {
    throw SimulationError("atomic index out of range");
  }
  return atomics_[atomic_index].t_next;
}

}  // namespace pdevs
