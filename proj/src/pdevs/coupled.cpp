#include "pdevs/coupled.hpp"

#include "pdevs/errors.hpp"

namespace pdevs {

namespace {

std::string coupling_key(const Endpoint& from, const Endpoint& to) {
  std::string key;
  key.reserve(from.component.size() + from.port.size() + to.component.size() +
              to.port.size() + 3);
  key += from.component;
  key += '\x1f';
  key += from.port;
  key += '\x1f';
  key += to.component;
  key += '\x1f';
  key += to.port;
  return key;
}

}  // namespace

CoupledModel::CoupledModel(std::string name, std::vector<std::string> input_ports,
                           std::vector<std::string> output_ports)
    : Component(std::move(name), std::move(input_ports), std::move(output_ports)) {}

CoupledModel& CoupledModel::add_component(std::unique_ptr<Component> child) {
  if (!child) {
    throw ModelError("coupled model '" + name() + "': null component");
  }
  if (child->name() == "SELF") {
    throw ModelError("coupled model '" + name() + "': component name 'SELF' is reserved");
  }
  if (child_index_.count(child->name()) != 0) {
    throw ModelError("coupled model '" + name() + "': duplicate component name '" +
                     child->name() + "'");
  }
  child_index_.emplace(child->name(), children_.size());
  children_.push_back(std::move(child));
  return *this;
}

Component* CoupledModel::find_component(std::string_view name) const {
  auto it = child_index_.find(std::string(name));
  return it == child_index_.end() ? nullptr : children_[it->second].get();
}

CoupledModel& CoupledModel::add_coupling(const Endpoint& from, const Endpoint& to) {
  const std::string where = "coupled model '" + name() + "': ";

  CouplingClass cls;
  if (from.is_self()) {
    if (to.is_self()) {
      throw ModelError(where + "coupling " + to_string(from) + " -> " + to_string(to) +
                       " connects the boundary to itself");
    }
    cls = CouplingClass::eic;
  } else if (to.is_self()) {
    cls = CouplingClass::eoc;
  } else {
    if (from.component == to.component) {
      throw ModelError(where + "coupling " + to_string(from) + " -> " + to_string(to) +
                       " couples component '" + from.component + "' to itself");
    }
    cls = CouplingClass::ic;
  }

  auto check_end = [&](const Endpoint& e, bool wants_input_port) {
    // EIC sources read the boundary's input ports; EOC targets write its
    // output ports. Child endpoints use the child's own port directions.
    PortDirection dir =
        wants_input_port ? PortDirection::input : PortDirection::output;
    if (e.is_self()) {
      if (!has_port(e.port, dir)) {
        throw ModelError(where + "boundary has no " +
                         (dir == PortDirection::input ? "input" : "output") +
                         " port '" + e.port + "'");
      }
      return;
    }
    Component* child = find_component(e.component);
    if (child == nullptr) {
      throw ModelError(where + "unknown component '" + e.component + "' in coupling");
    }
    if (!child->has_port(e.port, dir)) {
      throw ModelError(where + "component '" + e.component + "' has no " +
                       (dir == PortDirection::input ? "input" : "output") +
                       " port '" + e.port + "'");
    }
  };

  switch (cls) {
    case CouplingClass::eic:
      check_end(from, true);   // boundary input port
      check_end(to, true);     // child input port
      break;
    case CouplingClass::ic:
      check_end(from, false);  // child output port
      check_end(to, true);     // child input port
      break;
    case CouplingClass::eoc:
      check_end(from, false);  // child output port
      check_end(to, false);    // boundary output port
      break;
  }

  if (dedup_.insert(coupling_key(from, to)).second) {
    couplings_ref(cls).push_back(Coupling{from, to});
  }
  return *this;
}

const std::vector<Coupling>& CoupledModel::couplings(CouplingClass c) const {
  return const_cast<CoupledModel*>(this)->couplings_ref(c);
}

std::vector<Coupling>& CoupledModel::mutable_couplings(CouplingClass c) {
  return couplings_ref(c);
}

std::vector<Coupling>& CoupledModel::couplings_ref(CouplingClass c) {
  switch (c) {
    case CouplingClass::eic: return eic_;
    case CouplingClass::ic: return ic_;
    case CouplingClass::eoc: return eoc_;
  }
  return ic_;  // unreachable
}

std::size_t atomic_count(const Component& root) {
  if (root.is_atomic()) return 1;
  std::size_t n = 0;
  for (const auto& child : static_cast<const CoupledModel&>(root).components()) {
    n += atomic_count(*child);
  }
  return n;
}

}  // namespace pdevs
