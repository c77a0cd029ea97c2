#include "pdevs/validate.hpp"

#include <unordered_set>

namespace pdevs {

namespace {

void check_endpoint(const CoupledModel& owner, const std::string& path,
                    const Endpoint& e, PortDirection expected,
                    std::vector<Violation>& out) {
  if (e.is_self()) {
    if (!owner.has_port(e.port, expected)) {
      out.push_back({path, "boundary endpoint " + to_string(e) + " names no " +
                               (expected == PortDirection::input ? "input" : "output") +
                               " port"});
    }
    return;
  }
  const Component* child = owner.find_component(e.component);
  if (child == nullptr) {
    out.push_back({path, "coupling endpoint " + to_string(e) +
                             " names an unknown component"});
    return;
  }
  if (!child->has_port(e.port, expected)) {
    out.push_back({path, "coupling endpoint " + to_string(e) + " names no " +
                             (expected == PortDirection::input ? "input" : "output") +
                             " port on '" + e.component + "'"});
  }
}

void walk(const CoupledModel& node, const std::string& path,
          std::vector<Violation>& out) {
  for (const auto& c : node.couplings(CouplingClass::eic)) {
    if (!c.from.is_self()) {
      out.push_back({path, "EIC coupling " + to_string(c.from) + " -> " +
                               to_string(c.to) + " does not start at the boundary"});
    } else {
      check_endpoint(node, path, c.from, PortDirection::input, out);
    }
    if (c.to.is_self()) {
      out.push_back({path, "EIC coupling " + to_string(c.from) + " -> " +
                               to_string(c.to) + " must end at a component"});
    } else {
      check_endpoint(node, path, c.to, PortDirection::input, out);
    }
  }
  for (const auto& c : node.couplings(CouplingClass::ic)) {
    if (c.from.is_self() || c.to.is_self()) {
      out.push_back({path, "IC coupling " + to_string(c.from) + " -> " + to_string(c.to) +
                               " touches the boundary"});
      continue;
    }
    if (c.from.component == c.to.component) {
      out.push_back({path, "IC coupling " + to_string(c.from) + " -> " + to_string(c.to) +
                               " couples a component to itself"});
    }
    check_endpoint(node, path, c.from, PortDirection::output, out);
    check_endpoint(node, path, c.to, PortDirection::input, out);
  }
  for (const auto& c : node.couplings(CouplingClass::eoc)) {
    if (c.from.is_self()) {
      out.push_back({path, "EOC coupling " + to_string(c.from) + " -> " +
                               to_string(c.to) + " must start at a component"});
    } else {
      check_endpoint(node, path, c.from, PortDirection::output, out);
    }
    if (!c.to.is_self()) {
      out.push_back({path, "EOC coupling " + to_string(c.from) + " -> " +
                               to_string(c.to) + " does not end at the boundary"});
    } else {
      check_endpoint(node, path, c.to, PortDirection::output, out);
    }
  }

  for (const auto& child : node.components()) {
    if (!child->is_atomic()) {
      walk(static_cast<const CoupledModel&>(*child), path + "/" + child->name(), out);
    }
  }
}

}  // namespace

ValidationReport validate(const CoupledModel& root) {
  ValidationReport report;
  walk(root, root.name(), report.violations);
  return report;
}

}  // namespace pdevs
