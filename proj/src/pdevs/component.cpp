#include "pdevs/component.hpp"

#include <unordered_set>

#include "pdevs/errors.hpp"

namespace pdevs {

namespace {

std::vector<Port> make_ports(const std::string& owner, std::vector<std::string> names,
                             PortDirection direction,
                             std::unordered_set<std::string>& seen) {
  std::vector<Port> ports;
  ports.reserve(names.size());
  for (auto& n : names) {
    if (n.empty()) {
      throw ModelError("component '" + owner + "': empty port name");
    }
    if (!seen.insert(n).second) {
      throw ModelError("component '" + owner + "': duplicate port name '" + n + "'");
    }
    ports.push_back(Port{std::move(n), direction});
  }
  return ports;
}

}  // namespace

Component::Component(std::string name, std::vector<std::string> input_ports,
                     std::vector<std::string> output_ports)
    : name_(std::move(name)) {
  if (name_.empty()) {
    throw ModelError("component name must not be empty");
  }
  std::unordered_set<std::string> seen;
  inputs_ = make_ports(name_, std::move(input_ports), PortDirection::input, seen);
  outputs_ = make_ports(name_, std::move(output_ports), PortDirection::output, seen);
}

bool Component::has_port(std::string_view port, PortDirection direction) const {
  return port_index(port, direction) >= 0;
}

int Component::port_index(std::string_view port, PortDirection direction) const {
  const auto& list = direction == PortDirection::input ? inputs_ : outputs_;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].name == port) return static_cast<int>(i);
  }
  return -1;
}

AtomicModel::AtomicModel(std::string name, std::vector<std::string> input_ports,
                         std::vector<std::string> output_ports,
                         std::unique_ptr<AtomicBehavior> behavior)
    : Component(std::move(name), std::move(input_ports), std::move(output_ports)),
      behavior_(std::move(behavior)) {
  if (!behavior_) {
    throw ModelError("atomic model '" + this->name() + "': null behavior");
  }
}

}  // namespace pdevs
