#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pdevs/atomic_behavior.hpp"
#include "pdevs/ports.hpp"

namespace pdevs {

// Common base of atomic and coupled models: a name plus typed port lists.
class Component {
 public:
  virtual ~Component() = default;

  const std::string& name() const { return name_; }
  const std::vector<Port>& input_ports() const { return inputs_; }
  const std::vector<Port>& output_ports() const { return outputs_; }

  bool has_port(std::string_view port, PortDirection direction) const;
  // Index into the matching port list, or -1.
  int port_index(std::string_view port, PortDirection direction) const;

  virtual bool is_atomic() const = 0;

 protected:
  // Throws ModelError on an empty name or duplicate port names.
  Component(std::string name, std::vector<std::string> input_ports,
            std::vector<std::string> output_ports);

 private:
  std::string name_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
};

// A leaf model: ports plus an AtomicBehavior.
class AtomicModel final : public Component {
 public:
  AtomicModel(std::string name, std::vector<std::string> input_ports,
              std::vector<std::string> output_ports,
              std::unique_ptr<AtomicBehavior> behavior);

  AtomicBehavior& behavior() { return *behavior_; }
  const AtomicBehavior& behavior() const { return *behavior_; }

  bool is_atomic() const override { return true; }

 private:
  std::unique_ptr<AtomicBehavior> behavior_;
};

}  // namespace pdevs
