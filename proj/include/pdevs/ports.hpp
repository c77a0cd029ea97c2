#pragma once

#include <string>

namespace pdevs {

enum class PortDirection { input, output };

struct Port {
  std::string name;
  PortDirection direction;
};

// One side of a coupling. `component` names a direct child of the coupled
// model that owns the coupling; an empty component means the coupled model's
// own boundary (rendered as SELF).
struct Endpoint {
  std::string component;
  std::string port;

  static Endpoint self(std::string port) { return Endpoint{"", std::move(port)}; }
  bool is_self() const { return component.empty(); }

  bool operator==(const Endpoint&) const = default;
};

std::string to_string(const Endpoint& e);

enum class CouplingClass { eic, ic, eoc };

const char* to_string(CouplingClass c);

struct Coupling {
  Endpoint from;
  Endpoint to;

  bool operator==(const Coupling&) const = default;
};

}  // namespace pdevs
