#include "pdevs/ports.hpp"

namespace pdevs {

std::string to_string(const Endpoint& e) {
  std::string out = e.is_self() ? "SELF" : e.component;
  out += '.';
  out += e.port;
  return out;
}

const char* to_string(CouplingClass c) {
  switch (c) {
    case CouplingClass::eic: return "EIC";
    case CouplingClass::ic: return "IC";
    case CouplingClass::eoc: return "EOC";
  }
  return "?";
}

}  // namespace pdevs
