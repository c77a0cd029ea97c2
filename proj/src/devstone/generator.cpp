#include "devstone/generator.hpp"

#include <string>
#include <vector>

#include "devstone/devstone_atomic.hpp"
#include "pdevs/errors.hpp"

namespace devstone {

namespace {

using pdevs::AtomicModel;
using pdevs::CoupledModel;
using pdevs::Endpoint;

struct PortSet {
  std::vector<std::string> in;
  std::vector<std::string> out;
};

PortSet family_ports(Family f) {
  switch (f) {
    case Family::LI:
    case Family::HI:
      return {{"in"}, {"out"}};
    case Family::HO:
      return {{"in1", "in2"}, {"out1", "out2"}};
    case Family::HOmod:
    case Family::HOmem:
      return {{"in1", "in2"}, {"out"}};
  }
  return {};
}

std::unique_ptr<AtomicModel> make_atomic(const std::string& name,
                                         const BenchmarkSpec& spec,
                                         std::shared_ptr<TransitionCounters>& counters) {
  return std::make_unique<AtomicModel>(
      name, std::vector<std::string>{"in"}, std::vector<std::string>{"out"},
      make_devstone_atomic(spec.delta_int, spec.delta_ext, counters));
}

// Level 1 is the root (named after the family); deeper levels are L2..Ld.
// Level `depth` is the single-atomic deepest coupled.
std::unique_ptr<CoupledModel> make_level(const BenchmarkSpec& spec, int level,
                                         std::shared_ptr<TransitionCounters>& counters) {
  const PortSet ports = family_ports(spec.family);
  const std::string name =
      level == 1 ? to_string(spec.family) : "L" + std::to_string(level);
  auto node = std::make_unique<CoupledModel>(name, ports.in, ports.out);

  const std::string& first_in = ports.in.front();
  const std::string& first_out = ports.out.front();

  if (level == spec.depth) {
    node->add_component(make_atomic("a1", spec, counters));
    node->add_coupling(Endpoint::self(first_in), Endpoint{"a1", "in"});
    node->add_coupling(Endpoint{"a1", "out"}, Endpoint::self(first_out));
    return node;
  }

  node->add_component(make_level(spec, level + 1, counters));
  const std::string child = "L" + std::to_string(level + 1);
  const int w = spec.width;

  switch (spec.family) {
    case Family::LI:
    case Family::HI: {
      std::vector<std::string> atoms;
      for (int i = 1; i <= w - 1; ++i) {
        atoms.push_back("a" + std::to_string(i));
        node->add_component(make_atomic(atoms.back(), spec, counters));
      }
      node->add_coupling(Endpoint::self("in"), Endpoint{child, "in"});
      for (const auto& a : atoms) {
        node->add_coupling(Endpoint::self("in"), Endpoint{a, "in"});
      }
      if (spec.family == Family::HI) {
        for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
          node->add_coupling(Endpoint{atoms[i], "out"}, Endpoint{atoms[i + 1], "in"});
        }
      }
      node->add_coupling(Endpoint{child, "out"}, Endpoint::self("out"));
      break;
    }
    case Family::HO: {
      std::vector<std::string> atoms;
      for (int i = 1; i <= w - 1; ++i) {
        atoms.push_back("a" + std::to_string(i));
        node->add_component(make_atomic(atoms.back(), spec, counters));
      }
      node->add_coupling(Endpoint::self("in1"), Endpoint{child, "in1"});
      node->add_coupling(Endpoint::self("in2"), Endpoint{child, "in2"});
      for (const auto& a : atoms) {
        node->add_coupling(Endpoint::self("in2"), Endpoint{a, "in"});
      }
      for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        node->add_coupling(Endpoint{atoms[i], "out"}, Endpoint{atoms[i + 1], "in"});
      }
      node->add_coupling(Endpoint{child, "out1"}, Endpoint::self("out1"));
      for (const auto& a : atoms) {
        node->add_coupling(Endpoint{a, "out"}, Endpoint::self("out2"));
      }
      break;
    }
    case Family::HOmod: {
      // Row 1 has w-1 atomics; rows k = 2..w have w-k+1 atomics each.
      std::vector<std::vector<std::string>> rows(w + 1);
      for (int k = 1; k <= w; ++k) {
        const int size = (k == 1) ? w - 1 : w - k + 1;
        for (int j = 1; j <= size; ++j) {
          std::string a = "r" + std::to_string(k) + "a" + std::to_string(j);
          rows[k].push_back(a);
          node->add_component(make_atomic(a, spec, counters));
        }
      }
      node->add_coupling(Endpoint::self("in1"), Endpoint{child, "in1"});
      for (const auto& a : rows[1]) {
        node->add_coupling(Endpoint::self("in2"), Endpoint{a, "in"});
      }
      for (int k = 2; k <= w; ++k) {
        node->add_coupling(Endpoint::self("in2"), Endpoint{rows[k].front(), "in"});
      }
      for (const auto& src : rows[2]) {
        for (const auto& dst : rows[1]) {
          node->add_coupling(Endpoint{src, "out"}, Endpoint{dst, "in"});
        }
      }
      for (int k = 3; k <= w; ++k) {
        for (std::size_t j = 0; j < rows[k].size(); ++j) {
          node->add_coupling(Endpoint{rows[k][j], "out"}, Endpoint{rows[k - 1][j], "in"});
        }
      }
      for (const auto& a : rows[1]) {
        node->add_coupling(Endpoint{a, "out"}, Endpoint{child, "in2"});
      }
      node->add_coupling(Endpoint{child, "out"}, Endpoint::self("out"));
      break;
    }
    case Family::HOmem: {
      std::vector<std::string> first;
      std::vector<std::string> second;
      for (int i = 1; i <= w - 1; ++i) {
        first.push_back("fa" + std::to_string(i));
        node->add_component(make_atomic(first.back(), spec, counters));
      }
      for (int i = 1; i <= w - 1; ++i) {
        second.push_back("sa" + std::to_string(i));
        node->add_component(make_atomic(second.back(), spec, counters));
      }
      node->add_coupling(Endpoint::self("in1"), Endpoint{child, "in1"});
      for (const auto& a : second) {
        node->add_coupling(Endpoint::self("in2"), Endpoint{a, "in"});
      }
      for (const auto& src : second) {
        for (const auto& dst : first) {
          node->add_coupling(Endpoint{src, "out"}, Endpoint{dst, "in"});
        }
      }
      for (const auto& a : first) {
        node->add_coupling(Endpoint{a, "out"}, Endpoint{child, "in2"});
      }
      node->add_coupling(Endpoint{child, "out"}, Endpoint::self("out"));
      break;
    }
  }
  return node;
}

void walk_outline(const CoupledModel& node, const std::string& path, std::string& out) {
  out += "COMPONENT " + path + " kind=coupled\n";
  for (pdevs::CouplingClass cls : {pdevs::CouplingClass::eic, pdevs::CouplingClass::ic,
                                   pdevs::CouplingClass::eoc}) {
    for (const pdevs::Coupling& c : node.couplings(cls)) {
      out += "COUPLING ";
      out += to_string(cls);
      out += ' ';
      out += to_string(c.from);
      out += " -> ";
      out += to_string(c.to);
      out += '\n';
    }
  }
  for (const auto& child : node.components()) {
    const std::string child_path = path + "/" + child->name();
    if (child->is_atomic()) {
      out += "COMPONENT " + child_path + " kind=atomic\n";
    } else {
      walk_outline(static_cast<const CoupledModel&>(*child), child_path, out);
    }
  }
}

}  // namespace

std::unique_ptr<pdevs::CoupledModel> build(const BenchmarkSpec& spec,
                                           std::shared_ptr<TransitionCounters> counters) {
  validate_spec(spec);
  if (!counters) {
    throw pdevs::ModelError("build requires a counter block");
  }
  return make_level(spec, 1, counters);
}

pdevs::InjectionSchedule injection_schedule(const BenchmarkSpec& spec) {
  validate_spec(spec);
  pdevs::InjectionSchedule schedule;
  const PortSet ports = family_ports(spec.family);
  for (std::int64_t k = 0; k < spec.n_events; ++k) {
    for (const auto& port : ports.in) {
      schedule.add(static_cast<pdevs::Time>(k), port, k);
    }
  }
  return schedule;
}

std::string dump_outline(const pdevs::CoupledModel& root) {
  std::string out;
  walk_outline(root, root.name(), out);
  return out;
}

}  // namespace devstone
