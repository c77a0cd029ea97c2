#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pdevs/component.hpp"
#include "pdevs/ports.hpp"

namespace pdevs {

// A composite model: named children plus three ordered coupling relations.
// Couplings are classified automatically from their endpoints:
//   EIC  SELF input   -> child input
//   IC   child output -> (different) child input
//   EOC  child output -> SELF output
// Anything else (SELF->SELF shortcuts, output->output, coupling a child to
// itself, unknown components or ports) is rejected with ModelError.
// Re-adding an identical coupling is a silent no-op, so builders may be
// idempotent; insertion order is otherwise preserved and is the routing
// fan-out order.
class CoupledModel final : public Component {
 public:
  CoupledModel(std::string name, std::vector<std::string> input_ports,
               std::vector<std::string> output_ports);

  // Takes ownership. Throws ModelError on null, on a name clash with an
  // existing child, or on a child named like the SELF sentinel.
  CoupledModel& add_component(std::unique_ptr<Component> child);

  CoupledModel& add_coupling(const Endpoint& from, const Endpoint& to);

  const std::vector<std::unique_ptr<Component>>& components() const { return children_; }
  Component* find_component(std::string_view name) const;

  const std::vector<Coupling>& couplings(CouplingClass c) const;
  // Unchecked access for structural experiments (e.g. fault injection in
  // tests). validate() re-checks everything these edits could break.
  std::vector<Coupling>& mutable_couplings(CouplingClass c);

  bool is_atomic() const override { return false; }

 private:
  std::vector<Coupling>& couplings_ref(CouplingClass c);

  std::vector<std::unique_ptr<Component>> children_;
  std::unordered_map<std::string, std::size_t> child_index_;
  std::vector<Coupling> eic_;
  std::vector<Coupling> ic_;
  std::vector<Coupling> eoc_;
  std::unordered_set<std::string> dedup_;
};

// Number of atomic leaves in the tree rooted at `root` (inclusive).
std::size_t atomic_count(const Component& root);

}  // namespace pdevs
