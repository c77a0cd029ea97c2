#pragma once

#include <string>
#include <vector>

#include "pdevs/coupled.hpp"

namespace pdevs {

struct Violation {
  std::string path;     // slash-separated component path from the root
  std::string message;  // human-readable description of the defect

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Recursively checks the whole tree and reports every defect found
// (dangling coupling endpoints, direction mismatches, self-couplings,
// duplicate child names cannot arise through the API but are re-checked
// after mutable_couplings edits). Never throws on model defects.
ValidationReport validate(const CoupledModel& root);

}  // namespace pdevs
