#pragma once

#include <memory>
#include <string>

#include "pdevs/coupled.hpp"
#include "pdevs/injection.hpp"
#include "devstone/benchmark_spec.hpp"
#include "devstone/counters.hpp"

namespace devstone {

// Builds the model tree for `spec`, wiring every atomic to the shared
// `counters`. Levels are named L2..L<depth> going down (the root carries the
// family name); depth 1 means the root itself is the single-atomic deepest
// level.
//
// Family shapes (each level 1..depth-1 holds one child coupled plus that
// level's atomics; the deepest level holds one atomic between its in and out
// ports):
//   LI     a fan: the boundary input feeds the child and every atomic;
//          atomic outputs stay unconnected.
//   HI     LI plus a chain: atomic i feeds atomic i+1.
//   HO     two inputs/outputs: in1 reaches the child's in1, in2 feeds the
//          child's in2 and every atomic, the chain as in HI, atomic outputs
//          also surface on out2.
//   HOmod  two inputs: in2 feeds every row-1 atomic and the head of every
//          deeper row; row 2 feeds every row-1 atomic, deeper rows chain
//          element-wise; row 1 feeds the child's in2.
//   HOmem  two inputs: in2 feeds every second-set atomic, each second-set
//          atomic feeds every first-set atomic, and the first set feeds the
//          child's in2.
std::unique_ptr<pdevs::CoupledModel> build(const BenchmarkSpec& spec,
                                           std::shared_ptr<TransitionCounters> counters);

// The external stimulus for `spec`: n_events events at times 0,1,2,...,
// each delivering one token to every root input port simultaneously.
pdevs::InjectionSchedule injection_schedule(const BenchmarkSpec& spec);

// Deterministic topology outline for golden tests: one COMPONENT line per
// component (depth-first, children in insertion order) followed by that
// component's couplings in class order EIC, IC, EOC.
std::string dump_outline(const pdevs::CoupledModel& root);

}  // namespace devstone
