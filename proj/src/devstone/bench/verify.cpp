#include "devstone/bench/verify.hpp"

#include <algorithm>
#include <sstream>

#include "devstone/generator.hpp"
#include "pdevs/simulation.hpp"

namespace devstone::bench {

VerifyCell verify_prebuilt(pdevs::CoupledModel& root,
                           const std::shared_ptr<TransitionCounters>& counters,
                           const BenchmarkSpec& spec) {
  *counters = TransitionCounters{};
  pdevs::Simulation sim(root, injection_schedule(spec));
  sim.run_to_quiescence();

  VerifyCell cell;
  cell.spec = spec;
  cell.predicted = predict(spec);
  cell.observed_atomics = sim.atomic_count();
  cell.observed = *counters;
  cell.match = cell.observed_atomics == cell.predicted.n_atomics &&
               cell.observed.num_delt_ints == cell.predicted.n_delta_int &&
               cell.observed.num_delt_exts == cell.predicted.n_delta_ext &&
               cell.observed.num_of_events == cell.predicted.n_events;
  return cell;
}

VerifyCell verify_cell(const BenchmarkSpec& spec) {
  auto counters = std::make_shared<TransitionCounters>();
  auto model = build(spec, counters);
  return verify_prebuilt(*model, counters, spec);
}

VerifyReport verify_grid(int max_width, int max_depth,
                         const std::vector<Family>& families) {
  VerifyReport report;
  for (Family family : families) {
    // The two recursive-grid families grow exponentially with size; beyond
    // 6x6 a single cell no longer finishes in benchmark-suite time.
    const bool heavy = family == Family::HOmod || family == Family::HOmem;
    const int w_max = heavy ? std::min(max_width, 6) : max_width;
    const int d_max = heavy ? std::min(max_depth, 6) : max_depth;
    for (int width = 2; width <= w_max; ++width) {
      for (int depth = 1; depth <= d_max; ++depth) {
        BenchmarkSpec spec{family, width, depth, 0.0, 0.0, 1};
        VerifyCell cell = verify_cell(spec);
        if (!cell.match) {
          ++report.mismatch_count;
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const VerifyCell& cell : report.cells) {
    if (cell.match) continue;
    out << "MISMATCH " << to_string(cell.spec.family) << " width=" << cell.spec.width
        << " depth=" << cell.spec.depth << ": predicted atomics="
        << cell.predicted.n_atomics << " ints=" << cell.predicted.n_delta_int
        << " exts=" << cell.predicted.n_delta_ext
        << " events=" << cell.predicted.n_events << "; observed atomics="
        << cell.observed_atomics << " ints=" << cell.observed.num_delt_ints
        << " exts=" << cell.observed.num_delt_exts
        << " events=" << cell.observed.num_of_events << '\n';
  }
  out << "verified " << report.cells.size() << " cells, " << report.mismatch_count
      << " mismatch" << (report.mismatch_count == 1 ? "" : "es") << '\n';
  return out.str();
}

}  // namespace devstone::bench
