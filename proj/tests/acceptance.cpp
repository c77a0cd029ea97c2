// End-to-end acceptance checks. Each criterion prints one [PASS]/[FAIL]
// line; the exit code is the number of failed criteria. Values printed are
// measured, never assumed.

#include <ctime>

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "devstone/analytics.hpp"
#include "devstone/bench/emit.hpp"
#include "devstone/bench/run.hpp"
#include "devstone/bench/verify.hpp"
#include "devstone/counters.hpp"
#include "devstone/devstone_atomic.hpp"
#include "devstone/dhrystone.hpp"
#include "devstone/generator.hpp"
#include "pdevs/coupled.hpp"
#include "pdevs/simulation.hpp"

using namespace devstone;
using namespace devstone::bench;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", number,
              label.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double cpu_s() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

bool observed_equals(const VerifyCell& cell, std::uint64_t atomics, std::uint64_t ints,
                     std::uint64_t exts, std::uint64_t events) {
  return cell.observed_atomics == atomics && cell.observed.num_delt_ints == ints &&
         cell.observed.num_delt_exts == exts && cell.observed.num_of_events == events;
}

// ---- criterion 1: the full verification grid matches the predictions ----
void criterion_1() {
  const double t0 = now_s();
  VerifyReport report_grid =
      verify_grid(10, 10, {all_families, all_families + 5});
  const double elapsed = now_s() - t0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%zu cells, %zu mismatches, %.1f s (budget 300 s)",
                report_grid.cells.size(), report_grid.mismatch_count, elapsed);
  report(1, "simulated counts equal predicted counts across the grid",
         report_grid.ok() && elapsed < 300.0, detail);
  if (!report_grid.ok()) {
    std::fputs(format_report(report_grid).c_str(), stdout);
  }
}

// ---- criterion 2: hand-evaluated anchor values ----
void criterion_2() {
  bool ok = true;
  std::string bad;
  auto anchor = [&](Family f, int w, int d, std::uint64_t a, std::uint64_t i,
                    std::uint64_t e, std::uint64_t v) {
    VerifyCell cell = verify_cell({f, w, d, 0.0, 0.0, 1});
    if (!cell.match || !observed_equals(cell, a, i, e, v)) {
      ok = false;
      bad += std::string(" ") + to_string(f);
    }
  };
  anchor(Family::LI, 4, 3, 7, 7, 7, 7);
  anchor(Family::HI, 4, 3, 7, 13, 13, 13);
  anchor(Family::HO, 4, 3, 7, 13, 13, 13);
  anchor(Family::HOmod, 2, 2, 3, 4, 4, 4);
  VerifyCell homem = verify_cell({Family::HOmem, 3, 3, 0.0, 0.0, 1});
  if (!homem.match || homem.observed.num_of_events != 31) {
    ok = false;
    bad += " HOmem";
  }
  report(2, "anchor configurations reproduce their hand-computed counts", ok,
         ok ? "5 anchors exact" : "mismatched:" + bad);
}

// ---- criterion 3: counters scale linearly with the injected events ----
void criterion_3() {
  bool ok = true;
  std::string detail;
  for (Family f : {Family::LI, Family::HI, Family::HO}) {
    VerifyCell one = verify_cell({f, 4, 3, 0.0, 0.0, 1});
    for (std::int64_t n : {1, 2, 5}) {
      VerifyCell cell = verify_cell({f, 4, 3, 0.0, 0.0, n});
      const bool linear =
          cell.match &&
          cell.observed.num_delt_ints ==
              static_cast<std::uint64_t>(n) * one.observed.num_delt_ints &&
          cell.observed.num_delt_exts ==
              static_cast<std::uint64_t>(n) * one.observed.num_delt_exts &&
          cell.observed.num_of_events ==
              static_cast<std::uint64_t>(n) * one.observed.num_of_events;
      if (!linear) {
        ok = false;
        detail += std::string(" ") + to_string(f) + "*" + std::to_string(n);
      }
    }
  }
  report(3, "counters are exactly linear in the number of injected events", ok,
         ok ? "LI/HI/HO (4,3) x N in {1,2,5}" : "broken at:" + detail);
}

// ---- criterion 4: confluent semantics ----
void criterion_4() {
  using pdevs::Endpoint;

  // Fixture: x and y both receive the stimulus, x also feeds y, so at the
  // second step y is imminent while input arrives.
  auto counters = std::make_shared<TransitionCounters>();
  pdevs::CoupledModel root("root", {"in"}, {"out"});
  auto add_atomic = [&](const std::string& name) {
    root.add_component(std::make_unique<pdevs::AtomicModel>(
        name, std::vector<std::string>{"in"}, std::vector<std::string>{"out"},
        make_devstone_atomic(0.0, 0.0, counters)));
  };
  add_atomic("x");
  add_atomic("y");
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});
  root.add_coupling(Endpoint::self("in"), Endpoint{"y", "in"});
  root.add_coupling(Endpoint{"x", "out"}, Endpoint{"y", "in"});

  pdevs::InjectionSchedule schedule;
  schedule.add(0.0, "in", 7);
  pdevs::Simulation sim(root, std::move(schedule));
  sim.step();
  sim.step();
  const bool totals_ok = *counters == TransitionCounters{2, 3, 3};

  // Direct state comparison: confluent == external applied after internal.
  auto ca = std::make_shared<TransitionCounters>();
  auto cb = std::make_shared<TransitionCounters>();
  DevstoneAtomic a(0.0, 0.0, ca);
  DevstoneAtomic b(0.0, 0.0, cb);
  for (DevstoneAtomic* m : {&a, &b}) {
    m->init();
    m->delta_ext(0.5, {{1, 2}});
  }
  const std::vector<pdevs::ValueBag> bags{{9}, {8, 7}};
  a.delta_con(bags);
  b.delta_int();
  b.delta_ext(0.0, bags);
  const bool state_ok = a.list() == b.list() && a.phase() == b.phase() &&
                        a.sigma() == b.sigma() && *ca == *cb;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "fixture totals {%llu,%llu,%llu} (want {2,3,3}); state %s",
                static_cast<unsigned long long>(counters->num_delt_ints),
                static_cast<unsigned long long>(counters->num_delt_exts),
                static_cast<unsigned long long>(counters->num_of_events),
                state_ok ? "identical" : "DIVERGED");
  report(4, "simultaneous events take the confluent path", totals_ok && state_ok,
         detail);
}

// ---- criterion 5: desk-scale stress ----
void criterion_5() {
  RunConfig config;
  config.spec = {Family::LI, 502, 501, 0.0, 0.0, 1};
  config.trials = 1;
  config.time_cap_s = 120.0;
  config.mem_cap_bytes = 4ull << 30;
  RunResult r = run_benchmark(config);
  const bool counters_ok = r.observed == TransitionCounters{250501, 250501, 250501};
  const bool ok = r.status == RunStatus::ok && counters_ok &&
                  r.mean_wall_time_s <= 120.0 &&
                  r.trial_peak_mem_bytes.at(0) <= (4ull << 30);
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "status=%s counters=%llu/%llu/%llu wall=%.2fs peak=%.0fMiB",
                to_string(r.status),
                static_cast<unsigned long long>(r.observed.num_delt_ints),
                static_cast<unsigned long long>(r.observed.num_delt_exts),
                static_cast<unsigned long long>(r.observed.num_of_events),
                r.mean_wall_time_s,
                static_cast<double>(r.trial_peak_mem_bytes.at(0)) / (1 << 20));
  report(5, "the 502x502-scale fan completes within 120 s and 4 GiB", ok, detail);
}

// ---- criterion 6: truncation at the time cap ----
void criterion_6() {
  RunConfig config;
  config.spec = {Family::HOmem, 6, 6, 0.0, 0.001, 1};
  config.trials = 1;
  config.time_cap_s = 1.0;
  RunResult r = run_benchmark(config);
  const bool ok =
      r.status == RunStatus::time_exceeded && r.trial_wall_times_s.at(0) == 1.0;
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "expected time_exceeded at wall=1.0s; measured status=%s wall=%.3fs",
                to_string(r.status), r.trial_wall_times_s.at(0));
  report(6, "the configured 1 s cap truncates the heavy feedback cell", ok, detail);

  if (!ok) {
    // Demonstrate the truncation rule itself on a cell that provably cannot
    // finish: a single 3 s transition against the same 1 s cap.
    RunConfig demo;
    demo.spec = {Family::LI, 2, 1, 0.0, 3.0, 1};
    demo.trials = 1;
    demo.time_cap_s = 1.0;
    RunResult d = run_benchmark(demo);
    std::printf(
        "       (truncation rule demonstration, not a criterion: single 3 s "
        "transition under the same cap -> status=%s wall=%.3fs)\n",
        to_string(d.status), d.trial_wall_times_s.at(0));
  }
}

// ---- criterion 7: determinism and measurement exclusion ----
void criterion_7() {
  bool counters_ok = true;
  bool csv_ok = true;
  for (Family f : all_families) {
    RunConfig config;
    config.spec = {f, 3, 3, 0.0, 0.0, 2};
    config.trials = 1;
    config.isolate = false;
    RunResult first = run_benchmark(config);
    RunResult second = run_benchmark(config);
    if (!(first.observed == second.observed)) counters_ok = false;

    CsvTable t1 = parse_csv(emit_csv({first}));
    CsvTable t2 = parse_csv(emit_csv({second}));
    // Count columns (observed and predicted) must agree; timing columns may
    // differ between the runs.
    for (int col : {0, 1, 2, 3, 4, 7, 8, 9, 10, 11, 12, 13}) {
      if (t1.rows.at(0).at(col) != t2.rows.at(0).at(col)) csv_ok = false;
    }
  }

  RunConfig probe;
  probe.spec = {Family::LI, 4, 3, 0.0, 0.0, 1};
  probe.isolate = false;
  TrialOutcome outcome = run_trial_in_process(
      probe, [] { std::this_thread::sleep_for(std::chrono::milliseconds(250)); });
  const bool exclusion_ok =
      outcome.status == RunStatus::ok && outcome.wall_time_s < 0.05;

  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "counters %s; csv count columns %s; 250 ms of setup -> measured "
                "wall %.4fs",
                counters_ok ? "identical" : "DIFFER",
                csv_ok ? "identical" : "DIFFER", outcome.wall_time_s);
  report(7, "repeated runs are deterministic and setup cost is never measured",
         counters_ok && csv_ok && exclusion_ok, detail);
}

// ---- criterion 8: workload calibration ----
void criterion_8() {
  const std::uint64_t before = dhrystone_iterations_total();
  const std::uint64_t zero_iterations = dhrystone_burn(0.0);
  const bool zero_ok =
      zero_iterations == 0 && dhrystone_iterations_total() == before;

  dhrystone_rate();  // calibrate outside the measured window
  const double t0 = cpu_s();
  dhrystone_burn(0.01);
  const double dt = cpu_s() - t0;
  const bool timed_ok = dt >= 0.005 && dt <= 0.05;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "burn(0)=%llu iterations; burn(0.01) consumed %.4fs CPU "
                "(want [0.005,0.05])",
                static_cast<unsigned long long>(zero_iterations), dt);
  report(8, "the calibrated workload burns the requested CPU time", zero_ok && timed_ok,
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("all 8 criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
