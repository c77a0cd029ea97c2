#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "devstone/counters.hpp"
#include "devstone/devstone_atomic.hpp"
#include "devstone/generator.hpp"
#include "pdevs/coupled.hpp"
#include "pdevs/errors.hpp"
#include "pdevs/simulation.hpp"
#include "pdevs/validate.hpp"

using namespace pdevs;
using devstone::DevstoneAtomic;
using devstone::TransitionCounters;

namespace {

std::unique_ptr<Component> workload_atomic(
    std::string name, const std::shared_ptr<TransitionCounters>& counters) {
  return std::make_unique<AtomicModel>(
      std::move(name), std::vector<std::string>{"in"}, std::vector<std::string>{"out"},
      devstone::make_devstone_atomic(0.0, 0.0, counters));
}

// Records every call the simulator makes, with the elapsed time passed to
// the external transition. Cycles with a fixed period while active.
class Recorder final : public AtomicBehavior {
 public:
  struct Call {
    char kind;  // 'i' internal, 'e' external, 'c' confluent
    Time elapsed;
  };

  explicit Recorder(Time period) : period_(period) {}

  void init() override { remaining_ = infinity(); }
  void delta_int() override {
    calls.push_back({'i', 0.0});
    remaining_ = infinity();
  }
  void delta_ext(Time e, const std::vector<ValueBag>&) override {
    calls.push_back({'e', e});
    remaining_ = period_;
  }
  void delta_con(const std::vector<ValueBag>&) override {
    calls.push_back({'c', 0.0});
    remaining_ = period_;
  }
  void lambda(std::vector<ValueBag>& out) const override { out[0].push_back(1); }
  Time ta() const override { return remaining_; }

  std::vector<Call> calls;

 private:
  Time period_;
  Time remaining_ = infinity();
};

}  // namespace

TEST_CASE("a passive model with no injections is born quiescent") {
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  root.add_component(workload_atomic("x", counters));
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});

  Simulation sim(root);
  CHECK(sim.quiescent());
  CHECK(sim.next_event_time() == infinity());
  CHECK(sim.run_to_quiescence() == 0);
  CHECK_THROWS_AS(sim.step(), SimulationError);
}

TEST_CASE("construction validates the tree and the schedule ports") {
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  root.add_component(workload_atomic("x", counters));
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});

  SUBCASE("unknown injection port") {
    InjectionSchedule s;
    s.add(0.0, "bogus", 1);
    CHECK_THROWS_AS(Simulation(root, std::move(s)), ModelError);
  }
  SUBCASE("structurally broken tree") {
    root.mutable_couplings(CouplingClass::eic)[0].to.port = "bogus";
    CHECK_THROWS_AS(Simulation{root}, ModelError);
  }
}

TEST_CASE("two-atomic simultaneous-event fixture, step by step") {
  // x and y both receive the boundary stimulus; x also feeds y. At the
  // second step x is imminent-only while y is imminent and receiving, so y
  // takes the confluent path.
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  root.add_component(workload_atomic("x", counters));
  root.add_component(workload_atomic("y", counters));
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});
  root.add_coupling(Endpoint::self("in"), Endpoint{"y", "in"});
  root.add_coupling(Endpoint{"x", "out"}, Endpoint{"y", "in"});

  InjectionSchedule s;
  s.add(0.0, "in", 7);
  Simulation sim(root, std::move(s));
  REQUIRE_FALSE(sim.quiescent());
  CHECK(sim.next_event_time() == 0.0);

  sim.step();  // both receive the injection
  CHECK(counters->num_delt_ints == 0);
  CHECK(counters->num_delt_exts == 2);
  CHECK(counters->num_of_events == 2);

  sim.step();  // x internal, y confluent with x's output
  CHECK(counters->num_delt_ints == 2);
  CHECK(counters->num_delt_exts == 3);
  CHECK(counters->num_of_events == 3);

  sim.step();  // y drains
  CHECK(sim.quiescent());
  CHECK(*counters == TransitionCounters{3, 3, 3});
  CHECK(sim.steps_executed() == 3);
  CHECK(sim.clock() == 0.0);
}

TEST_CASE("elapsed time handed to delta_ext equals clock minus last transition") {
  CoupledModel root("root", {"in"}, {"out"});
  auto behavior = std::make_unique<Recorder>(2.0);
  Recorder* recorder = behavior.get();
  root.add_component(std::make_unique<AtomicModel>(
      "r", std::vector<std::string>{"in"}, std::vector<std::string>{"out"},
      std::move(behavior)));
  root.add_coupling(Endpoint::self("in"), Endpoint{"r", "in"});

  InjectionSchedule s;
  s.add(1.5, "in", 1);  // passive since t=0: e = 1.5
  s.add(2.5, "in", 2);  // mid-cycle:        e = 1.0
  s.add(4.5, "in", 3);  // exactly imminent: confluent, no elapsed argument
  Simulation sim(root, std::move(s));
  sim.run_to_quiescence();

  REQUIRE(recorder->calls.size() == 4);
  CHECK(recorder->calls[0].kind == 'e');
  CHECK(recorder->calls[0].elapsed == 1.5);
  CHECK(recorder->calls[1].kind == 'e');
  CHECK(recorder->calls[1].elapsed == 1.0);
  CHECK(recorder->calls[2].kind == 'c');
  CHECK(recorder->calls[3].kind == 'i');  // the cycle opened at t=4.5 drains
  CHECK(sim.clock() == 6.5);
}

TEST_CASE("stimuli route through nested coupled boundaries") {
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  auto inner = std::make_unique<CoupledModel>("c", std::vector<std::string>{"in"},
                                              std::vector<std::string>{"out"});
  inner->add_component(workload_atomic("y", counters));
  inner->add_coupling(Endpoint::self("in"), Endpoint{"y", "in"});
  auto* y = static_cast<AtomicModel*>(inner->find_component("y"));
  root.add_component(std::move(inner));
  root.add_coupling(Endpoint::self("in"), Endpoint{"c", "in"});

  InjectionSchedule s;
  s.add(0.0, "in", 41);
  Simulation sim(root, std::move(s));
  sim.step();
  CHECK(counters->num_delt_exts == 1);
  CHECK(counters->num_of_events == 1);
  const auto& yb = static_cast<const DevstoneAtomic&>(y->behavior());
  CHECK(yb.list() == ValueBag{41});
}

TEST_CASE("duplicate routes deliver duplicate payloads") {
  // Two distinct boundary ports of the child both lead to the same atomic;
  // a stimulus fanned to both ports must arrive twice.
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  auto inner = std::make_unique<CoupledModel>("c", std::vector<std::string>{"p", "q"},
                                              std::vector<std::string>{"out"});
  inner->add_component(workload_atomic("y", counters));
  inner->add_coupling(Endpoint::self("p"), Endpoint{"y", "in"});
  inner->add_coupling(Endpoint::self("q"), Endpoint{"y", "in"});
  auto* y = static_cast<AtomicModel*>(inner->find_component("y"));
  root.add_component(std::move(inner));
  root.add_coupling(Endpoint::self("in"), Endpoint{"c", "p"});
  root.add_coupling(Endpoint::self("in"), Endpoint{"c", "q"});

  InjectionSchedule s;
  s.add(0.0, "in", 5);
  Simulation sim(root, std::move(s));
  sim.step();
  CHECK(counters->num_delt_exts == 1);  // one bag, one transition
  CHECK(counters->num_of_events == 2);  // two payloads in it
  const auto& yb = static_cast<const DevstoneAtomic&>(y->behavior());
  CHECK(yb.list() == ValueBag{5, 5});
}

TEST_CASE("zero-delay feedback trips the step cap instead of hanging") {
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  root.add_component(workload_atomic("x", counters));
  root.add_component(workload_atomic("y", counters));
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});
  root.add_coupling(Endpoint{"x", "out"}, Endpoint{"y", "in"});
  root.add_coupling(Endpoint{"y", "out"}, Endpoint{"x", "in"});

  InjectionSchedule s;
  s.add(0.0, "in", 1);
  Simulation sim(root, std::move(s));
  CHECK_THROWS_WITH_AS(sim.run_to_quiescence(100),
                       doctest::Contains("step cap"), SimulationError);
}

TEST_CASE("per-atomic event times are tracked and bounds-checked") {
  auto counters = std::make_shared<TransitionCounters>();
  CoupledModel root("root", {"in"}, {"out"});
  root.add_component(workload_atomic("x", counters));
  root.add_coupling(Endpoint::self("in"), Endpoint{"x", "in"});

  InjectionSchedule s;
  s.add(3.0, "in", 1);
  Simulation sim(root, std::move(s));
  CHECK(sim.atomic_count() == 1);
  CHECK(sim.time_of_last(0) == 0.0);
  CHECK(sim.time_of_next(0) == infinity());
  CHECK(sim.next_event_time() == 3.0);  // the pending injection

  sim.step();
  CHECK(sim.clock() == 3.0);
  CHECK(sim.time_of_last(0) == 3.0);
  CHECK(sim.time_of_next(0) == 3.0);  // went active with zero delay

  CHECK_THROWS_AS(sim.time_of_last(1), SimulationError);
  CHECK_THROWS_AS(sim.time_of_next(99), SimulationError);
}

TEST_CASE("deterministic replay: identical runs, identical traces") {
  using namespace devstone;
  for (Family family : {Family::HI, Family::HOmod}) {
    BenchmarkSpec spec{family, 3, 3, 0.0, 0.0, 2};

    auto run_trace = [&spec] {
      auto counters = std::make_shared<TransitionCounters>();
      auto model = build(spec, counters);
      Simulation sim(*model, injection_schedule(spec));
      std::vector<Time> clocks;
      while (!sim.quiescent()) {
        sim.step();
        clocks.push_back(sim.clock());
      }
      return std::make_pair(clocks, *counters);
    };

    auto [clocks_a, counters_a] = run_trace();
    auto [clocks_b, counters_b] = run_trace();
    CAPTURE(to_string(family));
    CHECK(clocks_a == clocks_b);
    CHECK(counters_a == counters_b);
    CHECK_FALSE(clocks_a.empty());
  }
}

TEST_CASE("quiescence leaves every time advance infinite") {
  using namespace devstone;
  BenchmarkSpec spec{Family::HO, 4, 3, 0.0, 0.0, 1};
  auto counters = std::make_shared<TransitionCounters>();
  auto model = build(spec, counters);
  Simulation sim(*model, injection_schedule(spec));
  sim.run_to_quiescence();
  CHECK(sim.quiescent());
  for (std::size_t i = 0; i < sim.atomic_count(); ++i) {
    CHECK(sim.time_of_next(i) == infinity());
  }
}
