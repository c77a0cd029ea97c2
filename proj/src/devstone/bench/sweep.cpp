#include "devstone/bench/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace devstone::bench {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(int line_no, const std::string& message) {
  throw HarnessError("sweep config line " + std::to_string(line_no) + ": " + message);
}

long long parse_int(const std::string& value, int line_no) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(value.c_str(), &end, 10);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    fail_at(line_no, "expected an integer, got '" + value + "'");
  }
  return v;
}

double parse_real(const std::string& value, int line_no) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    fail_at(line_no, "expected a number, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& value, int line_no) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail_at(line_no, "expected true/false, got '" + value + "'");
}

}  // namespace

std::vector<int> AxisRange::values() const {
  if (step < 1) {
    throw HarnessError("range step must be >= 1");
  }
  std::vector<int> out;
  for (int v = min; v <= max; v += step) {
    out.push_back(v);
  }
  return out;
}

SweepConfig paper_profile() {
  SweepConfig config;
  config.trials = 10;
  config.time_cap_s = 1200.0;
  config.mem_cap_bytes = 4ull << 30;
  config.plans = {
      {Family::LI, {2, 100, 1502}, {1, 100, 1501}},
      {Family::HI, {2, 100, 1102}, {1, 100, 1101}},
      {Family::HO, {2, 100, 1102}, {1, 100, 1101}},
      {Family::HOmod, {2, 1, 10}, {1, 1, 10}},
      {Family::HOmem, {2, 1, 10}, {1, 1, 10}},
  };
  return config;
}

SweepConfig desk_profile() {
  SweepConfig config;
  config.trials = 3;
  // The largest HOmod/HOmem cells would run for hours; the tighter cap
  // truncates them so the whole grid stays minutes-scale.
  config.time_cap_s = 120.0;
  config.mem_cap_bytes = 4ull << 30;
  config.plans = {
      {Family::LI, {2, 100, 502}, {1, 100, 501}},
      {Family::HI, {2, 100, 502}, {1, 100, 501}},
      {Family::HO, {2, 100, 502}, {1, 100, 501}},
      {Family::HOmod, {2, 1, 8}, {1, 1, 8}},
      {Family::HOmem, {2, 1, 8}, {1, 1, 8}},
  };
  return config;
}

SweepConfig parse_sweep_config(std::istream& in, SweepConfig base) {
  SweepConfig config = std::move(base);
  bool plans_replaced = false;
  FamilyPlan* current = nullptr;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        fail_at(line_no, "unterminated section header");
      }
      std::string name = trim(line.substr(1, line.size() - 2));
      Family family;
      try {
        family = family_from_string(name);
      } catch (const std::exception&) {
        fail_at(line_no, "unknown benchmark family '" + name + "'");
      }
      if (!plans_replaced) {
        // The first family section replaces the inherited plan list outright:
        // a config file states its own grid rather than patching the base.
        config.plans.clear();
        plans_replaced = true;
      }
      for (const FamilyPlan& p : config.plans) {
        if (p.family == family) {
          fail_at(line_no, "duplicate section for family '" + name + "'");
        }
      }
      config.plans.push_back({family, {2, 1, 2}, {1, 1, 1}});
      current = &config.plans.back();
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail_at(line_no, "expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      fail_at(line_no, "expected key = value");
    }

    if (current != nullptr &&
        (key.rfind("width_", 0) == 0 || key.rfind("depth_", 0) == 0)) {
      AxisRange& axis = key.rfind("width_", 0) == 0 ? current->width : current->depth;
      std::string which = key.substr(6);
      long long v = parse_int(value, line_no);
      if (v < 1 || v > 1'000'000) {
        fail_at(line_no, key + " out of range");
      }
      if (which == "min") {
        axis.min = static_cast<int>(v);
      } else if (which == "step") {
        axis.step = static_cast<int>(v);
      } else if (which == "max") {
        axis.max = static_cast<int>(v);
      } else {
        fail_at(line_no, "unknown key '" + key + "'");
      }
      continue;
    }

    if (key == "trials") {
      long long v = parse_int(value, line_no);
      if (v < 1) fail_at(line_no, "trials must be >= 1");
      config.trials = static_cast<int>(v);
    } else if (key == "time_cap_s") {
      double v = parse_real(value, line_no);
      if (!(v >= 0)) fail_at(line_no, "time_cap_s must be >= 0");
      config.time_cap_s = v;
    } else if (key == "mem_cap_bytes") {
      long long v = parse_int(value, line_no);
      if (v < 0) fail_at(line_no, "mem_cap_bytes must be >= 0");
      config.mem_cap_bytes = static_cast<std::uint64_t>(v);
    } else if (key == "delta_int") {
      double v = parse_real(value, line_no);
      if (!(v >= 0)) fail_at(line_no, "delta_int must be >= 0");
      config.delta_int = v;
    } else if (key == "delta_ext") {
      double v = parse_real(value, line_no);
      if (!(v >= 0)) fail_at(line_no, "delta_ext must be >= 0");
      config.delta_ext = v;
    } else if (key == "n_events") {
      long long v = parse_int(value, line_no);
      if (v < 1) fail_at(line_no, "n_events must be >= 1");
      config.n_events = static_cast<int>(v);
    } else if (key == "step_cap") {
      long long v = parse_int(value, line_no);
      if (v < 1) fail_at(line_no, "step_cap must be >= 1");
      config.step_cap = static_cast<std::uint64_t>(v);
    } else if (key == "isolate") {
      config.isolate = parse_bool(value, line_no);
    } else if (key.rfind("width_", 0) == 0 || key.rfind("depth_", 0) == 0) {
      fail_at(line_no, "'" + key + "' must appear inside a [Family] section");
    } else {
      fail_at(line_no, "unknown key '" + key + "'");
    }
  }

  for (const FamilyPlan& plan : config.plans) {
    if (plan.width.min < 2) {
      throw HarnessError(std::string("family ") + to_string(plan.family) +
                         ": width_min must be >= 2");
    }
    if (plan.depth.min < 1) {
      throw HarnessError(std::string("family ") + to_string(plan.family) +
                         ": depth_min must be >= 1");
    }
    plan.width.values();  // validates step
    plan.depth.values();
  }
  return config;
}

std::size_t sweep_cell_count(const SweepConfig& config) {
  std::size_t total = 0;
  for (const FamilyPlan& plan : config.plans) {
    total += plan.width.values().size() * plan.depth.values().size();
  }
  return total;
}

std::vector<RunResult> run_sweep(
    const SweepConfig& config,
    const std::function<void(const RunResult&, std::size_t, std::size_t)>& on_cell) {
  const std::size_t total = sweep_cell_count(config);
  std::vector<RunResult> results;
  results.reserve(total);
  std::size_t done = 0;

  for (const FamilyPlan& plan : config.plans) {
    for (int width : plan.width.values()) {
      for (int depth : plan.depth.values()) {
        RunConfig cell;
        cell.spec = {plan.family, width, depth, config.delta_int, config.delta_ext,
                     config.n_events};
        cell.trials = config.trials;
        cell.time_cap_s = config.time_cap_s;
        cell.mem_cap_bytes = config.mem_cap_bytes;
        cell.step_cap = config.step_cap;
        cell.isolate = config.isolate;

        RunResult result;
        try {
          result = run_benchmark(cell);
        } catch (const std::exception& e) {
          result = RunResult{};
          result.spec = cell.spec;
          result.status = RunStatus::build_failed;
          std::fprintf(stderr, "cell %s w=%d d=%d failed: %s\n",
                       to_string(cell.spec.family), width, depth, e.what());
        }
        ++done;
        std::fprintf(stderr, "[%zu/%zu] %s width=%d depth=%d status=%s mean_wall=%.4gs\n",
                     done, total, to_string(cell.spec.family), width, depth,
                     to_string(result.status), result.mean_wall_time_s);
        if (on_cell) on_cell(result, done, total);
        results.push_back(std::move(result));
      }
    }
  }
  return results;
}

}  // namespace devstone::bench
