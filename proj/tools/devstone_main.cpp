#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "devstone/analytics.hpp"
#include "devstone/bench/emit.hpp"
#include "devstone/bench/run.hpp"
#include "devstone/bench/sweep.hpp"
#include "devstone/bench/verify.hpp"
#include "devstone/benchmark_spec.hpp"
#include "devstone/generator.hpp"

namespace {

using namespace devstone;
using namespace devstone::bench;

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (Family f : all_families) {
    names.emplace_back(to_string(f));
  }
  return names;
}

void write_results(const std::vector<RunResult>& results, const std::string& format,
                   const std::string& out_path) {
  EmitFormat fmt = emit_format_from_string(format);
  if (out_path.empty()) {
    std::cout << (fmt == EmitFormat::csv ? emit_csv(results) : emit_json(results));
  } else {
    emit_to_file(results, fmt, out_path);
    std::fprintf(stderr, "wrote %zu result%s to %s\n", results.size(),
                 results.size() == 1 ? "" : "s", out_path.c_str());
  }
}

int cmd_run(const std::string& family, int width, int depth, double delta_int,
            double delta_ext, int events, int trials, double time_cap, double mem_cap_gib,
            const std::string& format, const std::string& out_path, bool no_isolate) {
  RunConfig config;
  config.spec = {family_from_string(family), width, depth, delta_int, delta_ext, events};
  config.trials = trials;
  config.time_cap_s = time_cap;
  config.mem_cap_bytes = static_cast<std::uint64_t>(mem_cap_gib * (1ull << 30));
  config.isolate = !no_isolate;

  RunResult result = run_benchmark(config);
  write_results({result}, format, out_path);
  return result.status == RunStatus::ok ? 0 : 1;
}

int cmd_sweep(const std::string& profile, const std::string& config_path, int trials,
              double time_cap, double mem_cap_gib, double delta_int, double delta_ext,
              int events, const std::string& format, const std::string& out_path,
              bool no_isolate, const CLI::App& cmd) {
  SweepConfig config = profile == "paper" ? paper_profile() : desk_profile();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      throw HarnessError("cannot open sweep config '" + config_path + "'");
    }
    config = parse_sweep_config(in, std::move(config));
  }
  if (cmd.count("--trials")) config.trials = trials;
  if (cmd.count("--time-cap")) config.time_cap_s = time_cap;
  if (cmd.count("--mem-cap")) {
    config.mem_cap_bytes = static_cast<std::uint64_t>(mem_cap_gib * (1ull << 30));
  }
  if (cmd.count("--delta-int")) config.delta_int = delta_int;
  if (cmd.count("--delta-ext")) config.delta_ext = delta_ext;
  if (cmd.count("--events")) config.n_events = events;
  if (no_isolate) config.isolate = false;

  EmitFormat fmt = emit_format_from_string(format);
  std::vector<RunResult> accumulated;
  auto on_cell = [&](const RunResult& result, std::size_t, std::size_t) {
    accumulated.push_back(result);
    if (out_path.empty()) return;
    if (fmt == EmitFormat::csv) {
      // Append incrementally so progress survives an interrupted sweep.
      std::ofstream out(out_path, accumulated.size() == 1 ? std::ios::trunc
                                                          : std::ios::app);
      if (!out) throw HarnessError("cannot open '" + out_path + "' for writing");
      if (accumulated.size() == 1) out << csv_header() << '\n';
      out << csv_row(result) << '\n';
    } else {
      emit_to_file(accumulated, fmt, out_path);
    }
  };

  std::vector<RunResult> results = run_sweep(config, on_cell);
  if (out_path.empty()) {
    write_results(results, format, out_path);
  } else {
    // Rewrite once at the end so the file is sorted even though cells
    // were appended in sweep order.
    emit_to_file(results, fmt, out_path);
    std::fprintf(stderr, "wrote %zu results to %s\n", results.size(), out_path.c_str());
  }
  for (const RunResult& r : results) {
    if (r.status == RunStatus::build_failed) return 1;
  }
  return 0;
}

int cmd_verify(int max_width, int max_depth, const std::vector<std::string>& families) {
  std::vector<Family> parsed;
  for (const std::string& name : families) {
    parsed.push_back(family_from_string(name));
  }
  VerifyReport report = verify_grid(max_width, max_depth, parsed);
  std::cout << format_report(report);
  return report.ok() ? 0 : 1;
}

int cmd_dump(const std::string& family, int width, int depth) {
  BenchmarkSpec spec{family_from_string(family), width, depth, 0.0, 0.0, 1};
  auto counters = std::make_shared<TransitionCounters>();
  auto model = build(spec, counters);
  std::cout << dump_outline(*model);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DEVStone benchmark driver: generate, simulate, and measure "
               "synthetic model hierarchies"};
  app.require_subcommand(1);

  const auto names = family_names();
  auto family_check = CLI::IsMember(names);

  // ---- run ----
  auto* run = app.add_subcommand("run", "Benchmark one model configuration");
  std::string run_family;
  int run_width = 2, run_depth = 1, run_events = 1, run_trials = 10;
  double run_dint = 0.0, run_dext = 0.0, run_time_cap = 1200.0, run_mem_cap = 4.0;
  std::string run_format = "csv", run_out;
  bool run_no_isolate = false;
  run->add_option("--family", run_family, "Model family")
      ->required()
      ->check(family_check);
  run->add_option("--width", run_width, "Components per level")->check(CLI::Range(2, 1'000'000));
  run->add_option("--depth", run_depth, "Nesting levels")->check(CLI::Range(1, 1'000'000));
  run->add_option("--delta-int", run_dint, "Seconds of CPU work per internal transition")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--delta-ext", run_dext, "Seconds of CPU work per external transition")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--events", run_events, "Injected event count")->check(CLI::PositiveNumber);
  run->add_option("--trials", run_trials, "Repetitions to average")->check(CLI::PositiveNumber);
  run->add_option("--time-cap", run_time_cap, "Per-trial wall-clock cap in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--mem-cap", run_mem_cap, "Per-trial memory cap in GiB (0 = none)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--format", run_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", run_out, "Output file (default: stdout)");
  run->add_flag("--no-isolate", run_no_isolate,
                "Run trials in-process instead of in a forked child");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "Benchmark a grid of configurations");
  std::string sweep_profile = "desk", sweep_config, sweep_format = "csv";
  std::string sweep_out = "results.csv";
  int sweep_trials = 10, sweep_events = 1;
  double sweep_time_cap = 1200.0, sweep_mem_cap = 4.0, sweep_dint = 0.0, sweep_dext = 0.0;
  bool sweep_no_isolate = false;
  sweep->add_option("--profile", sweep_profile,
                    "Built-in grid: 'paper' (full ranges) or 'desk' (smaller)")
      ->check(CLI::IsMember({"paper", "desk"}));
  sweep->add_option("--config", sweep_config,
                    "Config file overriding the profile (see configs/)");
  sweep->add_option("--trials", sweep_trials, "Repetitions per cell")->check(CLI::PositiveNumber);
  sweep->add_option("--time-cap", sweep_time_cap, "Per-trial wall-clock cap in seconds")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--mem-cap", sweep_mem_cap, "Per-trial memory cap in GiB")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--delta-int", sweep_dint, "Seconds of CPU work per internal transition")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--delta-ext", sweep_dext, "Seconds of CPU work per external transition")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--events", sweep_events, "Injected event count")->check(CLI::PositiveNumber);
  sweep->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sweep_out, "Output file");
  sweep->add_flag("--no-isolate", sweep_no_isolate,
                  "Run trials in-process instead of in a forked child");

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "Check simulated transition counts against the closed-form predictions");
  int verify_w = 10, verify_d = 10;
  std::vector<std::string> verify_families = names;
  verify->add_option("--max-width", verify_w, "Largest width to check")
      ->check(CLI::Range(2, 10'000));
  verify->add_option("--max-depth", verify_d, "Largest depth to check")
      ->check(CLI::Range(1, 10'000));
  verify->add_option("--families", verify_families, "Families to check")
      ->check(family_check);

  // ---- dump ----
  auto* dump = app.add_subcommand("dump", "Print a model's component and coupling outline");
  std::string dump_family;
  int dump_width = 2, dump_depth = 1;
  dump->add_option("--family", dump_family, "Model family")
      ->required()
      ->check(family_check);
  dump->add_option("--width", dump_width, "Components per level")
      ->check(CLI::Range(2, 1'000'000));
  dump->add_option("--depth", dump_depth, "Nesting levels")->check(CLI::Range(1, 1'000'000));

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_family, run_width, run_depth, run_dint, run_dext, run_events,
                     run_trials, run_time_cap, run_mem_cap, run_format, run_out,
                     run_no_isolate);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_profile, sweep_config, sweep_trials, sweep_time_cap,
                       sweep_mem_cap, sweep_dint, sweep_dext, sweep_events, sweep_format,
                       sweep_out, sweep_no_isolate, *sweep);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_w, verify_d, verify_families);
    }
    if (dump->parsed()) {
      return cmd_dump(dump_family, dump_width, dump_depth);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
