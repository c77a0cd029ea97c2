#include "devstone/bench/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace devstone::bench {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void sort_results(std::vector<RunResult>& results) {
  std::sort(results.begin(), results.end(),
            [](const RunResult& a, const RunResult& b) {
              return std::make_tuple(static_cast<int>(a.spec.family), a.spec.width,
                                     a.spec.depth) <
                     std::make_tuple(static_cast<int>(b.spec.family), b.spec.width,
                                     b.spec.depth);
            });
}

}  // namespace

EmitFormat emit_format_from_string(const std::string& name) {
  if (name == "csv") return EmitFormat::csv;
  if (name == "json") return EmitFormat::json;
  throw HarnessError("unknown output format '" + name + "' (expected csv or json)");
}

std::string csv_header() {
  return "family,width,depth,n_events,trials,mean_wall_time_s,mean_peak_mem_bytes,"
         "n_delta_int,n_delta_ext,n_event_count,pred_delta_int,pred_delta_ext,"
         "pred_event_count,status";
}

std::string csv_row(const RunResult& r) {
  std::ostringstream out;
  out << to_string(r.spec.family) << ',' << r.spec.width << ',' << r.spec.depth << ','
      << r.spec.n_events << ',' << r.trials << ',' << format_double(r.mean_wall_time_s)
      << ',' << format_double(r.mean_peak_mem_bytes) << ','
      << r.observed.num_delt_ints << ',' << r.observed.num_delt_exts << ','
      << r.observed.num_of_events << ',' << r.predicted.n_delta_int << ','
      << r.predicted.n_delta_ext << ',' << r.predicted.n_events << ','
      << to_string(r.status);
  return out.str();
}

std::string emit_csv(std::vector<RunResult> results) {
  if (results.empty()) {
    throw HarnessError("no results to emit");
  }
  sort_results(results);
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const RunResult& r : results) {
    out << csv_row(r) << '\n';
  }
  return out.str();
}

std::string emit_json(std::vector<RunResult> results) {
  if (results.empty()) {
    throw HarnessError("no results to emit");
  }
  sort_results(results);
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const RunResult& r : results) {
    nlohmann::ordered_json cell;
    cell["family"] = to_string(r.spec.family);
    cell["width"] = r.spec.width;
    cell["depth"] = r.spec.depth;
    cell["n_events"] = r.spec.n_events;
    cell["delta_int"] = r.spec.delta_int;
    cell["delta_ext"] = r.spec.delta_ext;
    cell["trials"] = r.trials;
    cell["mean_wall_time_s"] = r.mean_wall_time_s;
    cell["mean_peak_mem_bytes"] = r.mean_peak_mem_bytes;
    cell["trial_wall_times_s"] = r.trial_wall_times_s;
    cell["trial_peak_mem_bytes"] = r.trial_peak_mem_bytes;
    cell["n_delta_int"] = r.observed.num_delt_ints;
    cell["n_delta_ext"] = r.observed.num_delt_exts;
    cell["n_event_count"] = r.observed.num_of_events;
    cell["pred_atomics"] = r.predicted.n_atomics;
    cell["pred_delta_int"] = r.predicted.n_delta_int;
    cell["pred_delta_ext"] = r.predicted.n_delta_ext;
    cell["pred_event_count"] = r.predicted.n_events;
    cell["status"] = to_string(r.status);
    doc.push_back(std::move(cell));
  }
  return doc.dump(2) + "\n";
}

void emit_to_file(const std::vector<RunResult>& results, EmitFormat format,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw HarnessError("cannot open '" + path + "' for writing");
  }
  out << (format == EmitFormat::csv ? emit_csv(results) : emit_json(results));
  if (!out) {
    throw HarnessError("failed while writing '" + path + "'");
  }
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) {
      fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
      fields.emplace_back();
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

}  // namespace devstone::bench
