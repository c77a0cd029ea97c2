#pragma once

#include <string>
#include <vector>

#include "devstone/bench/run.hpp"

namespace devstone::bench {

enum class EmitFormat { csv, json };

// Throws HarnessError on an unknown name.
EmitFormat emit_format_from_string(const std::string& name);

// Fixed column set; floats are rendered with %.6g. Rows are ordered by
// family (LI, HI, HO, HOmod, HOmem), then width, then depth.
std::string csv_header();
std::string csv_row(const RunResult& r);
// Header plus one row per result. Throws HarnessError on empty input.
std::string emit_csv(std::vector<RunResult> results);

// Same fields as the CSV plus the per-trial wall time and peak memory
// arrays; same row order. Throws HarnessError on empty input.
std::string emit_json(std::vector<RunResult> results);

// Renders and writes in one step. Throws HarnessError on empty input or an
// unwritable path.
void emit_to_file(const std::vector<RunResult>& results, EmitFormat format,
                  const std::string& path);

// Minimal CSV reader for round-trip checks: splits on commas and newlines
// (fields produced here never contain either).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(const std::string& text);

}  // namespace devstone::bench
