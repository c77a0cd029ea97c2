#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace devstone {

enum class Family { LI, HI, HO, HOmod, HOmem };

inline constexpr Family all_families[] = {Family::LI, Family::HI, Family::HO,
                                          Family::HOmod, Family::HOmem};

const char* to_string(Family f);
// Throws pdevs::ModelError on an unknown name.
Family family_from_string(std::string_view name);

// Parameters of one benchmark model: family, structural size, the CPU time
// burned inside each transition, and how many external events to inject.
struct BenchmarkSpec {
  Family family = Family::LI;
  int width = 2;
  int depth = 1;
  double delta_int = 0.0;  // seconds burned per internal transition
  double delta_ext = 0.0;  // seconds burned per external transition
  std::int64_t n_events = 1;

  bool operator==(const BenchmarkSpec&) const = default;
};

// Throws pdevs::ModelError unless width >= 2, depth >= 1, delays >= 0 and
// finite, and n_events >= 1.
void validate_spec(const BenchmarkSpec& spec);

}  // namespace devstone
