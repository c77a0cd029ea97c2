#pragma once

#include <cstdint>

namespace devstone {

// Burns approximately `seconds` of CPU time with a synthetic integer/string
// workload and returns the number of iterations executed. burn of zero (or
// a negative value) executes zero iterations and returns immediately.
//
// The iteration budget is seconds * iterations-per-second, where the rate is
// calibrated once per process on first use. Setting the environment variable
// DEVSTONE_DHRY_CALIB to a positive number bypasses calibration with a fixed
// iterations-per-second value (useful for reproducible CI runs).
std::uint64_t dhrystone_burn(double seconds);

// Calibrated (or overridden) iterations-per-second; triggers calibration.
double dhrystone_rate();

// Process-wide count of workload iterations executed so far, for tests that
// prove zero-delay simulations never touch the workload.
std::uint64_t dhrystone_iterations_total();

}  // namespace devstone
