#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landauer/maxcool.hpp"

namespace landauer {

enum class ScheduleFamily { linear, geodesic, geometric, custom };

std::string to_string(ScheduleFamily family);

/// Excited-state populations of the fresh bath qubits met by the system, in
/// collision order: 1/2 >= p_1 >= ... >= p_n = q_target > 0. At the global
/// beta, qubit k has gap E_k = ln((1-p_k)/p_k) / beta.
struct Schedule {
  std::vector<double> populations;
  ScheduleFamily family = ScheduleFamily::custom;
};

/// Builds a named schedule family towards the target occupation:
///  - linear: populations on an arithmetic grid,
///  - geodesic: equal steps of the thermodynamic-length angle
///    theta = asin(sqrt(p)), asymptotically the optimal family,
///  - geometric: log-spaced odds.
Schedule make_schedule(ScheduleFamily family, std::int64_t n, double q_target);

Schedule custom_schedule(std::vector<double> populations);

/// Runs the full-swap collision chain starting from the maximally mixed
/// qubit. Per-step entropy production is the binary divergence between
/// consecutive populations; mutual information vanishes for full swaps.
ProcessOutcome run_chain(const Schedule& schedule, double beta);

}  // namespace landauer
