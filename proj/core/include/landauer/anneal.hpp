#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "landauer/maxcool.hpp"

namespace landauer {

/// Simulated-annealing controls. Runs are fully reproducible: the walk is
/// driven by a self-contained deterministic generator seeded from `seed`.
struct AnnealConfig {
  double initial_temperature = 1.0;
  double cooling_rate = 0.9999;  // per-step multiplicative decay, in (0,1)
  std::int64_t steps = 100000;
  double move_scale = 0.4;  // stddev of log-weight proposals
  double target_q = 0.01;
  double q_penalty_weight = 1e6;
  std::uint64_t seed = 1;
};

struct AnnealProgressRow {
  std::int64_t step = 0;
  double temperature = 0.0;
  double objective = 0.0;
  double best_objective = 0.0;
};

struct AnnealResult {
  SpectrumPtr spectrum;       // best-seen spectrum
  ProcessOutcome outcome;     // its sorted-policy erasure outcome (beta = 1)
  double objective = 0.0;     // best-seen objective
  double initial_objective = 0.0;
  bool improved = false;      // best strictly below the initial objective
  std::vector<AnnealProgressRow> progress;
};

/// Metropolis walk over level energies at fixed degeneracies (sum must be
/// 2^n). Energies are parametrized as e_i = ln(next multiplicity) - ln w_i
/// and the walk moves ln w_i, which pins the energy gauge and keeps proposals
/// well scaled. Objective: sigma of the sorted max-cooling erasure at beta=1
/// plus q_penalty_weight (q - target_q)^2. Pass initial log-weights to start
/// from a known spectrum; otherwise the start is seeded randomly.
AnnealResult anneal_energies(
    std::int64_t n, std::vector<BigCount> degeneracy, const AnnealConfig& config,
    std::optional<std::vector<double>> initial_log_weights = std::nullopt);

/// As anneal_energies, with additional integer moves that transfer one
/// microstate between adjacent levels (degeneracy sum preserved). Search
/// space grows fast; capped at small n.
AnnealResult anneal_full(std::int64_t n, const AnnealConfig& config,
                         std::int64_t n_cap = 10);

}  // namespace landauer
