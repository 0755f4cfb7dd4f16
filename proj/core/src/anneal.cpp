#include "landauer/anneal.hpp"

#include <cmath>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

namespace {

void validate_config(const AnnealConfig& config) {
  if (config.steps < 0) throw std::invalid_argument("anneal: steps >= 0");
  if (!(config.cooling_rate > 0.0) || !(config.cooling_rate < 1.0)) {
    throw std::invalid_argument("anneal: cooling_rate in (0,1)");
  }
  if (!(config.initial_temperature > 0.0)) {
    throw std::invalid_argument("anneal: initial_temperature > 0");
  }
  if (!(config.move_scale > 0.0)) {
    throw std::invalid_argument("anneal: move_scale > 0");
  }
  if (!(config.q_penalty_weight >= 0.0)) {
    throw std::invalid_argument("anneal: q_penalty_weight >= 0");
  }
}

struct WalkState {
  std::vector<BigCount> degeneracy;
  std::vector<double> log_weights;
};

SpectrumPtr build_spectrum(const WalkState& state, std::int64_t n) {
  const std::size_t levels = state.degeneracy.size();
  std::vector<Level> lv;
  lv.reserve(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    const double ln_next = i + 1 < levels
                               ? count_ln(state.degeneracy[i + 1])
                               : static_cast<double>(n) * kLn2;
    lv.push_back(make_level(ln_next - state.log_weights[i], state.degeneracy[i]));
  }
  return std::make_shared<const Spectrum>(
      Spectrum::from_unsorted(std::move(lv), "annealed"));
}

struct Evaluation {
  double objective = 0.0;
  SpectrumPtr spectrum;
  ProcessOutcome outcome;
};

Evaluation evaluate(const WalkState& state, std::int64_t n,
                    const AnnealConfig& config) {
  Evaluation ev;
  ev.spectrum = build_spectrum(state, n);
  ev.outcome =
      max_cool(maximally_mixed_qubit(), ev.spectrum, 1.0, FillPolicy::sorted)
          .outcome;
  const double dq = ev.outcome.q_excited - config.target_q;
  ev.objective = ev.outcome.sigma + config.q_penalty_weight * dq * dq;
  return ev;
}

AnnealResult run_walk(std::int64_t n, WalkState state, const AnnealConfig& config,
                      bool degeneracy_moves) {
  DeterministicRng rng(config.seed);
  Evaluation current = evaluate(state, n, config);
  Evaluation best = current;

  AnnealResult result;
  result.initial_objective = current.objective;
  result.progress.reserve(static_cast<std::size_t>(config.steps));

  double temperature = config.initial_temperature;
  const std::size_t levels = state.degeneracy.size();
  for (std::int64_t step = 0; step < config.steps; ++step) {
    WalkState proposal = state;
    bool structurally_valid = true;
    if (degeneracy_moves && rng.uniform01() < 0.5 && levels > 1) {
      const std::size_t i = rng.uniform_below(levels - 1);
      const bool up = rng.uniform01() < 0.5;
      BigCount& from = proposal.degeneracy[up ? i : i + 1];
      BigCount& to = proposal.degeneracy[up ? i + 1 : i];
      if (from > 1) {
        from -= 1;
        to += 1;
      } else {
        structurally_valid = false;
      }
    } else {
      const std::size_t i = rng.uniform_below(levels);
      proposal.log_weights[i] += config.move_scale * rng.gaussian();
    }

    if (structurally_valid) {
      const Evaluation cand = evaluate(proposal, n, config);
      const double delta = cand.objective - current.objective;
      if (delta <= 0.0 ||
          rng.uniform01() < std::exp(-delta / std::max(temperature, 1e-300))) {
        state = std::move(proposal);
        current = cand;
        if (current.objective < best.objective) best = current;
      }
    }
    result.progress.push_back(AnnealProgressRow{step, temperature,
                                                current.objective,
                                                best.objective});
    temperature *= config.cooling_rate;
  }

  result.spectrum = best.spectrum;
  result.outcome = best.outcome;
  result.objective = best.objective;
  result.improved = best.objective < result.initial_objective;
  return result;
}

std::vector<double> random_initial_weights(std::size_t levels,
                                           const AnnealConfig& config,
                                           DeterministicRng& rng) {
  // Spread initial log-weights over a range wide enough to reach the
  // cold-target structure (weights down to ~target_q scale).
  const double lo = std::min(std::log(std::max(config.target_q, 1e-12)), -1.0) - 2.0;
  const double hi = kLn2 + 0.5;
  std::vector<double> w(levels);
  for (double& v : w) v = lo + (hi - lo) * rng.uniform01();
  return w;
}

}  // namespace

AnnealResult anneal_energies(std::int64_t n, std::vector<BigCount> degeneracy,
                             const AnnealConfig& config,
                             std::optional<std::vector<double>> initial_log_weights) {
  validate_config(config);
  if (n < 1) throw std::invalid_argument("anneal_energies: n >= 1");
  if (degeneracy.empty()) {
    throw std::invalid_argument("anneal_energies: empty degeneracy profile");
  }
  BigCount total = 0;
  for (const BigCount& c : degeneracy) {
    if (c < 1) throw std::invalid_argument("anneal_energies: counts >= 1");
    total += c;
  }
  if (total != pow2_count(static_cast<std::uint64_t>(n))) {
    throw std::invalid_argument("anneal_energies: degeneracies must sum to 2^n");
  }

  WalkState state;
  state.degeneracy = std::move(degeneracy);
  if (initial_log_weights) {
    if (initial_log_weights->size() != state.degeneracy.size()) {
      throw std::invalid_argument("anneal_energies: initial weights size");
    }
    state.log_weights = std::move(*initial_log_weights);
  } else {
    DeterministicRng init_rng(config.seed ^ 0x9e3779b97f4a7c15ull);
    state.log_weights =
        random_initial_weights(state.degeneracy.size(), config, init_rng);
  }
  return run_walk(n, std::move(state), config, /*degeneracy_moves=*/false);
}

AnnealResult anneal_full(std::int64_t n, const AnnealConfig& config,
                         std::int64_t n_cap) {
  validate_config(config);
  if (n < 1) throw std::invalid_argument("anneal_full: n >= 1");
  if (n > n_cap) {
    throw std::invalid_argument("anneal_full: n exceeds the search cap");
  }
  // Start from a flat degeneracy profile over n+1 levels.
  const std::size_t levels = static_cast<std::size_t>(n) + 1;
  WalkState state;
  state.degeneracy.assign(levels, BigCount(1));
  BigCount remaining = pow2_count(static_cast<std::uint64_t>(n));
  remaining -= static_cast<long>(levels);
  for (std::size_t i = 0; remaining > 0; i = (i + 1) % levels) {
    state.degeneracy[i] += 1;
    remaining -= 1;
  }
  DeterministicRng init_rng(config.seed ^ 0x6a09e667f3bcc909ull);
  state.log_weights = random_initial_weights(levels, config, init_rng);
  return run_walk(n, std::move(state), config, /*degeneracy_moves=*/true);
}

}  // namespace landauer
