#include "landauer/collisional.hpp"

#include <cmath>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

std::string to_string(ScheduleFamily family) {
  switch (family) {
    case ScheduleFamily::linear: return "linear";
    case ScheduleFamily::geodesic: return "geodesic";
    case ScheduleFamily::geometric: return "geometric";
    case ScheduleFamily::custom: return "custom";
  }
  return "unknown";
}

namespace {

void validate_populations(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("schedule has no collisions");
  double prev = 0.5;
  for (double pk : p) {
    if (!(pk > 0.0) || pk > 0.5) {
      throw std::invalid_argument("schedule population outside (0, 1/2]");
    }
    if (pk > prev + 1e-15) {
      throw std::invalid_argument("schedule populations must be non-increasing");
    }
    prev = pk;
  }
}

}  // namespace

Schedule make_schedule(ScheduleFamily family, std::int64_t n, double q_target) {
  if (n < 1) throw std::invalid_argument("make_schedule: n >= 1");
  if (!(q_target > 0.0) || q_target >= 0.5) {
    throw std::invalid_argument("make_schedule: target must lie in (0, 1/2)");
  }
  Schedule sched;
  sched.family = family;
  sched.populations.resize(static_cast<std::size_t>(n));
  const double nd = static_cast<double>(n);
  switch (family) {
    case ScheduleFamily::linear: {
      for (std::int64_t k = 1; k <= n; ++k) {
        sched.populations[static_cast<std::size_t>(k - 1)] =
            0.5 + (q_target - 0.5) * static_cast<double>(k) / nd;
      }
      break;
    }
    case ScheduleFamily::geodesic: {
      const double theta0 = kPi / 4.0;
      const double theta_n = std::asin(std::sqrt(q_target));
      for (std::int64_t k = 1; k <= n; ++k) {
        const double theta =
            theta0 + (theta_n - theta0) * static_cast<double>(k) / nd;
        const double s = std::sin(theta);
        sched.populations[static_cast<std::size_t>(k - 1)] = s * s;
      }
      break;
    }
    case ScheduleFamily::geometric: {
      const double log_odds_n = std::log(q_target / (1.0 - q_target));
      for (std::int64_t k = 1; k <= n; ++k) {
        const double lo = log_odds_n * static_cast<double>(k) / nd;
        sched.populations[static_cast<std::size_t>(k - 1)] =
            1.0 / (1.0 + std::exp(-lo));
      }
      break;
    }
    case ScheduleFamily::custom:
      throw std::invalid_argument("use custom_schedule for explicit populations");
  }
  sched.populations.back() = q_target;  // pin the target exactly
  validate_populations(sched.populations);
  return sched;
}

Schedule custom_schedule(std::vector<double> populations) {
  validate_populations(populations);
  Schedule sched;
  sched.family = ScheduleFamily::custom;
  sched.populations = std::move(populations);
  return sched;
}

ProcessOutcome run_chain(const Schedule& schedule, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("run_chain: beta must be positive");
  }
  validate_populations(schedule.populations);

  KahanSum beta_heat;   // sum_k beta E_k (p_{k-1} - p_k)
  KahanSum divergence;  // sum_k KL(p_{k-1} || p_k)
  double prev = 0.5;
  for (double pk : schedule.populations) {
    const double beta_gap = std::log1p(-pk) - std::log(pk);
    beta_heat.add(beta_gap * (prev - pk));
    divergence.add(binary_kl(prev, pk));
    prev = pk;
  }

  ProcessOutcome o;
  o.heat_Q = beta_heat.value() / beta;
  o.dS_system = binary_entropy(prev) - kLn2;
  o.dS_bath = -o.dS_system;  // full swaps move entropy without creating it
  o.mutual_info = 0.0;
  o.rel_ent_bath = divergence.value();
  o.sigma = beta_heat.value() + o.dS_system;
  o.identity_residual = std::abs(o.sigma - o.rel_ent_bath);
  o.q_excited = prev;
  return o;
}

}  // namespace landauer
