#include "landauer/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

/// Weight count * p of a chunk, computed in the log domain so that counts
/// ~2^4096 against probabilities ~2^-4096 never underflow. The two log
/// magnitudes cancel almost completely, so their sum is taken in extended
/// precision; otherwise every weight picks up an independent ~1e-13 error
/// that the closed-form heat checks can see.
double chunk_weight(const DistChunk& ch) {
  if (ch.log_prob == kNegInf) return 0.0;
  return static_cast<double>(std::exp(count_ln_ext(ch.count) + ch.log_prob));
}

void require_same_spectrum(const LevelDistribution& p,
                           const LevelDistribution& q) {
  if (p.spectrum() == q.spectrum()) return;
  if (p.spectrum()->same_levels(*q.spectrum())) return;
  throw std::invalid_argument("distributions live on different spectra");
}

}  // namespace

double log_partition_function(const Spectrum& spectrum, double beta) {
  if (!std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite");
  }
  std::vector<double> terms;
  terms.reserve(spectrum.size());
  for (const Level& lv : spectrum.levels()) {
    terms.push_back(count_ln(lv.count) - beta * lv.energy);
  }
  return log_sum_exp(terms);
}

LevelDistribution gibbs(SpectrumPtr spectrum, double beta) {
  if (!spectrum) throw std::invalid_argument("gibbs: null spectrum");
  const long double log_z = log_partition_function(*spectrum, beta);
  std::vector<DistChunk> chunks;
  chunks.reserve(spectrum->size());
  for (std::size_t i = 0; i < spectrum->size(); ++i) {
    const Level& lv = spectrum->level(i);
    chunks.push_back(DistChunk{
        static_cast<std::int32_t>(i), lv.count,
        -static_cast<long double>(beta) * static_cast<long double>(lv.energy) -
            log_z});
  }
  return LevelDistribution(std::move(spectrum), std::move(chunks));
}

double entropy(const LevelDistribution& dist) {
  KahanSum s;
  for (const DistChunk& ch : dist.chunks()) {
    const double w = chunk_weight(ch);
    if (w > 0.0) s.add(-w * ch.log_prob);
  }
  return s.value();
}

double entropy(const SystemDiag& system) {
  KahanSum s;
  for (double p : system.populations) s.add(-xlogx(p));
  return s.value();
}

double relative_entropy(const LevelDistribution& p,
                        const LevelDistribution& q) {
  require_same_spectrum(p, q);
  KahanSum s;
  const auto& pc = p.chunks();
  const auto& qc = q.chunks();
  std::size_t pi = 0, qi = 0;
  // Walk both chunk lists level by level, splitting at count boundaries.
  BigCount p_used = 0, q_used = 0;
  while (pi < pc.size() && qi < qc.size()) {
    if (pc[pi].level != qc[qi].level) {
      throw std::logic_error("relative_entropy: chunk level mismatch");
    }
    const BigCount p_rem = pc[pi].count - p_used;
    const BigCount q_rem = qc[qi].count - q_used;
    const BigCount take = p_rem < q_rem ? p_rem : q_rem;
    const long double lp = pc[pi].log_prob;
    const long double lq = qc[qi].log_prob;
    if (lp != kNegInf) {
      if (lq == kNegInf) {
        throw std::domain_error(
            "relative_entropy: support violation (p > 0 where q = 0)");
      }
      s.add(std::exp(count_ln_ext(take) + lp) * (lp - lq));
    }
    p_used += take;
    q_used += take;
    if (p_used == pc[pi].count) {
      ++pi;
      p_used = 0;
    }
    if (q_used == qc[qi].count) {
      ++qi;
      q_used = 0;
    }
  }
  double v = s.value();
  if (v < 0.0 && v > -1e-10) v = 0.0;  // rounding of an exact zero
  return v;
}

double mean_energy(const LevelDistribution& dist) {
  const Spectrum& sp = *dist.spectrum();
  KahanSum s;
  for (const DistChunk& ch : dist.chunks()) {
    const double w = chunk_weight(ch);
    if (w != 0.0) s.add(w * sp.level(ch.level).energy);
  }
  return s.value();
}

double variance_energy(const LevelDistribution& dist) {
  const Spectrum& sp = *dist.spectrum();
  const double mu = mean_energy(dist);
  KahanSum s;
  for (const DistChunk& ch : dist.chunks()) {
    const double w = chunk_weight(ch);
    if (w != 0.0) {
      const double d = sp.level(ch.level).energy - mu;
      s.add(w * d * d);
    }
  }
  return std::max(0.0, s.value());
}

double heat_capacity(SpectrumPtr spectrum, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("heat_capacity: gamma must be positive");
  }
  if (spectrum->size() == 1) return 0.0;
  return gamma * gamma * variance_energy(gibbs(spectrum, gamma));
}

BetaStarResult solve_beta_star(SpectrumPtr spectrum, double target_energy,
                               double rel_tol) {
  const double e_min = spectrum->min_energy();
  const double e_max = spectrum->max_energy();
  const double e_uniform = spectrum->uniform_mean_energy();
  const double scale =
      std::max({std::abs(e_min), std::abs(e_max), std::abs(target_energy), 1e-300});
  const double tol = rel_tol * scale;

  if (!(target_energy > e_min) || !(target_energy < e_max)) {
    throw std::domain_error(
        "solve_beta_star: target outside the attainable energy range");
  }

  BetaStarResult result;
  result.matched_energy = target_energy;

  // Targets at or above the maximally mixed energy need beta* <= 0; report
  // them as the infinite-temperature limit rather than a root.
  if (target_energy >= e_uniform - tol) {
    if (target_energy > e_uniform + tol) {
      throw std::domain_error(
          "solve_beta_star: target above the infinite-temperature energy");
    }
    result.beta_star = 0.0;
    result.matched_energy = e_uniform;
    result.infinite_temperature = true;
    return result;
  }

  const auto mean_at = [&](double g) {
    return mean_energy(gibbs(spectrum, g)) - target_energy;
  };

  double lo = 1e-14 / scale;  // solver floor
  double hi = 1.0 / scale;
  int expansions = 0;
  while (mean_at(hi) > 0.0) {
    hi *= 4.0;
    if (++expansions > 600) {
      throw std::runtime_error("solve_beta_star: bracket expansion failed");
    }
  }
  if (mean_at(lo) < 0.0) {
    // Root below the floor: indistinguishable from infinite temperature.
    result.beta_star = lo;
    result.matched_energy = mean_energy(gibbs(spectrum, lo));
    result.infinite_temperature = true;
    return result;
  }

  const BisectionResult bi = bisect_decreasing(mean_at, lo, hi, tol);
  if (!bi.converged) {
    throw std::runtime_error("solve_beta_star: did not converge");
  }
  result.beta_star = bi.x;
  result.matched_energy = mean_energy(gibbs(spectrum, bi.x));
  result.iterations = bi.iterations + expansions;
  return result;
}

}  // namespace landauer
