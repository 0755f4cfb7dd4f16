#include "landauer/maxcool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "landauer/numeric.hpp"
#include "landauer/thermo.hpp"

namespace landauer {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double log_or_neg_inf(double p) {
  return p > 0.0 ? std::log(static_cast<long double>(p)) : kNegInf;
}

/// log(e^a + e^b) for two chunk values; exact when one side is zero.
long double lse2(long double a, long double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const long double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

struct SourceChunk {
  long double log_prob;  // ln p_s + ln g_i
  double energy;         // bath level energy, first tie-break
  std::int32_t sector;
  std::int32_t level;
  BigCount count;
};

/// Greedy descending fill. Target slot groups are ordered ground sector
/// first, bath levels by ascending energy inside a sector; chunks split at
/// group boundaries. Ties resolve to lower bath energy, then lower sector,
/// so the output is deterministic and heat-minimal within the class.
std::vector<JointChunk> fill_sorted(const SystemDiag& system,
                                    const Spectrum& spectrum,
                                    const LevelDistribution& tau) {
  const std::int32_t sectors = static_cast<std::int32_t>(system.dim());
  const std::int32_t levels = static_cast<std::int32_t>(spectrum.size());

  std::vector<SourceChunk> src;
  src.reserve(static_cast<std::size_t>(sectors) * levels);
  for (std::int32_t s = 0; s < sectors; ++s) {
    const long double lp = log_or_neg_inf(system.populations[s]);
    for (std::int32_t i = 0; i < levels; ++i) {
      src.push_back(SourceChunk{lp + tau.chunks()[i].log_prob,
                                spectrum.level(i).energy, s, i,
                                spectrum.level(i).count});
    }
  }
  std::sort(src.begin(), src.end(), [](const SourceChunk& a, const SourceChunk& b) {
    if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.sector < b.sector;
  });

  std::vector<JointChunk> out;
  out.reserve(src.size() * 2);
  std::size_t cursor = 0;
  BigCount taken_from_cursor = 0;
  for (std::int32_t s = 0; s < sectors; ++s) {
    for (std::int32_t lvl = 0; lvl < levels; ++lvl) {
      BigCount capacity = spectrum.level(lvl).count;
      while (capacity > 0) {
        const SourceChunk& sc = src[cursor];
        BigCount avail = sc.count - taken_from_cursor;
        const BigCount take = avail < capacity ? avail : capacity;
        if (!out.empty() && out.back().sector == s && out.back().level == lvl &&
            out.back().log_prob == sc.log_prob) {
          out.back().count += take;
        } else {
          out.push_back(JointChunk{s, lvl, take, sc.log_prob});
        }
        capacity -= take;
        taken_from_cursor += take;
        if (taken_from_cursor == sc.count) {
          ++cursor;
          taken_from_cursor = 0;
        }
      }
    }
  }
  if (cursor != src.size() || taken_from_cursor != 0) {
    throw std::logic_error("max_cool: fill did not consume all eigenvalues");
  }
  return out;
}

/// The structured permutation of the engineered bath. Valid only for the
/// maximally mixed qubit; ground design levels 0 and 1 both receive the
/// ground weight, design level i receives the weight of i-1, and the entire
/// excited sector sits at the top-level weight.
std::vector<JointChunk> fill_level_shift(const SystemDiag& system,
                                         const EngineeredSpectrum& bath,
                                         const LevelDistribution& tau) {
  if (system.dim() != 2 || std::abs(system.populations[0] - 0.5) > 1e-12 ||
      std::abs(system.populations[1] - 0.5) > 1e-12) {
    throw std::invalid_argument(
        "level_shift: only defined for the maximally mixed qubit");
  }
  const std::size_t designs = bath.level_of_design.size();
  const std::int64_t n = bath.params.n;
  if (designs != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("level_shift: inconsistent design map");
  }

  // Gibbs log-weight per design index (shared level => shared weight).
  std::vector<long double> ln_g(designs);
  for (std::size_t i = 0; i < designs; ++i) {
    ln_g[i] = tau.chunks()[bath.level_of_design[i]].log_prob;
  }
  const long double ln_half = std::log(0.5L);

  const auto design_count = [&](std::size_t i) {
    return i == 0 ? BigCount(1) : pow2_count(static_cast<std::uint64_t>(i - 1));
  };

  // Assemble target chunks keyed by (sector, level); within a level the
  // slot order follows the design order.
  std::map<std::pair<std::int32_t, std::int32_t>, std::vector<JointChunk>> groups;
  const auto add = [&](std::int32_t sector, std::size_t design, long double lp) {
    const std::int32_t lvl = bath.level_of_design[design];
    groups[{sector, lvl}].push_back(
        JointChunk{sector, lvl, design_count(design), lp});
  };
  add(0, 0, ln_half + ln_g[0]);
  add(0, 1, ln_half + ln_g[0]);
  for (std::size_t i = 2; i < designs; ++i) add(0, i, ln_half + ln_g[i - 1]);
  for (std::size_t i = 0; i < designs; ++i) add(1, i, ln_half + ln_g[designs - 1]);

  std::vector<JointChunk> out;
  for (auto& [key, chunk_list] : groups) {
    for (JointChunk& ch : chunk_list) {
      if (!out.empty() && out.back().sector == ch.sector &&
          out.back().level == ch.level && out.back().log_prob == ch.log_prob) {
        out.back().count += ch.count;
      } else {
        out.push_back(std::move(ch));
      }
    }
  }

  // Multiset conservation: the rearranged values with their total counts
  // must reproduce the product state exactly.
  std::map<long double, BigCount> want, have;
  for (std::size_t i = 0; i < designs; ++i) {
    want[ln_half + ln_g[i]] += 2 * design_count(i);
  }
  for (const JointChunk& ch : out) have[ch.log_prob] += ch.count;
  if (want != have) {
    throw std::invalid_argument(
        "level_shift: bath is not an engineered spectrum (multiset mismatch)");
  }
  return out;
}

ProcessOutcome compute_outcome(const ChunkedJoint& joint,
                               const SystemDiag& initial_system,
                               const LevelDistribution& tau, double beta) {
  const SystemDiag sigma_s = marginal_system(joint);
  const LevelDistribution sigma_b = marginal_bath(joint);

  const double e_sigma = mean_energy(sigma_b);
  const double e_tau = mean_energy(tau);
  const double s_sigma_s = entropy(sigma_s);
  const double s_initial = entropy(initial_system);
  const double s_sigma_b = entropy(sigma_b);
  const double s_tau = entropy(tau);

  ProcessOutcome o;
  o.heat_Q = e_sigma - e_tau;
  o.dS_system = s_sigma_s - s_initial;
  o.dS_bath = s_sigma_b - s_tau;
  // Permutations preserve the joint spectrum, so S(joint) = S(p) + S(tau).
  o.mutual_info = s_sigma_s + s_sigma_b - s_initial - s_tau;
  if (o.mutual_info < 0.0 && o.mutual_info > -1e-10) o.mutual_info = 0.0;
  o.rel_ent_bath = relative_entropy(sigma_b, tau);
  o.sigma = beta * o.heat_Q + o.dS_system;
  o.identity_residual = std::abs(o.sigma - (o.mutual_info + o.rel_ent_bath));
  o.q_excited = sigma_s.dim() == 2 ? sigma_s.populations[1]
                                   : 1.0 - sigma_s.populations[0];
  return o;
}

}  // namespace

ChunkedJoint::ChunkedJoint(SpectrumPtr spectrum, std::int32_t sectors,
                           std::vector<JointChunk> chunks)
    : spectrum_(std::move(spectrum)), sectors_(sectors), chunks_(std::move(chunks)) {
  if (!spectrum_) throw std::invalid_argument("joint state needs a spectrum");
  if (sectors_ < 1) throw std::invalid_argument("joint state needs sectors");
  const std::int32_t levels = static_cast<std::int32_t>(spectrum_->size());
  std::size_t pos = 0;
  for (std::int32_t s = 0; s < sectors_; ++s) {
    for (std::int32_t lvl = 0; lvl < levels; ++lvl) {
      BigCount covered = 0;
      while (pos < chunks_.size() && chunks_[pos].sector == s &&
             chunks_[pos].level == lvl) {
        covered += chunks_[pos].count;
        ++pos;
      }
      if (covered != spectrum_->level(lvl).count) {
        throw std::invalid_argument("joint chunks do not tile a slot group");
      }
    }
  }
  if (pos != chunks_.size()) {
    throw std::invalid_argument("joint chunks out of order");
  }
}

MaxCoolResult max_cool(const SystemDiag& system, SpectrumPtr spectrum,
                       double beta, FillPolicy policy) {
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  if (policy == FillPolicy::level_shift) {
    throw std::invalid_argument(
        "level_shift needs the engineered bath metadata; pass an "
        "EngineeredSpectrum");
  }
  LevelDistribution tau = gibbs(spectrum, beta);
  std::vector<JointChunk> chunks = fill_sorted(system, *spectrum, tau);
  ChunkedJoint joint(spectrum, static_cast<std::int32_t>(system.dim()),
                     std::move(chunks));
  ProcessOutcome outcome = compute_outcome(joint, system, tau, beta);
  return MaxCoolResult{std::move(joint), outcome};
}

MaxCoolResult max_cool(const SystemDiag& system, const EngineeredSpectrum& bath,
                       double beta, FillPolicy policy) {
  if (policy == FillPolicy::sorted) return max_cool(system, bath.spectrum, beta);
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  LevelDistribution tau = gibbs(bath.spectrum, beta);
  std::vector<JointChunk> chunks = fill_level_shift(system, bath, tau);
  ChunkedJoint joint(bath.spectrum, 2, std::move(chunks));
  ProcessOutcome outcome = compute_outcome(joint, system, tau, beta);
  return MaxCoolResult{std::move(joint), outcome};
}

LevelDistribution marginal_bath(const ChunkedJoint& joint) {
  const Spectrum& spectrum = *joint.spectrum();
  const std::int32_t levels = static_cast<std::int32_t>(spectrum.size());
  const std::int32_t sectors = joint.sectors();

  // Per-level, per-sector chunk runs in slot order.
  std::vector<std::vector<std::vector<const JointChunk*>>> runs(
      static_cast<std::size_t>(levels),
      std::vector<std::vector<const JointChunk*>>(
          static_cast<std::size_t>(sectors)));
  for (const JointChunk& ch : joint.chunks()) {
    runs[static_cast<std::size_t>(ch.level)][static_cast<std::size_t>(ch.sector)]
        .push_back(&ch);
  }

  std::vector<DistChunk> out;
  for (std::int32_t lvl = 0; lvl < levels; ++lvl) {
    auto& per_sector = runs[static_cast<std::size_t>(lvl)];
    std::vector<std::size_t> idx(per_sector.size(), 0);
    std::vector<BigCount> used(per_sector.size(), BigCount(0));
    BigCount remaining = spectrum.level(lvl).count;
    while (remaining > 0) {
      // Width of the next merged interval: smallest remaining run.
      BigCount take = remaining;
      for (std::size_t s = 0; s < per_sector.size(); ++s) {
        BigCount avail = per_sector[s][idx[s]]->count - used[s];
        if (avail < take) take = avail;
      }
      long double lp = kNegInf;
      for (std::size_t s = 0; s < per_sector.size(); ++s) {
        lp = lse2(lp, per_sector[s][idx[s]]->log_prob);
      }
      if (!out.empty() && out.back().level == lvl && out.back().log_prob == lp) {
        out.back().count += take;
      } else {
        out.push_back(DistChunk{lvl, take, lp});
      }
      for (std::size_t s = 0; s < per_sector.size(); ++s) {
        used[s] += take;
        if (used[s] == per_sector[s][idx[s]]->count) {
          ++idx[s];
          used[s] = 0;
        }
      }
      remaining -= take;
    }
  }
  return LevelDistribution(joint.spectrum(), std::move(out));
}

SystemDiag marginal_system(const ChunkedJoint& joint) {
  std::vector<KahanSum> totals(static_cast<std::size_t>(joint.sectors()));
  for (const JointChunk& ch : joint.chunks()) {
    if (ch.log_prob != kNegInf) {
      // Extended-precision sum of the cancelling log magnitudes, as in the
      // distribution reductions.
      totals[static_cast<std::size_t>(ch.sector)].add(
          std::exp(count_ln_ext(ch.count) + ch.log_prob));
    }
  }
  std::vector<double> pops;
  pops.reserve(totals.size());
  for (const KahanSum& t : totals) pops.push_back(t.value());
  return SystemDiag(std::move(pops));
}

double engineered_q(const EngineeredParams& params) {
  const EngineeredSpectrum bath = engineered_interacting(params);
  const long double log_z =
      log_partition_function(*bath.spectrum, params.beta0);
  const std::int32_t top_level = bath.level_of_design.back();
  const long double beta_eps_top = static_cast<long double>(params.beta0) *
                                   bath.spectrum->level(top_level).energy;
  const long double ln_omega_top =
      static_cast<long double>(params.n - 1) * 0.693147180559945309417232121458L;
  return static_cast<double>(std::exp(ln_omega_top - beta_eps_top - log_z));
}

}  // namespace landauer
