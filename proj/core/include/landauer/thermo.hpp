#pragma once

#include "landauer/distribution.hpp"
#include "landauer/spectrum.hpp"

namespace landauer {

/// Gibbs state e^{-beta H}/Z on a compressed spectrum, one chunk per level.
/// Works for any finite beta (finite spectra admit negative temperatures);
/// callers that require beta > 0 enforce it themselves.
LevelDistribution gibbs(SpectrumPtr spectrum, double beta);

/// Log partition function at inverse temperature beta.
double log_partition_function(const Spectrum& spectrum, double beta);

/// Shannon/von Neumann entropy in nats (0 log 0 := 0).
double entropy(const LevelDistribution& dist);
double entropy(const SystemDiag& system);

/// D(p || q), nats. Both distributions must live on the same spectrum and q
/// must be strictly positive wherever p is. Throws on support violation.
double relative_entropy(const LevelDistribution& p, const LevelDistribution& q);

double mean_energy(const LevelDistribution& dist);
double variance_energy(const LevelDistribution& dist);

/// C(gamma) = gamma^2 Var_gamma(H), the bath heat capacity.
double heat_capacity(SpectrumPtr spectrum, double gamma);

struct BetaStarResult {
  double beta_star = 0.0;
  double matched_energy = 0.0;
  int iterations = 0;
  /// Set when the matching temperature lies at or beyond the solver floor,
  /// i.e. the target energy equals the maximally-mixed mean energy.
  bool infinite_temperature = false;
};

/// Inverse temperature whose Gibbs state has the given mean energy.
/// Bracketed bisection on the strictly decreasing energy curve; tolerance is
/// relative to the spectrum's energy scale.
BetaStarResult solve_beta_star(SpectrumPtr spectrum, double target_energy,
                               double rel_tol = 1e-12);

}  // namespace landauer
