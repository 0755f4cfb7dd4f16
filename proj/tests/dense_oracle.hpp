#pragma once

// Brute-force reference implementations used only by the test suites: every
// microstate is materialized and all functionals are computed in the linear
// probability domain, independently of the compressed engine paths.

#include <vector>

#include "landauer/distribution.hpp"
#include "landauer/maxcool.hpp"
#include "landauer/spectrum.hpp"

namespace landauer::testing {

/// Per-microstate energies in level order (requires dimension <= max_dim).
std::vector<double> dense_energies(const Spectrum& spectrum,
                                   std::size_t max_dim = 8192);

/// Per-microstate Gibbs probabilities by direct summation.
std::vector<double> dense_gibbs(const std::vector<double>& energies,
                                double beta);

/// Expands a compressed distribution into per-microstate probabilities.
std::vector<double> expand_distribution(const LevelDistribution& dist);

double dense_entropy(const std::vector<double>& p);
double dense_mean_energy(const std::vector<double>& energies,
                         const std::vector<double>& p);
double dense_variance_energy(const std::vector<double>& energies,
                             const std::vector<double>& p);
double dense_relative_entropy(const std::vector<double>& p,
                              const std::vector<double>& q);

/// Joint state as explicit per-sector value rows.
struct DenseJoint {
  std::vector<std::vector<double>> sector_values;  // [sector][microstate]
};

/// Functionals of an explicit joint state against the thermal reference.
ProcessOutcome dense_outcome(const DenseJoint& joint,
                             const std::vector<double>& energies,
                             const std::vector<double>& gibbs_probs,
                             const SystemDiag& initial_system, double beta);

/// Full brute-force max-cooling run: expand, sort, fill, evaluate.
ProcessOutcome dense_max_cool(const SystemDiag& system, const Spectrum& spectrum,
                              double beta);

/// The filled joint state of the brute-force run (for marginal checks).
DenseJoint dense_max_cool_joint(const SystemDiag& system,
                                const Spectrum& spectrum, double beta);

}  // namespace landauer::testing
