#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "landauer/spectrum.hpp"

namespace landauer {

/// Parameters of the engineered interacting bath family. The design inverse
/// temperature beta0 is baked into the energies; alpha sets how close the
/// cooled system gets to its ground state.
struct EngineeredParams {
  std::int64_t n = 2;
  double alpha = 3.0;
  double beta0 = 1.0;
};

/// Parameters of the fully degenerate two-level (critical) bath family:
/// a is the Gibbs weight of the single ground microstate at beta0.
struct CriticalParams {
  std::int64_t n = 1;
  double a = 0.5;
  double beta0 = 1.0;
};

/// n identical non-interacting qubits with the given gap: binomial level
/// degeneracies, dimension 2^n.
SpectrumPtr non_interacting_qubits(std::int64_t n, double gap,
                                   std::int64_t n_cap = 10'000'000);

/// Engineered bath together with its construction metadata. Level energies
/// are not monotone in the design index, so the spectrum is sorted by energy
/// and `level_of_design` keeps the design-index -> level map that the
/// structured (level-shift) permutation needs.
struct EngineeredSpectrum {
  SpectrumPtr spectrum;
  EngineeredParams params;
  /// w[i] = 1 + n^-alpha - cos(2 pi i / n); beta0 * e_i = i ln2 - ln w[i].
  std::vector<double> level_weights;
  std::vector<std::int32_t> level_of_design;
  /// alpha > 2 is required for the quadratic entropy-production decay; the
  /// builder accepts smaller alpha and flags it here.
  bool quadratic_regime = false;
};

EngineeredSpectrum engineered_interacting(const EngineeredParams& params);

/// Design-index weights of the engineered family (useful as an annealing
/// initial condition).
std::vector<double> engineered_level_weights(std::int64_t n, double alpha);

/// Two levels: a single ground microstate at energy 0 and 2^n - 1 degenerate
/// excited microstates at the gap that puts Gibbs weight `a` on the ground
/// state at beta0.
SpectrumPtr critical_degenerate(const CriticalParams& params);

/// Compressed spectrum of independent two-level units with the given gaps
/// (subset-sum convolution; exactly equal sums merge).
SpectrumPtr product_spectrum(std::span<const double> gaps);

/// User-defined spectrum from (energy, degeneracy) pairs; sorts and merges.
SpectrumPtr custom_spectrum(std::vector<std::pair<double, BigCount>> levels,
                            std::string label = {});

}  // namespace landauer
