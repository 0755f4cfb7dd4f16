#pragma once

#include <cstdint>
#include <vector>

#include "landauer/spectrum.hpp"

namespace landauer {

/// A run of microstates within one level sharing a per-microstate
/// probability. log_prob is the natural log of the per-microstate value;
/// -inf encodes exact zeros. Extended precision: the log magnitudes reach
/// ~n ln 2 and must cancel against log counts to full double accuracy.
struct DistChunk {
  std::int32_t level = 0;
  BigCount count = 1;
  long double log_prob = 0.0L;
};

/// Diagonal bath state, piecewise constant within levels. Chunks are grouped
/// by level in ascending order; within a level they appear in slot order.
class LevelDistribution {
 public:
  LevelDistribution(SpectrumPtr spectrum, std::vector<DistChunk> chunks);

  const SpectrumPtr& spectrum() const { return spectrum_; }
  const std::vector<DistChunk>& chunks() const { return chunks_; }

  /// Compensated total probability; 1 within 1e-12 by construction.
  double total_probability() const { return total_probability_; }

 private:
  SpectrumPtr spectrum_;
  std::vector<DistChunk> chunks_;
  double total_probability_ = 0.0;
};

/// Diagonal system state (populations of the energy eigenbasis).
struct SystemDiag {
  std::vector<double> populations;

  explicit SystemDiag(std::vector<double> pops);
  std::size_t dim() const { return populations.size(); }
};

SystemDiag maximally_mixed_qubit();

}  // namespace landauer
