#pragma once

#include <cstdint>
#include <vector>

#include "landauer/distribution.hpp"
#include "landauer/spectra.hpp"

namespace landauer {

/// How the joint eigenvalues are rearranged.
///  - sorted: greedy max-cooling fill; eigenvalues in decreasing order fill
///    the ground sector first, bath levels by ascending energy. Maximizes
///    ground occupation and, among such fills, minimizes heat.
///  - level_shift: the structured permutation for the engineered family;
///    ground-sector level i inherits the Gibbs weight of design level i-1,
///    the excited sector is uniform at the top weight.
enum class FillPolicy { sorted, level_shift };

struct JointChunk {
  std::int32_t sector = 0;
  std::int32_t level = 0;
  BigCount count = 1;
  long double log_prob = 0.0L;
};

/// Post-permutation joint diagonal state, compressed as slot runs. Chunks are
/// ordered sector-major, then by level, then by slot position; per (sector,
/// level) the counts cover the level degeneracy exactly.
class ChunkedJoint {
 public:
  ChunkedJoint(SpectrumPtr spectrum, std::int32_t sectors,
               std::vector<JointChunk> chunks);

  const SpectrumPtr& spectrum() const { return spectrum_; }
  std::int32_t sectors() const { return sectors_; }
  const std::vector<JointChunk>& chunks() const { return chunks_; }

 private:
  SpectrumPtr spectrum_;
  std::int32_t sectors_ = 0;
  std::vector<JointChunk> chunks_;
};

/// Every thermodynamic functional of one protocol run. Entropies in nats,
/// heat in bath energy units. sigma is beta*Q + dS_system; residual is the
/// gap to the mutual-information + relative-entropy route (identically zero
/// in exact arithmetic).
struct ProcessOutcome {
  double heat_Q = 0.0;
  double dS_system = 0.0;
  double dS_bath = 0.0;
  double mutual_info = 0.0;
  double rel_ent_bath = 0.0;
  double sigma = 0.0;
  double q_excited = 0.0;
  double identity_residual = 0.0;
};

struct MaxCoolResult {
  ChunkedJoint joint;
  ProcessOutcome outcome;
};

/// Runs the max-cooling permutation on system (x) Gibbs(spectrum, beta).
/// Only the sorted policy is available through this entry point; level_shift
/// needs the engineered construction metadata.
MaxCoolResult max_cool(const SystemDiag& system, SpectrumPtr spectrum,
                       double beta, FillPolicy policy = FillPolicy::sorted);

/// Same, for an engineered bath; accepts both policies. level_shift requires
/// the maximally mixed qubit and verifies multiset conservation.
MaxCoolResult max_cool(const SystemDiag& system, const EngineeredSpectrum& bath,
                       double beta, FillPolicy policy);

/// Bath marginal of a chunked joint state: per-level overlay of the sector
/// slot assignments (interval merge of chunk breakpoints).
LevelDistribution marginal_bath(const ChunkedJoint& joint);

/// System marginal (per-sector probability totals).
SystemDiag marginal_system(const ChunkedJoint& joint);

/// Exact excited occupation of the engineered protocol at its design
/// temperature: the top-level Gibbs weight times its degeneracy.
double engineered_q(const EngineeredParams& params);

}  // namespace landauer
