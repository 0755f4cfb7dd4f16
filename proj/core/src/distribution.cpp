#include "landauer/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

LevelDistribution::LevelDistribution(SpectrumPtr spectrum,
                                     std::vector<DistChunk> chunks)
    : spectrum_(std::move(spectrum)), chunks_(std::move(chunks)) {
  if (!spectrum_) throw std::invalid_argument("distribution needs a spectrum");
  KahanSum total;
  std::size_t pos = 0;
  for (std::size_t lvl = 0; lvl < spectrum_->size(); ++lvl) {
    BigCount covered = 0;
    while (pos < chunks_.size() &&
           chunks_[pos].level == static_cast<std::int32_t>(lvl)) {
      const DistChunk& ch = chunks_[pos];
      if (ch.count < 1) throw std::invalid_argument("chunk count must be >= 1");
      if (std::isnan(ch.log_prob) || ch.log_prob > 1e-9L) {
        throw std::invalid_argument("chunk probability outside [0, 1]");
      }
      if (ch.log_prob != -std::numeric_limits<long double>::infinity()) {
        total.add(std::exp(count_ln_ext(ch.count) + ch.log_prob));
      }
      covered += ch.count;
      ++pos;
    }
    if (covered != spectrum_->level(lvl).count) {
      throw std::invalid_argument(
          "chunk counts do not cover the level degeneracy");
    }
  }
  if (pos != chunks_.size()) {
    throw std::invalid_argument("chunks out of level order");
  }
  total_probability_ = total.value();
  if (std::abs(total_probability_ - 1.0) > 1e-12) {
    throw std::invalid_argument("distribution not normalized");
  }
}

SystemDiag::SystemDiag(std::vector<double> pops) : populations(std::move(pops)) {
  if (populations.empty()) {
    throw std::invalid_argument("system state needs at least one population");
  }
  KahanSum total;
  for (double p : populations) {
    if (!(p >= 0.0) || p > 1.0 + 1e-12) {
      throw std::invalid_argument("population outside [0, 1]");
    }
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw std::invalid_argument("system state not normalized");
  }
}

SystemDiag maximally_mixed_qubit() { return SystemDiag({0.5, 0.5}); }

}  // namespace landauer
