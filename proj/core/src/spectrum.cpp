#include "landauer/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

Level make_level(double energy, BigCount count) {
  if (!std::isfinite(energy)) {
    throw std::invalid_argument("level energy must be finite");
  }
  if (count < 1) throw std::invalid_argument("level count must be >= 1");
  Level lv;
  lv.energy = energy;
  lv.log2_degeneracy = count_log2(count);
  lv.count = std::move(count);
  return lv;
}

Level make_level_log2(double energy, double log2_degeneracy) {
  if (!std::isfinite(energy)) {
    throw std::invalid_argument("level energy must be finite");
  }
  Level lv;
  lv.energy = energy;
  lv.log2_degeneracy = log2_degeneracy;
  lv.count = count_from_log2(log2_degeneracy);
  // The stored log2 must be consistent with an integer count. Small counts
  // round-trip exactly; huge ones are checked at double resolution.
  const double back = count_log2(lv.count);
  if (std::abs(back - log2_degeneracy) >
      1e-9 * std::max(1.0, std::abs(log2_degeneracy))) {
    throw std::invalid_argument("log2 degeneracy does not match any integer");
  }
  return lv;
}

Spectrum::Spectrum(std::vector<Level> levels, std::string label)
    : levels_(std::move(levels)), dimension_(0), label_(std::move(label)) {
  if (levels_.empty()) throw std::invalid_argument("spectrum has no levels");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    if (!std::isfinite(lv.energy)) {
      throw std::invalid_argument("spectrum energy must be finite");
    }
    if (lv.count < 1) {
      throw std::invalid_argument("spectrum degeneracy must be >= 1");
    }
    if (i > 0 && !(levels_[i - 1].energy < lv.energy)) {
      throw std::invalid_argument(
          "spectrum energies must be strictly increasing (merge equal "
          "energies first)");
    }
    dimension_ += lv.count;
  }
  log2_dimension_ = count_log2(dimension_);
}

Spectrum Spectrum::from_unsorted(std::vector<Level> levels, std::string label) {
  std::sort(levels.begin(), levels.end(),
            [](const Level& a, const Level& b) { return a.energy < b.energy; });
  std::vector<Level> merged;
  merged.reserve(levels.size());
  for (Level& lv : levels) {
    if (!merged.empty() && merged.back().energy == lv.energy) {
      merged.back().count += lv.count;
      merged.back().log2_degeneracy = count_log2(merged.back().count);
    } else {
      merged.push_back(std::move(lv));
    }
  }
  return Spectrum(std::move(merged), std::move(label));
}

double Spectrum::uniform_mean_energy() const {
  const double ln_dim = count_ln(dimension_);
  KahanSum s;
  for (const Level& lv : levels_) {
    s.add(std::exp(count_ln(lv.count) - ln_dim) * lv.energy);
  }
  return s.value();
}

bool Spectrum::same_levels(const Spectrum& other) const {
  if (levels_.size() != other.levels_.size()) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].energy != other.levels_[i].energy ||
        levels_[i].count != other.levels_[i].count) {
      return false;
    }
  }
  return true;
}

SpectrumPtr make_spectrum(std::vector<Level> levels, std::string label) {
  return std::make_shared<const Spectrum>(std::move(levels), std::move(label));
}

}  // namespace landauer
