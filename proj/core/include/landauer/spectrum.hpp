#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "landauer/bigcount.hpp"

namespace landauer {

/// One degenerate energy level of a compressed bath Hamiltonian.
///
/// `count` is the exact integer degeneracy and is authoritative for the
/// permutation engine; `log2_degeneracy` is authoritative for serialization
/// (it is what the on-disk format stores) and for log-domain arithmetic.
struct Level {
  double energy = 0.0;
  double log2_degeneracy = 0.0;
  BigCount count = 1;
};

Level make_level(double energy, BigCount count);
Level make_level_log2(double energy, double log2_degeneracy);

/// Compressed bath Hamiltonian: strictly increasing energies with integer
/// degeneracies. Immutable after construction; share freely across threads.
class Spectrum {
 public:
  /// Levels must already be sorted with strictly increasing energies.
  explicit Spectrum(std::vector<Level> levels, std::string label = {});

  /// Sorts by energy and merges levels with exactly equal energies.
  static Spectrum from_unsorted(std::vector<Level> levels,
                                std::string label = {});

  std::size_t size() const { return levels_.size(); }
  const std::vector<Level>& levels() const { return levels_; }
  const Level& level(std::size_t i) const { return levels_[i]; }
  const std::string& label() const { return label_; }

  const BigCount& dimension() const { return dimension_; }
  double log2_dimension() const { return log2_dimension_; }
  double min_energy() const { return levels_.front().energy; }
  double max_energy() const { return levels_.back().energy; }

  /// Mean energy of the maximally mixed state (the infinite-temperature
  /// limit of the Gibbs mean energy).
  double uniform_mean_energy() const;

  bool same_levels(const Spectrum& other) const;

 private:
  std::vector<Level> levels_;
  BigCount dimension_;
  double log2_dimension_ = 0.0;
  std::string label_;
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

SpectrumPtr make_spectrum(std::vector<Level> levels, std::string label = {});

}  // namespace landauer
