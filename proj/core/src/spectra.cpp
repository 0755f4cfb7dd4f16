#include "landauer/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer {

SpectrumPtr non_interacting_qubits(std::int64_t n, double gap,
                                   std::int64_t n_cap) {
  if (n < 1) throw std::invalid_argument("non_interacting_qubits: n >= 1");
  if (n > n_cap) {
    throw std::invalid_argument("non_interacting_qubits: n exceeds cap");
  }
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw std::invalid_argument("non_interacting_qubits: gap must be > 0");
  }
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(n) + 1);
  BigCount binom = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    levels.push_back(make_level(static_cast<double>(k) * gap, binom));
    if (k < n) {
      binom *= static_cast<unsigned long>(n - k);
      binom /= static_cast<unsigned long>(k + 1);
    }
  }
  return make_spectrum(std::move(levels),
                       "non_interacting(n=" + std::to_string(n) + ")");
}

std::vector<double> engineered_level_weights(std::int64_t n, double alpha) {
  const double na = std::pow(static_cast<double>(n), -alpha);
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    // 1 - cos(2 pi i / n) as 2 sin^2(pi i / n): exact at the endpoints and
    // free of cancellation where the weight is ~n^-alpha.
    const double s = std::sin(kPi * static_cast<double>(i) / static_cast<double>(n));
    w[static_cast<std::size_t>(i)] = na + 2.0 * s * s;
  }
  return w;
}

EngineeredSpectrum engineered_interacting(const EngineeredParams& params) {
  if (params.n < 2) throw std::invalid_argument("engineered: n >= 2");
  // Exact degeneracies carry ~n^2/2 bits in total; past this cap the
  // builder would silently eat gigabytes.
  if (params.n > (1 << 16)) {
    throw std::invalid_argument("engineered: n exceeds the 2^16 size cap");
  }
  if (!(params.alpha > 0.0)) throw std::invalid_argument("engineered: alpha > 0");
  if (!(params.beta0 > 0.0)) throw std::invalid_argument("engineered: beta0 > 0");

  const std::int64_t n = params.n;
  EngineeredSpectrum out;
  out.params = params;
  out.level_weights = engineered_level_weights(n, params.alpha);
  out.quadratic_regime = params.alpha > 2.0;

  // Design level i has degeneracy 1 (i = 0) or 2^{i-1}, and energy
  // beta0 * e_i = i ln2 - ln w_i (the i ln2 is ln of the next multiplicity,
  // continued as 2^n past the top level).
  struct DesignLevel {
    double energy;
    std::int32_t design;
  };
  std::vector<DesignLevel> order(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    const double beta_e = static_cast<double>(i) * kLn2 -
                          std::log(out.level_weights[static_cast<std::size_t>(i)]);
    order[static_cast<std::size_t>(i)] = {beta_e / params.beta0,
                                          static_cast<std::int32_t>(i)};
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const DesignLevel& a, const DesignLevel& b) {
                     return a.energy < b.energy;
                   });

  std::vector<Level> levels;
  levels.reserve(order.size());
  out.level_of_design.assign(order.size(), 0);
  for (const DesignLevel& dl : order) {
    const BigCount count =
        dl.design == 0 ? BigCount(1)
                       : pow2_count(static_cast<std::uint64_t>(dl.design - 1));
    if (!levels.empty() && levels.back().energy == dl.energy) {
      // Exactly coincident energies merge; the design map keeps both labels.
      Level merged = make_level(dl.energy, levels.back().count + count);
      levels.back() = std::move(merged);
    } else {
      levels.push_back(make_level(dl.energy, count));
    }
    out.level_of_design[static_cast<std::size_t>(dl.design)] =
        static_cast<std::int32_t>(levels.size() - 1);
  }

  out.spectrum = make_spectrum(
      std::move(levels), "engineered(n=" + std::to_string(n) +
                             ",alpha=" + std::to_string(params.alpha) + ")");
  if (out.spectrum->dimension() != pow2_count(static_cast<std::uint64_t>(n))) {
    throw std::logic_error("engineered: dimension is not 2^n");
  }
  return out;
}

SpectrumPtr critical_degenerate(const CriticalParams& params) {
  if (params.n < 1) throw std::invalid_argument("critical: n >= 1");
  if (!(params.beta0 > 0.0)) throw std::invalid_argument("critical: beta0 > 0");
  const double a_min = std::exp2(-static_cast<double>(params.n));
  if (!(params.a > a_min) || !(params.a < 1.0)) {
    throw std::invalid_argument(
        "critical: ground weight a must lie in (2^-n, 1)");
  }
  // ln N for N = 2^n - 1 without forming N as a double.
  const double n_d = static_cast<double>(params.n);
  const double ln_big_n = n_d * kLn2 + std::log1p(-std::exp2(-n_d));
  const double gap =
      (ln_big_n - (std::log1p(-params.a) - std::log(params.a))) / params.beta0;
  if (!(gap > 0.0)) {
    throw std::logic_error("critical: non-positive excited gap");
  }
  BigCount excited = pow2_count(static_cast<std::uint64_t>(params.n));
  excited -= 1;
  std::vector<Level> levels;
  levels.push_back(make_level(0.0, BigCount(1)));
  levels.push_back(make_level(gap, std::move(excited)));
  return make_spectrum(std::move(levels),
                       "critical(n=" + std::to_string(params.n) + ")");
}

SpectrumPtr product_spectrum(std::span<const double> gaps) {
  if (gaps.empty()) throw std::invalid_argument("product_spectrum: no gaps");
  std::vector<std::pair<double, BigCount>> acc = {{0.0, BigCount(1)}};
  for (double gap : gaps) {
    if (!(gap > 0.0)) {
      throw std::invalid_argument("product_spectrum: gaps must be > 0");
    }
    std::vector<std::pair<double, BigCount>> next;
    next.reserve(acc.size() * 2);
    for (const auto& [e, c] : acc) {
      next.emplace_back(e, c);
      next.emplace_back(e + gap, c);
    }
    std::sort(next.begin(), next.end());
    acc.clear();
    for (auto& [e, c] : next) {
      if (!acc.empty() && acc.back().first == e) {
        acc.back().second += c;
      } else {
        acc.emplace_back(e, std::move(c));
      }
    }
  }
  std::vector<Level> levels;
  levels.reserve(acc.size());
  for (auto& [e, c] : acc) levels.push_back(make_level(e, std::move(c)));
  return make_spectrum(std::move(levels),
                       "product(n=" + std::to_string(gaps.size()) + ")");
}

SpectrumPtr custom_spectrum(std::vector<std::pair<double, BigCount>> pairs,
                            std::string label) {
  std::vector<Level> levels;
  levels.reserve(pairs.size());
  for (auto& [e, c] : pairs) levels.push_back(make_level(e, std::move(c)));
  return std::make_shared<const Spectrum>(
      Spectrum::from_unsorted(std::move(levels), std::move(label)));
}

}  // namespace landauer
