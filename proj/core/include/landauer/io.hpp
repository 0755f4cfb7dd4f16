#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "landauer/maxcool.hpp"
#include "landauer/spectrum.hpp"

namespace landauer {

/// On-disk spectrum format: {"label": ..., "beta": ..., "levels":
/// [{"energy": e, "degeneracy_log2": g}, ...]}. Doubles are written in
/// shortest round-trip form, so save/load is exact at the bit level.
struct SpectrumFile {
  SpectrumPtr spectrum;
  double beta = 1.0;
};

std::string spectrum_to_json(const Spectrum& spectrum, double beta);
SpectrumFile spectrum_from_json(const std::string& text);
void save_spectrum(const Spectrum& spectrum, double beta,
                   const std::string& path);
SpectrumFile load_spectrum(const std::string& path);

/// Flat JSON record of a ProcessOutcome.
std::string outcome_to_json(const ProcessOutcome& outcome);
ProcessOutcome outcome_from_json(const std::string& text);

/// One row of the sweep CSV shared by the erasure, collisional and figure
/// commands. `curve` holds the policy, schedule family, or reference-curve
/// name; bound columns are empty when not applicable.
struct SweepRow {
  std::string curve;
  std::int64_t n = 0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  double beta_q = std::numeric_limits<double>::quiet_NaN();
  double dS_system = std::numeric_limits<double>::quiet_NaN();
  double mutual_info = std::numeric_limits<double>::quiet_NaN();
  double rel_ent_bath = std::numeric_limits<double>::quiet_NaN();
  double sigma = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> lb_nonint;
  std::optional<double> lb_rw;
  std::optional<double> lb_heatcap;
  std::optional<double> ub_quadratic;
};

inline constexpr const char* kSweepSchema = "landauer.sweep.v1";

/// Shortest round-trip decimal form of a double ("" for NaN in CSV cells).
std::string format_double(double v);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_row_json(const SweepRow& row);

}  // namespace landauer
