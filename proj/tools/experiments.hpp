#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "landauer/anneal.hpp"
#include "landauer/bounds.hpp"
#include "landauer/collisional.hpp"
#include "landauer/io.hpp"
#include "landauer/maxcool.hpp"

namespace landauer::tools {

/// The published figure quotes q = n^-alpha while the exact protocol
/// occupation is n^-alpha/(2Z) and the derivation's own label is n^-alpha/2;
/// all three conventions are selectable, exact is the default.
enum class QConvention { exact, half, caption };

QConvention parse_q_convention(const std::string& name);
double q_target(std::int64_t n, double alpha, QConvention convention);

/// How the critical bath's free parameter a is picked per n:
///  - increment: the cooling increment 1/2 - q is pinned to n^-2/2, the
///    weak-cooling window where entropy production decays ~1/n;
///  - matched: q matches the engineered target at the same n (strong
///    cooling; entropy production then grows ~n ln2 / 2).
enum class CriticalRule { increment, matched };

struct SweepOptions {
  std::vector<std::int64_t> n_list;
  double alpha = 3.0;
  double beta = 1.0;
  bool sorted_policy = true;
  bool level_shift_policy = true;
  QConvention q_convention = QConvention::exact;
  int threads = 1;
};

/// Engineered-bath erasure runs with all four bound columns filled.
std::vector<SweepRow> erasure_sweep_rows(const SweepOptions& options);

/// Full-swap collision chains for the given families at the conventional
/// target occupation.
std::vector<SweepRow> collisional_rows(const SweepOptions& options,
                                       const std::vector<ScheduleFamily>& families);

/// The three dashed reference curves of the erasure comparison: the
/// non-interacting floor, the dimension floor, and the quadratic reference,
/// all for an ideal one-bit erasure.
std::vector<SweepRow> reference_rows(const std::vector<std::int64_t>& n_list,
                                     double alpha);

/// Critical-bath protocol runs.
std::vector<SweepRow> critical_rows(const std::vector<std::int64_t>& n_list,
                                    double alpha, double beta0,
                                    CriticalRule rule,
                                    QConvention convention);

struct CriticalRun {
  CriticalParams params;
  MaxCoolResult result;
  double q_formula = 0.0;  // (1 - x)/2 with x = a - (1-a)/N
  double x = 0.0;
};

/// Picks a by root-finding so the protocol's occupation hits the target,
/// then runs the max-cooling permutation at beta0.
CriticalRun run_critical_protocol(std::int64_t n, double q_target_value,
                                  double beta0);

/// Heat-capacity sweep rows (main panel: C/n against gamma; inset: C(n) at
/// the design temperature).
struct HeatCapRow {
  std::string panel;
  std::string family;
  std::int64_t n = 0;
  double gamma = 0.0;
  double heat_capacity = 0.0;
};

inline constexpr const char* kHeatCapSchema = "landauer.heatcap.v1";
std::string heatcap_csv_header();
std::string heatcap_csv_row(const HeatCapRow& row);

std::vector<HeatCapRow> heat_capacity_rows(const std::vector<std::int64_t>& n_list,
                                           double alpha, double beta0,
                                           int gamma_grid, int threads);

/// Annealer progress CSV.
inline constexpr const char* kAnnealSchema = "landauer.anneal.v1";
std::string anneal_csv_header();
std::string anneal_csv_row(const AnnealProgressRow& row);

/// Bath description from a JSON parameter block, e.g.
///   {"family": "engineered", "n": 64, "alpha": 3.0, "beta0": 1.0}
///   {"family": "critical", "n": 10, "a": 0.5, "beta0": 1.0}
///   {"family": "noninteracting", "n": 32, "gap": 1.0}
///   {"family": "custom", "levels": [{"energy": e, "degeneracy_log2": g}...]}
struct BathSpec {
  SpectrumPtr spectrum;
  double beta0 = 1.0;
  std::string family;
};
BathSpec bath_from_json(const std::string& text);
BathSpec load_bath(const std::string& path);

/// Runs items [0, count) over a small worker pool; fn(i) must be
/// independent per index.
void parallel_indexed(std::size_t count, int threads,
                      const std::function<void(std::size_t)>& fn);

/// File helpers. write_text creates parent directories.
void write_text(const std::string& path, const std::string& content);

/// metadata, when nonempty, is recorded as a comment line below the schema
/// line (csv) or as a "metadata" object (json).
std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& metadata = {});
std::string rows_to_json(const std::vector<SweepRow>& rows,
                         const std::string& metadata = {});

}  // namespace landauer::tools
