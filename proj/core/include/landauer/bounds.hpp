#pragma once

#include <cstdint>

#include "landauer/spectra.hpp"
#include "landauer/spectrum.hpp"

namespace landauer {

/// Minimal relative entropy D(rho||sigma) over d-dimensional states with a
/// prescribed entropy gap S(rho) - S(sigma) = x (nats, |x| <= ln d).
/// Computed by an outer 1-D scan plus golden-section refinement over the
/// sigma-side parameter, with a bracketed monotone root-find for the
/// rho-side parameter at each step. Satisfies M(x,d) >= x^2 / (3 ln^2 d).
double min_relative_entropy(double entropy_gap, int dim);

/// Entropy-production floor for any process on n non-interacting units of
/// local dimension d: (dS / ln d)^2 / (3 n).
double noninteracting_lower_bound(double dS_system, int local_dim,
                                  std::int64_t n);

/// Reeb-Wolf finite-size floor 2 dS^2 / (ln^2(d_B - 1) + 4) for entropy
/// decreasing processes; env_dim_log is ln d_B (log-represented dimensions
/// stay exact via log1p).
double rw_lower_bound(double dS_system, double env_dim_log);

/// Heat-capacity floor (beta Q)^2 / (2 max_{gamma in [beta, beta*]} C).
/// Maximizes C on a dense grid (>= grid_points) with local refinement.
/// Returns +infinity when the capacity vanishes identically on the interval
/// (unreachable with Q != 0).
double heat_capacity_lower_bound(double beta_q, SpectrumPtr spectrum,
                                 double beta, double beta_star,
                                 int grid_points = 512);

/// Continuous antiderivative of cos(a x) ln(b - cos(a x)) for b > 1.
/// The closed form involves atan of tan(a x / 2); the branch is chosen by
/// tracking the winding integer so the result is continuous in x.
double cos_log_antiderivative(double x, double a, double b);

/// Exact finite sums behind the closed-form heat of the level-shift
/// permutation on the engineered bath: beta_q = multiplicity_term -
/// shape_term - top_term - ground_term.
struct LevelShiftHeatBreakdown {
  double multiplicity_term = 0.0;  // log-multiplicity flow (<= ln 2)
  double shape_term = 0.0;         // level-weight shape, the -2 pi^2/n^2 part
  double top_term = 0.0;           // top-level weight spread
  double ground_term = 0.0;        // ground-level correction
  double beta_q = 0.0;
  double partition_function = 0.0;
};
LevelShiftHeatBreakdown level_shift_heat_breakdown(const EngineeredParams& p);

/// Leading-order reference 2 pi^2 / n^2 for the engineered protocol; only
/// derived for alpha > 2.
double sigma_quadratic_bound(std::int64_t n, double alpha);

/// Everything one protocol run feeds into the bound evaluations.
struct BoundInputs {
  double dS_system = 0.0;
  std::int64_t n = 1;        // environment units
  int local_dim = 2;         // d of each unit
  double env_dim_log = 0.6931471805599453;  // ln d_B
  double beta = 1.0;
  double beta_star = 1.0;
  double beta_q = 0.0;
};

struct BoundSet {
  double lb_nonint = 0.0;
  double lb_rw = 0.0;
  double lb_heatcap = 0.0;
};

/// Evaluates the three lower bounds for one run (the heat-capacity bound
/// needs the bath spectrum for the capacity sweep).
BoundSet evaluate_bounds(const BoundInputs& in, SpectrumPtr spectrum);

}  // namespace landauer
