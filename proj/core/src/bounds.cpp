#include "landauer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "landauer/numeric.hpp"
#include "landauer/thermo.hpp"

namespace landauer {

namespace {

/// phi(t) = h(t) + t ln(d-1), strictly increasing from 0 to ln d on
/// [0, (d-1)/d]. Entropy of the d-dimensional state (1-t, t/(d-1), ...).
double phi(double t, int d) {
  return binary_entropy(t) + t * std::log(static_cast<double>(d - 1));
}

double phi_inverse(double y, int d) {
  const double t_max = static_cast<double>(d - 1) / static_cast<double>(d);
  if (y <= 0.0) return 0.0;
  const double top = phi(t_max, d);
  if (y >= top) return t_max;
  double lo = 0.0, hi = t_max;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (phi(mid, d) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Binary divergence s(a, b) between (a, 1-a) and (b, 1-b) profiles.
double pair_divergence(double a, double b) {
  if (a == 0.0) return -std::log1p(-b);
  if (b <= 0.0 || b >= 1.0) return std::numeric_limits<double>::infinity();
  return binary_kl(a, b);
}

}  // namespace

double min_relative_entropy(double entropy_gap, int dim) {
  if (dim < 2) throw std::invalid_argument("min_relative_entropy: dim >= 2");
  const double log_d = std::log(static_cast<double>(dim));
  if (!std::isfinite(entropy_gap) || std::abs(entropy_gap) > log_d + 1e-12) {
    throw std::domain_error(
        "min_relative_entropy: entropy gap outside [-ln d, ln d]");
  }
  if (entropy_gap == 0.0) return 0.0;  // a = b
  const double x = std::clamp(entropy_gap, -log_d, log_d);
  const double t_max = static_cast<double>(dim - 1) / static_cast<double>(dim);

  // Feasible b range: phi(b) + x must stay in [0, ln d].
  const double b_lo = x >= 0.0 ? 0.0 : phi_inverse(-x, dim);
  const double b_hi = x >= 0.0 ? phi_inverse(log_d - x, dim) : t_max;
  if (!(b_hi > b_lo)) {
    throw std::domain_error("min_relative_entropy: infeasible constraint");
  }

  const auto objective = [&](double b) {
    const double a = phi_inverse(phi(b, dim) + x, dim);
    return pair_divergence(a, b);
  };

  const int grid = 1024;
  double best_b = b_lo;
  double best_v = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= grid; ++k) {
    const double b = b_lo + (b_hi - b_lo) * static_cast<double>(k) / grid;
    const double v = objective(b);
    if (v < best_v) {
      best_v = v;
      best_b = b;
    }
  }
  const double step = (b_hi - b_lo) / grid;
  const double refine_lo = std::max(b_lo, best_b - step);
  const double refine_hi = std::min(b_hi, best_b + step);
  const double b_star = golden_minimize(objective, refine_lo, refine_hi);
  return std::max(0.0, std::min(best_v, objective(b_star)));
}

double noninteracting_lower_bound(double dS_system, int local_dim,
                                  std::int64_t n) {
  if (local_dim < 2) throw std::invalid_argument("local_dim >= 2");
  if (n < 1) throw std::invalid_argument("n >= 1");
  const double ratio = dS_system / std::log(static_cast<double>(local_dim));
  return ratio * ratio / (3.0 * static_cast<double>(n));
}

double rw_lower_bound(double dS_system, double env_dim_log) {
  if (!(env_dim_log >= kLn2)) {
    throw std::invalid_argument("rw_lower_bound: environment dimension >= 2");
  }
  // ln(d_B - 1) = ln d_B + ln(1 - 1/d_B), exact for log-represented sizes.
  const double log_dm1 = env_dim_log + std::log1p(-std::exp(-env_dim_log));
  return 2.0 * dS_system * dS_system / (log_dm1 * log_dm1 + 4.0);
}

double heat_capacity_lower_bound(double beta_q, SpectrumPtr spectrum,
                                 double beta, double beta_star,
                                 int grid_points) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (beta_q == 0.0) return 0.0;
  grid_points = std::max(grid_points, 512);

  double lo = std::min(beta, beta_star);
  double hi = std::max(beta, beta_star);
  // An infinite-temperature beta* is reported as 0; clamp to a positive floor.
  if (!(lo > 0.0)) lo = 1e-14 * hi;

  const auto cap = [&](double g) { return heat_capacity(spectrum, g); };

  double max_c;
  if (lo == hi) {
    max_c = cap(lo);
  } else {
    double best_g = lo;
    max_c = -1.0;
    for (int k = 0; k <= grid_points; ++k) {
      const double g = lo + (hi - lo) * static_cast<double>(k) / grid_points;
      const double c = cap(g);
      if (c > max_c) {
        max_c = c;
        best_g = g;
      }
    }
    const double step = (hi - lo) / grid_points;
    const double g_star =
        golden_minimize([&](double g) { return -cap(g); },
                        std::max(lo, best_g - step), std::min(hi, best_g + step));
    max_c = std::max(max_c, cap(g_star));
  }
  if (max_c <= 0.0) return std::numeric_limits<double>::infinity();
  return beta_q * beta_q / (2.0 * max_c);
}

double cos_log_antiderivative(double x, double a, double b) {
  if (!(b > 1.0)) {
    throw std::domain_error("cos_log_antiderivative: requires b > 1");
  }
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
    throw std::invalid_argument("cos_log_antiderivative: bad arguments");
  }
  // Antiderivative in u = a x of cos(u) ln(b - cos(u)). For b > 1 the
  // textbook form is complex; its real continuation replaces
  // sqrt(1-b^2) atanh(...) by sqrt(b^2-1) atan(C tan(u/2)) with
  // C = (1+b)/sqrt(b^2-1). The branch is unwound exactly via the half-angle
  // identity atan(C tan(u/2)) = u/2 + atan(k sin u / (1 - k cos u)) with
  // k = (C-1)/(C+1): the second argument's denominator stays positive, so
  // the winding lives entirely in the smooth u/2 term.
  const double u = a * x;
  const double root = std::sqrt((b - 1.0) * (b + 1.0));
  const double c = (1.0 + b) / root;
  const double kappa = (c - 1.0) / (c + 1.0);
  const double unwound =
      0.5 * u + std::atan(kappa * std::sin(u) / (1.0 - kappa * std::cos(u)));
  const double g = 2.0 * root * unwound +
                   std::sin(u) * (std::log(b - std::cos(u)) - 1.0) - b * u;
  return g / a;
}

LevelShiftHeatBreakdown level_shift_heat_breakdown(const EngineeredParams& p) {
  if (p.n < 2) throw std::invalid_argument("heat breakdown: n >= 2");
  if (!(p.alpha > 0.0)) throw std::invalid_argument("heat breakdown: alpha > 0");
  const std::int64_t n = p.n;
  const std::vector<double> w = engineered_level_weights(n, p.alpha);

  KahanSum z_tail;
  for (std::int64_t i = 1; i <= n; ++i) z_tail.add(w[static_cast<std::size_t>(i)]);
  const double z = w[0] + 0.5 * z_tail.value();

  const double sin_pi_n = std::sin(kPi / static_cast<double>(n));
  const double w_top = w[static_cast<std::size_t>(n)];
  const double ln_w0 = std::log(w[0]);

  KahanSum a_sum, b_sum, c_sum;
  for (std::int64_t i = 1; i <= n; ++i) {
    // w_{i-1} - w_i = -2 sin(pi (2i-1)/n) sin(pi/n); the product form keeps
    // the O(1/n) difference fully accurate.
    const double diff =
        -2.0 * std::sin(kPi * static_cast<double>(2 * i - 1) / static_cast<double>(n)) *
        sin_pi_n;
    const double tail_weight = std::exp2(static_cast<double>(i - n - 1)) * w_top;
    const double ln_wi = std::log(w[static_cast<std::size_t>(i)]);
    a_sum.add((diff + tail_weight) * static_cast<double>(i) * kLn2);
    b_sum.add(diff * ln_wi);
    c_sum.add(tail_weight * ln_wi);
  }

  LevelShiftHeatBreakdown out;
  const double norm = 0.5 / z;
  out.multiplicity_term = norm * a_sum.value();
  out.shape_term = norm * b_sum.value();
  out.top_term = norm * c_sum.value();
  out.ground_term =
      norm * (std::exp2(-static_cast<double>(n)) * w_top - w[0]) * ln_w0;
  out.beta_q =
      out.multiplicity_term - out.shape_term - out.top_term - out.ground_term;
  out.partition_function = z;
  return out;
}

double sigma_quadratic_bound(std::int64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("sigma_quadratic_bound: n >= 1");
  if (!(alpha > 2.0)) {
    throw std::domain_error(
        "sigma_quadratic_bound: the quadratic rate requires alpha > 2");
  }
  const double nd = static_cast<double>(n);
  return 2.0 * kPi * kPi / (nd * nd);
}

BoundSet evaluate_bounds(const BoundInputs& in, SpectrumPtr spectrum) {
  BoundSet out;
  out.lb_nonint = noninteracting_lower_bound(in.dS_system, in.local_dim, in.n);
  out.lb_rw = rw_lower_bound(in.dS_system, in.env_dim_log);
  out.lb_heatcap = heat_capacity_lower_bound(in.beta_q, std::move(spectrum),
                                             in.beta, in.beta_star);
  return out;
}

}  // namespace landauer
