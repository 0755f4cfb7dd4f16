#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace landauer {

inline constexpr double kLn2 = 0.6931471805599453094172321214581766;
inline constexpr double kPi = 3.1415926535897932384626433832795029;

/// Neumaier-compensated accumulator on extended-precision partials. Entropy
/// and heat at n ~ 4096 are tiny differences of O(1) sums; the closed-form
/// cross-checks demand agreement at 1e-12 relative to the heat, which is
/// ~1e-15 of the summed magnitudes, beyond plain double compensation.
class KahanSum {
 public:
  void add(double x) { add_extended(static_cast<long double>(x)); }
  void add(long double x) { add_extended(x); }

  double value() const { return static_cast<double>(sum_ + comp_); }

 private:
  void add_extended(long double x) {
    const long double t = sum_ + x;
    if (std::abs(static_cast<double>(sum_)) >= std::abs(static_cast<double>(x))) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

inline double log_sum_exp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // all -inf (or a stray +inf propagates)
  KahanSum s;
  for (double x : xs) s.add(std::exp(x - m));
  return m + std::log(s.value());
}

/// x * log(x) with the 0 log 0 := 0 convention.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// Binary Shannon entropy in nats.
inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

/// KL divergence between Bernoulli(p) and Bernoulli(q), nats.
inline double binary_kl(double p, double q) {
  if (p < 0.0 || p > 1.0 || q <= 0.0 || q >= 1.0) {
    if (p == 0.0 && q < 1.0) return -std::log1p(-q);
    if (p == 1.0 && q > 0.0) return -std::log(q);
    throw std::domain_error("binary_kl: arguments outside (0,1)");
  }
  return xlogx(p) - p * std::log(q) + xlogx(1.0 - p) -
         (1.0 - p) * std::log1p(-q);
}

struct BisectionResult {
  double x = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Finds x in [lo, hi] with f(x) ~ 0 for f monotone decreasing; stops when
/// |f| <= f_tol or the bracket collapses to floating-point resolution.
template <class F>
BisectionResult bisect_decreasing(F&& f, double lo, double hi, double f_tol,
                                  int max_iter = 400) {
  BisectionResult r;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo < -f_tol || fhi > f_tol) return r;  // not bracketed
  for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at ulp resolution
    const double fm = f(mid);
    if (std::abs(fm) <= f_tol) {
      r.x = mid;
      r.converged = true;
      return r;
    }
    if (fm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  r.x = 0.5 * (lo + hi);
  r.converged = std::abs(f(r.x)) <= f_tol;
  return r;
}

/// Golden-section minimization of a unimodal f on [lo, hi].
template <class F>
double golden_minimize(F&& f, double lo, double hi, int iterations = 120) {
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations && b - a > 0.0; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

/// Deterministic RNG with a platform-independent bit stream. Distributions in
/// <random> are implementation-defined, so uniforms and gaussians are built
/// here from raw mt19937_64 output; identical seeds give identical runs on
/// every platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {
    // splitmix64 warm-up decorrelates small seeds
    for (int i = 0; i < 4; ++i) next_raw();
  }

  std::uint64_t next_raw() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    return next_raw() % n;  // modulo bias irrelevant at these sizes
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace landauer
