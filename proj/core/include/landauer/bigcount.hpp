#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace landauer {

/// Exact microstate count. Degeneracies reach 2^4095 in the engineered bath,
/// and chunk splitting must be exact integer arithmetic, so counts are
/// arbitrary-precision throughout.
using BigCount = mpz_class;

inline double count_log2(const BigCount& c) {
  if (c <= 0) throw std::domain_error("count_log2: count must be positive");
  signed long exp2 = 0;
  const double m = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return std::log2(m) + static_cast<double>(exp2);
}

inline double count_ln(const BigCount& c) {
  if (c <= 0) throw std::domain_error("count_ln: count must be positive");
  signed long exp2 = 0;
  const double m = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return std::log(m) + static_cast<double>(exp2) * 0.6931471805599453094;
}

/// Extended-precision natural log of a count. Counts ~2^4096 make this
/// ~2840; probability logs of the same magnitude must cancel against it to
/// double accuracy, which needs the extra mantissa bits.
inline long double count_ln_ext(const BigCount& c) {
  if (c <= 0) throw std::domain_error("count_ln_ext: count must be positive");
  signed long exp2 = 0;
  const double m = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return std::log(static_cast<long double>(m)) +
         static_cast<long double>(exp2) * 0.693147180559945309417232121458L;
}

/// Nearest positive integer with the given base-2 logarithm. Exact for counts
/// below 2^62 and for exact powers of two; otherwise the closest integer
/// representable with 53 significant bits (all a double-valued log can carry).
inline BigCount count_from_log2(double log2_value) {
  if (!std::isfinite(log2_value) || log2_value < -0.5) {
    throw std::domain_error("count_from_log2: invalid log2 degeneracy " +
                            std::to_string(log2_value));
  }
  if (log2_value <= 62.0) {
    const double v = std::round(std::exp2(log2_value));
    if (v < 1.0) throw std::domain_error("count_from_log2: count below 1");
    return BigCount(static_cast<unsigned long>(v));
  }
  const double r = std::round(log2_value);
  if (r == log2_value) {
    BigCount c = 1;
    c <<= static_cast<unsigned long>(r);
    return c;
  }
  const double e = std::floor(log2_value) - 52.0;
  const double m = std::round(std::exp2(log2_value - e));
  BigCount c(m);
  c <<= static_cast<unsigned long>(e);
  return c;
}

inline BigCount pow2_count(std::uint64_t k) {
  BigCount c = 1;
  c <<= k;
  return c;
}

}  // namespace landauer
