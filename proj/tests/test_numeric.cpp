#include <doctest.h>

#include <cmath>
#include <vector>

#include "landauer/bigcount.hpp"
#include "landauer/numeric.hpp"

using namespace landauer;

TEST_CASE("compensated summation recovers tiny residues") {
  // 1 + eps-sized terms that a naive sum loses entirely.
  KahanSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-18);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-15).epsilon(1e-10));
}

TEST_CASE("log_sum_exp handles extreme ranges") {
  std::vector<double> xs = {-3000.0, -3000.0};
  CHECK(log_sum_exp(xs) == doctest::Approx(-3000.0 + std::log(2.0)));
  std::vector<double> one = {42.0};
  CHECK(log_sum_exp(one) == doctest::Approx(42.0));
}

TEST_CASE("binary entropy and KL basics") {
  CHECK(binary_entropy(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_kl(0.5, 0.5) == 0.0);
  CHECK(binary_kl(0.5, 0.25) ==
        doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0))
            .epsilon(1e-14));
}

TEST_CASE("big counts round-trip through log2") {
  BigCount c = 1;
  c <<= 4095;
  CHECK(count_log2(c) == 4095.0);
  CHECK(count_from_log2(4095.0) == c);

  CHECK(count_from_log2(std::log2(3.0)) == 3);
  CHECK(count_from_log2(0.0) == 1);

  BigCount huge = 1;
  huge <<= 200;
  huge -= 1;  // log2 rounds to exactly 200 at double precision
  CHECK(count_log2(huge) == 200.0);
}

TEST_CASE("count_ln matches lgamma-scale values") {
  BigCount c = 1;
  c <<= 100;
  CHECK(count_ln(c) == doctest::Approx(100.0 * kLn2).epsilon(1e-15));
}

TEST_CASE("deterministic rng is reproducible and in range") {
  DeterministicRng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  DeterministicRng c(7);
  DeterministicRng d(8);
  CHECK(c.next_raw() != d.next_raw());
}
