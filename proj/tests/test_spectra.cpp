#include <doctest.h>

#include <cmath>

#include "landauer/numeric.hpp"
#include "landauer/spectra.hpp"
#include "landauer/thermo.hpp"
#include "test_util.hpp"

using namespace landauer;
using namespace landauer::testing;

TEST_CASE("non-interacting qubits: levels and degeneracies") {
  auto one = non_interacting_qubits(1, 0.7);
  REQUIRE(one->size() == 2);
  CHECK(one->level(0).energy == 0.0);
  CHECK(one->level(1).energy == 0.7);
  CHECK(one->level(0).count == 1);
  CHECK(one->level(1).count == 1);

  auto three = non_interacting_qubits(3, 1.0);
  REQUIRE(three->size() == 4);
  CHECK(three->level(0).count == 1);
  CHECK(three->level(1).count == 3);
  CHECK(three->level(2).count == 3);
  CHECK(three->level(3).count == 1);
  CHECK(three->dimension() == 8);

  CHECK_THROWS(non_interacting_qubits(0, 1.0));
  CHECK_THROWS(non_interacting_qubits(4, -1.0));
  CHECK_THROWS(non_interacting_qubits(200, 1.0, /*n_cap=*/100));
}

TEST_CASE("non-interacting partition function factorizes") {
  // Z = (1 + e^-beta gap)^n; the level-sum route must agree.
  auto sp = non_interacting_qubits(5, 1.0);
  const double z = std::exp(log_partition_function(*sp, 1.0));
  const double closed = std::pow(1.0 + std::exp(-1.0), 5.0);
  CHECK(z == doctest::Approx(closed).epsilon(1e-13));
  CHECK(closed == doctest::Approx(4.788936863344735).epsilon(1e-9));
}

TEST_CASE("engineered n=4 alpha=3: weights, energies, dimension") {
  auto eng = engineered_interacting({4, 3.0, 1.0});
  REQUIRE(eng.level_weights.size() == 5);
  CHECK(eng.level_weights[0] == doctest::Approx(0.015625).epsilon(1e-15));
  CHECK(eng.level_weights[1] == doctest::Approx(1.015625).epsilon(1e-14));
  CHECK(eng.level_weights[2] == doctest::Approx(2.015625).epsilon(1e-14));
  CHECK(eng.level_weights[3] == doctest::Approx(1.015625).epsilon(1e-14));
  CHECK(eng.level_weights[4] == doctest::Approx(0.015625).epsilon(1e-15));

  // Design energies: beta0 e_0 = 3 ln 4, beta0 e_1 = ln 2 - ln 1.015625.
  const double e0 = eng.spectrum->level(eng.level_of_design[0]).energy;
  const double e1 = eng.spectrum->level(eng.level_of_design[1]).energy;
  CHECK(e0 == doctest::Approx(4.1588830833596715).epsilon(1e-14));
  CHECK(e1 == doctest::Approx(0.6776429940239801).epsilon(1e-13));

  CHECK(eng.spectrum->dimension() == 16);
  CHECK(eng.quadratic_regime);

  // The design order is not the energy order.
  CHECK(eng.level_of_design[0] != 0);
}

TEST_CASE("engineered edge weights equal n^-alpha for any n, alpha") {
  for (std::int64_t n : {2, 7, 64, 1001}) {
    for (double alpha : {0.5, 2.0, 3.0}) {
      const auto w = engineered_level_weights(n, alpha);
      const double expect = std::pow(static_cast<double>(n), -alpha);
      CHECK(w.front() == doctest::Approx(expect).epsilon(1e-12));
      CHECK(w.back() == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("engineered partition function matches the closed form") {
  for (std::int64_t n : {4, 16, 128, 1024}) {
    const double alpha = 3.0;
    auto eng = engineered_interacting({n, alpha, 1.0});
    const double z = std::exp(log_partition_function(*eng.spectrum, 1.0));
    const double nd = static_cast<double>(n);
    const double closed =
        0.5 * (nd + std::pow(nd, 1.0 - alpha) + 2.0 * std::pow(nd, -alpha));
    CHECK(close_rel(z, closed, 1e-10));
  }
}

TEST_CASE("engineered gibbs weights dominate the top weight") {
  for (std::int64_t n : {4, 10, 64, 512}) {
    auto eng = engineered_interacting({n, 3.0, 1.0});
    auto g = gibbs(eng.spectrum, 1.0);
    const double ln_g_top = g.chunks()[eng.level_of_design.back()].log_prob;
    for (const auto& ch : g.chunks()) CHECK(ch.log_prob >= ln_g_top);
  }
}

TEST_CASE("engineered dimension is always 2^n") {
  for (std::int64_t n : {2, 3, 17, 200, 4096}) {
    auto eng = engineered_interacting({n, 2.5, 1.0});
    CHECK(eng.spectrum->dimension() ==
          pow2_count(static_cast<std::uint64_t>(n)));
    CHECK(eng.spectrum->log2_dimension() == static_cast<double>(n));
  }
}

TEST_CASE("engineered rejects bad parameters but flags alpha <= 2") {
  CHECK_THROWS(engineered_interacting({1, 3.0, 1.0}));
  CHECK_THROWS(engineered_interacting({4, -1.0, 1.0}));
  CHECK_THROWS(engineered_interacting({4, 3.0, 0.0}));
  CHECK(!engineered_interacting({8, 1.5, 1.0}).quadratic_regime);
}

TEST_CASE("critical spectrum: gap formula and ground weight") {
  auto sp = critical_degenerate({3, 0.5, 1.0});
  REQUIRE(sp->size() == 2);
  CHECK(sp->level(0).energy == 0.0);
  CHECK(sp->level(0).count == 1);
  CHECK(sp->level(1).count == 7);
  // log(1/a - 1) = 0, so the gap is ln 7.
  CHECK(sp->level(1).energy == doctest::Approx(std::log(7.0)).epsilon(1e-14));

  auto g = gibbs(sp, 1.0);
  CHECK(std::exp(g.chunks()[0].log_prob) == doctest::Approx(0.5).epsilon(1e-13));

  for (double a : {0.12, 0.5, 0.93}) {
    auto s = critical_degenerate({6, a, 2.0});
    CHECK(std::exp(gibbs(s, 2.0).chunks()[0].log_prob) ==
          doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("critical rejects out-of-range ground weights") {
  CHECK_THROWS(critical_degenerate({3, 0.125, 1.0}));   // a = 2^-n exactly
  CHECK_THROWS(critical_degenerate({3, 0.0625, 1.0}));  // below
  CHECK_THROWS(critical_degenerate({3, 1.0, 1.0}));
  CHECK_THROWS(critical_degenerate({3, 0.5, -1.0}));
}

TEST_CASE("critical family: best-over-a heat capacity is ~ n^2 ln^2(2)/4") {
  const std::int64_t n = 10;
  const double target = 0.25 * 100.0 * kLn2 * kLn2;
  double best = 0.0;
  const double a_min = std::exp2(-static_cast<double>(n));
  for (int k = 1; k < 400; ++k) {
    const double a = a_min + (1.0 - 2.0 * a_min) * k / 400.0;
    auto sp = critical_degenerate({n, a, 1.0});
    best = std::max(best, heat_capacity(sp, 1.0));
  }
  CHECK(std::abs(best - target) <= 0.15 * target);
}

TEST_CASE("product spectrum merges subset sums") {
  const double gaps[] = {1.0, 1.0, 2.0};
  auto sp = product_spectrum(gaps);
  CHECK(sp->dimension() == 8);
  // Subset sums: 0,1,1,2,2,3,3,4 -> levels 0,1,2,3,4 with counts 1,2,2,2,1.
  REQUIRE(sp->size() == 5);
  CHECK(sp->level(1).count == 2);
  CHECK(sp->level(4).count == 1);
}

TEST_CASE("custom spectra sort and merge equal energies") {
  auto sp = custom_spectrum({{1.5, BigCount(2)}, {0.0, BigCount(1)},
                             {1.5, BigCount(3)}});
  REQUIRE(sp->size() == 2);
  CHECK(sp->level(0).energy == 0.0);
  CHECK(sp->level(1).count == 5);

  CHECK_THROWS(make_spectrum({make_level(0.0, BigCount(1)),
                              make_level(0.0, BigCount(1))}));
}
