#include <doctest.h>

#include <chrono>
#include <cmath>

#include "experiments.hpp"
#include "landauer/numeric.hpp"
#include "landauer/thermo.hpp"
#include "test_util.hpp"

using namespace landauer;
using namespace landauer::testing;
using namespace landauer::tools;

TEST_CASE("q target conventions") {
  CHECK(q_target(4, 3.0, QConvention::caption) ==
        doctest::Approx(0.015625).epsilon(1e-15));
  CHECK(q_target(4, 3.0, QConvention::half) ==
        doctest::Approx(0.0078125).epsilon(1e-15));
  // Exact: n^-alpha / (2Z), the engine's actual occupation.
  CHECK(q_target(4, 3.0, QConvention::exact) ==
        doctest::Approx(0.015625 / 4.09375).epsilon(1e-12));
  CHECK_THROWS(parse_q_convention("bogus"));
  CHECK(parse_q_convention("half") == QConvention::half);
}

TEST_CASE("critical protocol root-find matches the closed form") {
  for (std::int64_t n : {6, 24, 120}) {
    const double nd = static_cast<double>(n);
    for (double target : {0.3, 0.5 * (1.0 - 1.0 / (nd * nd)), 0.01}) {
      const CriticalRun run = run_critical_protocol(n, target, 1.0);
      // Closed form: a = x + (1-x) 2^-n with x = 1 - 2q.
      const double x = 1.0 - 2.0 * target;
      const double a_closed = x + (1.0 - x) * std::exp2(-nd);
      CHECK(close_rel(run.params.a, a_closed, 1e-10));
      CHECK(close(run.result.outcome.q_excited, target, 1e-10));
      CHECK(close(run.result.outcome.q_excited, run.q_formula, 1e-12));
    }
  }
}

TEST_CASE("erasure rows carry bounds and satisfy the schema invariants") {
  SweepOptions so;
  so.n_list = {8, 16};
  so.threads = 2;
  const auto rows = erasure_sweep_rows(so);
  REQUIRE(rows.size() == 4);  // both policies per n
  for (const auto& row : rows) {
    CHECK(row.residual <= 1e-10);
    CHECK(row.lb_nonint.has_value());
    CHECK(row.lb_rw.has_value());
    CHECK(row.lb_heatcap.has_value());
    CHECK(row.ub_quadratic.has_value());
    CHECK(row.sigma >= 0.0);
  }
}

TEST_CASE("reference rows evaluate the dashed curves") {
  const auto rows = reference_rows({30}, 3.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].curve == "ref_nonint");
  CHECK(rows[0].sigma == doctest::Approx(1.0 / 90.0).epsilon(1e-13));
  CHECK(rows[1].curve == "ref_rw");
  CHECK(rows[1].sigma ==
        doctest::Approx(rw_lower_bound(-kLn2, 30.0 * kLn2)).epsilon(1e-15));
  CHECK(rows[2].curve == "ref_quadratic");
  CHECK(rows[2].sigma ==
        doctest::Approx(2.0 * kPi * kPi / 900.0).epsilon(1e-13));
}

TEST_CASE("heat-capacity sweep includes the grid endpoints exactly") {
  const auto rows = heat_capacity_rows({8}, 3.0, 1.0, 10, 1);
  double lo = 1e300, hi = 0.0;
  for (const auto& row : rows) {
    if (row.panel == "main") {
      lo = std::min(lo, row.gamma);
      hi = std::max(hi, row.gamma);
    }
  }
  CHECK(lo == 0.2);
  CHECK(hi == 2.0);
}

TEST_CASE("bath parameter blocks build the right spectra") {
  const auto eng = bath_from_json(
      R"({"family":"engineered","n":6,"alpha":3.0,"beta0":1.0})");
  CHECK(eng.spectrum->dimension() == 64);

  const auto crit =
      bath_from_json(R"({"family":"critical","n":3,"a":0.5,"beta0":1.0})");
  CHECK(crit.spectrum->level(1).energy ==
        doctest::Approx(std::log(7.0)).epsilon(1e-14));

  const auto prod =
      bath_from_json(R"({"family":"noninteracting","n":4,"gap":0.5})");
  CHECK(prod.spectrum->size() == 5);

  const auto custom = bath_from_json(
      R"({"family":"custom","levels":[{"energy":0.0,"degeneracy_log2":0.0},
           {"energy":1.0,"degeneracy_log2":2.0}]})");
  CHECK(custom.spectrum->dimension() == 5);

  CHECK_THROWS(bath_from_json(R"({"family":"nope"})"));
}

TEST_CASE("figure-scale sweep stays inside the runtime budget") {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions so;
  for (std::int64_t n = 4; n <= 1024; n *= 2) so.n_list.push_back(n);
  so.threads = 4;
  const auto engineered = erasure_sweep_rows(so);
  const auto chains = collisional_rows(
      so, {ScheduleFamily::linear, ScheduleFamily::geodesic,
           ScheduleFamily::geometric});
  const auto refs = reference_rows(so.n_list, so.alpha);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  CHECK(engineered.size() + chains.size() + refs.size() == 9 * 2 + 9 * 3 + 9 * 3);
  CHECK(seconds < 60.0);
}

TEST_CASE("collisional rows use the family name as the curve") {
  SweepOptions so;
  so.n_list = {8};
  const auto rows = collisional_rows(so, {ScheduleFamily::geodesic});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].curve == "geodesic");
  CHECK(rows[0].lb_nonint.has_value());
  CHECK(rows[0].sigma >= *rows[0].lb_nonint - 1e-13);
}
