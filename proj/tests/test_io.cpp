#include <doctest.h>

#include <cstdlib>
#include <string>

#include "landauer/io.hpp"
#include "landauer/spectra.hpp"
#include "test_util.hpp"

using namespace landauer;
using namespace landauer::testing;

TEST_CASE("spectrum json round-trips exactly") {
  auto eng = engineered_interacting({7, 2.7, 1.2});
  const std::string text = spectrum_to_json(*eng.spectrum, 1.2);
  const SpectrumFile loaded = spectrum_from_json(text);

  CHECK(loaded.beta == 1.2);
  REQUIRE(loaded.spectrum->size() == eng.spectrum->size());
  for (std::size_t i = 0; i < eng.spectrum->size(); ++i) {
    // Bit-exact doubles after one save/load cycle.
    CHECK(loaded.spectrum->level(i).energy == eng.spectrum->level(i).energy);
    CHECK(loaded.spectrum->level(i).log2_degeneracy ==
          eng.spectrum->level(i).log2_degeneracy);
    CHECK(loaded.spectrum->level(i).count == eng.spectrum->level(i).count);
  }
  // Serializing the loaded spectrum reproduces the same text.
  CHECK(spectrum_to_json(*loaded.spectrum, loaded.beta) == text);
}

TEST_CASE("moderate-size critical counts survive the log2 encoding") {
  auto sp = critical_degenerate({40, 0.5, 1.0});
  const auto loaded = spectrum_from_json(spectrum_to_json(*sp, 1.0));
  CHECK(loaded.spectrum->level(1).count == sp->level(1).count);  // 2^40 - 1
}

TEST_CASE("huge counts keep the file-level doubles stable") {
  auto sp = critical_degenerate({100, 0.5, 1.0});
  const std::string text = spectrum_to_json(*sp, 1.0);
  const auto loaded = spectrum_from_json(text);
  // 2^100 - 1 is not recoverable from a double log2; the file content is.
  CHECK(spectrum_to_json(*loaded.spectrum, 1.0) == text);
  CHECK(loaded.spectrum->level(1).log2_degeneracy ==
        sp->level(1).log2_degeneracy);
}

TEST_CASE("outcome json round-trip") {
  ProcessOutcome o;
  o.heat_Q = 0.25;
  o.dS_system = -0.5;
  o.dS_bath = 0.5;
  o.mutual_info = 0.125;
  o.rel_ent_bath = 0.0625;
  o.sigma = -0.25 + 0.0078125;
  o.q_excited = 1e-3;
  o.identity_residual = 1e-14;
  const ProcessOutcome back = outcome_from_json(outcome_to_json(o));
  CHECK(back.heat_Q == o.heat_Q);
  CHECK(back.sigma == o.sigma);
  CHECK(back.identity_residual == o.identity_residual);
}

TEST_CASE("sweep csv schema and numeric round-trip") {
  const std::string header = sweep_csv_header();
  CHECK(header.find("schema=landauer.sweep.v1") != std::string::npos);
  CHECK(header.find("n,alpha,beta,policy,q,betaQ,dS_system,mutual_info,"
                    "rel_ent_bath,sigma,residual,lb_nonint,lb_rw,lb_heatcap,"
                    "ub_quadratic") != std::string::npos);

  SweepRow row;
  row.curve = "level_shift";
  row.n = 128;
  row.alpha = 3.0;
  row.beta = 1.0;
  row.q = 3.725290298461914e-09;
  row.beta_q = 0.6931471803;
  row.dS_system = -0.6931471;
  row.mutual_info = 1e-4;
  row.rel_ent_bath = 2e-4;
  row.sigma = 0.0012437219;
  row.residual = 3e-15;
  row.lb_rw = 1.2e-4;
  const std::string line = sweep_csv_row(row);

  // 15 columns, shortest-round-trip doubles.
  std::size_t commas = 0;
  for (char c : line) commas += c == ',';
  CHECK(commas == 14);
  CHECK(line.find("level_shift") != std::string::npos);
  const std::string q_text = format_double(row.q);
  CHECK(std::strtod(q_text.c_str(), nullptr) == row.q);
  // Empty cell for the missing bound columns.
  CHECK(line.find(",,") != std::string::npos);
}
