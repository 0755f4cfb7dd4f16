#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "landauer/numeric.hpp"
#include "landauer/thermo.hpp"
#include "svg.hpp"

namespace {

using namespace landauer;
using namespace landauer::tools;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::vector<std::int64_t> n;
  std::int64_t n_max = 0;
  double alpha = 3.0;
  double beta = 1.0;
  std::string policy = "both";
  std::string family = "all";
  std::string q_convention = "exact";
  std::string critical_rule = "increment";
  std::string out = "out";
  std::string format = "csv";
  std::uint64_t seed = 1;
  int threads = 1;
  int gamma_grid = 60;
  std::string bath_file;

  // optimizer controls
  std::int64_t steps = 100000;
  double initial_temperature = 1.0;
  double cooling_rate = 0.9999;
  double move_scale = 0.4;
  double target_q = -1.0;  // negative: derive from the q convention
  double q_penalty_weight = 1e6;
  bool anneal_degeneracies = false;
};

std::vector<std::int64_t> make_n_list(const Options& opts) {
  std::vector<std::int64_t> list;
  if (opts.n_max > 0) {
    std::int64_t n = opts.n.empty() ? 4 : opts.n.front();
    for (; n <= opts.n_max; n *= 2) list.push_back(n);
  } else if (!opts.n.empty()) {
    list = opts.n;
  } else {
    for (std::int64_t n = 4; n <= 1024; n *= 2) list.push_back(n);
  }
  if (list.empty()) throw CLI::ValidationError("--n", "empty size list");
  for (std::int64_t n : list) {
    if (n < 2) throw CLI::ValidationError("--n", "sizes must be >= 2");
  }
  return list;
}

std::string run_metadata(const Options& opts) {
  return "q_convention=" + opts.q_convention + " alpha=" +
         format_double(opts.alpha) + " beta=" + format_double(opts.beta) +
         " critical_rule=" + opts.critical_rule;
}

/// Writes rows in the requested format; svg output keeps the csv alongside
/// (the plot is a view of the same data).
void write_sweep_outputs(const std::vector<SweepRow>& rows,
                         const Options& opts, const std::string& name,
                         const std::string& title) {
  const std::filesystem::path dir(opts.out);
  if (opts.format == "json") {
    write_text((dir / (name + ".json")).string(),
               rows_to_json(rows, run_metadata(opts)));
    return;
  }
  write_text((dir / (name + ".csv")).string(),
             rows_to_csv(rows, run_metadata(opts)));
  if (opts.format == "svg") {
    static const char* palette[] = {"#c62828", "#1565c0", "#2e7d32", "#6a1b9a",
                                    "#ef6c00", "#00838f", "#555555", "#9e9d24"};
    std::map<std::string, SvgSeries> by_curve;
    int color = 0;
    for (const SweepRow& row : rows) {
      auto [it, fresh] = by_curve.try_emplace(row.curve);
      if (fresh) {
        it->second.name = row.curve;
        it->second.color = palette[color++ % 8];
        it->second.dashed = row.curve.rfind("ref_", 0) == 0 ||
                            row.curve.rfind("guide_", 0) == 0;
      }
      it->second.points.emplace_back(static_cast<double>(row.n), row.sigma);
    }
    std::vector<SvgSeries> series;
    for (auto& [key, s] : by_curve) series.push_back(std::move(s));
    write_text((dir / (name + ".svg")).string(),
               render_loglog_svg(title, "bath qubits n", "entropy production",
                                 series));
  }
}

std::vector<ScheduleFamily> families_from(const std::string& name) {
  if (name == "all") {
    return {ScheduleFamily::linear, ScheduleFamily::geodesic,
            ScheduleFamily::geometric};
  }
  if (name == "linear") return {ScheduleFamily::linear};
  if (name == "geodesic") return {ScheduleFamily::geodesic};
  if (name == "geometric") return {ScheduleFamily::geometric};
  throw CLI::ValidationError("--family", "unknown family " + name);
}

void validate_common(const Options& opts) {
  if (opts.format != "csv" && opts.format != "json" && opts.format != "svg") {
    throw CLI::ValidationError("--format", "unknown format " + opts.format);
  }
  try {
    parse_q_convention(opts.q_convention);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--q-convention", opts.q_convention);
  }
  if (opts.critical_rule != "matched" && opts.critical_rule != "increment") {
    throw CLI::ValidationError("--critical-rule", opts.critical_rule);
  }
}

SweepOptions sweep_options(const Options& opts) {
  SweepOptions so;
  so.n_list = make_n_list(opts);
  so.alpha = opts.alpha;
  so.beta = opts.beta;
  so.q_convention = parse_q_convention(opts.q_convention);
  so.threads = opts.threads;
  so.sorted_policy = opts.policy == "sorted" || opts.policy == "both";
  so.level_shift_policy = opts.policy == "level_shift" || opts.policy == "both";
  if (!so.sorted_policy && !so.level_shift_policy) {
    throw CLI::ValidationError("--policy", "unknown policy " + opts.policy);
  }
  return so;
}

int cmd_erasure_sweep(const Options& opts) {
  write_sweep_outputs(erasure_sweep_rows(sweep_options(opts)), opts,
                      "erasure_sweep", "Engineered-bath erasure");
  return kExitOk;
}

int cmd_collisional(const Options& opts) {
  write_sweep_outputs(
      collisional_rows(sweep_options(opts), families_from(opts.family)), opts,
      "collisional", "Collisional erasure");
  return kExitOk;
}

int cmd_bounds(const Options& opts) {
  write_sweep_outputs(reference_rows(make_n_list(opts), opts.alpha), opts,
                      "bounds", "Erasure bounds");
  return kExitOk;
}

int cmd_heat_capacity(const Options& opts) {
  std::string csv = heatcap_csv_header();
  if (!opts.bath_file.empty()) {
    // Sweep a single bath described by a JSON parameter block.
    const BathSpec bath = load_bath(opts.bath_file);
    const std::int64_t n =
        static_cast<std::int64_t>(std::llround(bath.spectrum->log2_dimension()));
    for (int k = 0; k <= opts.gamma_grid; ++k) {
      const double gamma =
          bath.beta0 * (0.2 + 1.8 * static_cast<double>(k) / opts.gamma_grid);
      csv += heatcap_csv_row(HeatCapRow{"main", bath.family, std::max<std::int64_t>(n, 1),
                                        gamma, heat_capacity(bath.spectrum, gamma)});
    }
  } else {
    const auto rows = heat_capacity_rows(make_n_list(opts), opts.alpha, opts.beta,
                                         opts.gamma_grid, opts.threads);
    for (const auto& row : rows) csv += heatcap_csv_row(row);
    if (opts.format == "svg") {
      static const char* palette[] = {"#c62828", "#e57373", "#ef9a9a",
                                      "#1565c0", "#64b5f6", "#90caf9"};
      std::map<std::string, SvgSeries> by_curve;
      int color = 0;
      for (const auto& row : rows) {
        if (row.panel != "main") continue;
        const std::string key = row.family + " n=" + std::to_string(row.n);
        auto [it, fresh] = by_curve.try_emplace(key);
        if (fresh) {
          it->second.name = key;
          it->second.color = palette[color++ % 6];
          it->second.dashed = row.family != "engineered";
        }
        it->second.points.emplace_back(
            row.gamma, row.heat_capacity / static_cast<double>(row.n));
      }
      std::vector<SvgSeries> series;
      for (auto& [key, s] : by_curve) series.push_back(std::move(s));
      write_text(
          (std::filesystem::path(opts.out) / "heat_capacity.svg").string(),
          render_loglog_svg("Bath heat capacity per qubit",
                            "inverse temperature", "C / n", series));
    }
  }
  write_text((std::filesystem::path(opts.out) / "heat_capacity.csv").string(),
             csv);
  return kExitOk;
}

int cmd_critical(const Options& opts) {
  const CriticalRule rule = opts.critical_rule == "matched"
                                ? CriticalRule::matched
                                : CriticalRule::increment;
  write_sweep_outputs(
      critical_rows(make_n_list(opts), opts.alpha, opts.beta, rule,
                    parse_q_convention(opts.q_convention)),
      opts, "critical", "Critical-bath erasure");
  return kExitOk;
}

int cmd_optimize(const Options& opts) {
  const std::int64_t n = opts.n.empty() ? 4 : opts.n.front();
  AnnealConfig config;
  config.steps = opts.steps;
  config.initial_temperature = opts.initial_temperature;
  config.cooling_rate = opts.cooling_rate;
  config.move_scale = opts.move_scale;
  config.q_penalty_weight = opts.q_penalty_weight;
  config.seed = opts.seed;
  config.target_q =
      opts.target_q > 0.0
          ? opts.target_q
          : q_target(n, opts.alpha, parse_q_convention(opts.q_convention));

  AnnealResult res;
  if (opts.anneal_degeneracies) {
    res = anneal_full(n, config);
  } else {
    std::vector<BigCount> profile{BigCount(1)};
    for (std::int64_t i = 1; i <= n; ++i) {
      profile.push_back(pow2_count(static_cast<std::uint64_t>(i - 1)));
    }
    res = anneal_energies(n, std::move(profile), config);
  }

  const std::filesystem::path dir(opts.out);
  std::string progress = anneal_csv_header();
  for (const auto& row : res.progress) progress += anneal_csv_row(row);
  write_text((dir / "anneal_progress.csv").string(), progress);
  write_text((dir / "annealed_spectrum.json").string(),
             spectrum_to_json(*res.spectrum, 1.0) + "\n");

  nlohmann::json summary{{"n", n},
                         {"objective", res.objective},
                         {"initial_objective", res.initial_objective},
                         {"improved", res.improved},
                         {"target_q", config.target_q},
                         {"seed", config.seed},
                         {"outcome", nlohmann::json::parse(
                                         outcome_to_json(res.outcome))}};
  write_text((dir / "anneal_summary.json").string(), summary.dump(2) + "\n");
  std::cout << "best objective " << res.objective << " (improved: "
            << (res.improved ? "yes" : "no") << ")\n";
  return kExitOk;
}

int cmd_fig1(const Options& opts) {
  SweepOptions so = sweep_options(opts);
  std::vector<SweepRow> rows = erasure_sweep_rows(so);
  for (auto& row : collisional_rows(so, families_from(opts.family))) {
    rows.push_back(std::move(row));
  }
  for (auto& row : reference_rows(so.n_list, opts.alpha)) {
    rows.push_back(std::move(row));
  }
  write_sweep_outputs(rows, opts, "fig1", "Erasure protocols and bounds");
  return kExitOk;
}

int cmd_fig2(const Options& opts) { return cmd_heat_capacity(opts); }

int cmd_fig3(const Options& opts) {
  const auto n_list = make_n_list(opts);
  const auto convention = parse_q_convention(opts.q_convention);
  std::vector<SweepRow> rows = critical_rows(n_list, opts.alpha, opts.beta,
                                             CriticalRule::increment, convention);
  // Guide curves anchored on the first weak-cooling point.
  if (!rows.empty()) {
    const double s0 = rows.front().sigma;
    const double n0 = static_cast<double>(rows.front().n);
    for (std::int64_t n : n_list) {
      SweepRow lin;
      lin.curve = "guide_linear";
      lin.n = n;
      lin.sigma = s0 * n0 / static_cast<double>(n);
      rows.push_back(lin);
      SweepRow quad;
      quad.curve = "guide_quadratic";
      quad.n = n;
      quad.sigma = s0 * n0 * n0 / (static_cast<double>(n) * static_cast<double>(n));
      rows.push_back(quad);
    }
  }
  for (auto& row : critical_rows(n_list, opts.alpha, opts.beta,
                                 CriticalRule::matched, convention)) {
    rows.push_back(std::move(row));
  }
  write_sweep_outputs(rows, opts, "fig3", "Erasure with the critical bath");
  return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opts) {
  cmd->add_option("--n", opts.n, "bath sizes (repeatable)");
  cmd->add_option("--n-max", opts.n_max,
                  "expand sizes by doubling from the first --n up to this");
  cmd->add_option("--alpha", opts.alpha, "target-occupation exponent");
  cmd->add_option("--beta", opts.beta, "inverse temperature");
  cmd->add_option("--policy", opts.policy, "sorted|level_shift|both");
  cmd->add_option("--family", opts.family,
                  "linear|geodesic|geometric|all (collisional)");
  cmd->add_option("--q-convention", opts.q_convention,
                  "exact|half|caption target-occupation convention");
  cmd->add_option("--critical-rule", opts.critical_rule,
                  "increment|matched a-selection for the critical bath");
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--format", opts.format, "csv|json|svg");
  cmd->add_option("--seed", opts.seed, "random seed (stochastic commands)");
  cmd->add_option("--threads", opts.threads, "worker threads for sweeps");
  cmd->add_option("--gamma-grid", opts.gamma_grid,
                  "grid points for heat-capacity sweeps");
  cmd->add_option("--bath", opts.bath_file,
                  "JSON bath parameter block (heat-capacity command)");
}

void add_optimize_options(CLI::App* cmd, Options& opts) {
  cmd->add_option("--steps", opts.steps, "annealing steps");
  cmd->add_option("--initial-temperature", opts.initial_temperature,
                  "starting Metropolis temperature");
  cmd->add_option("--cooling-rate", opts.cooling_rate,
                  "per-step temperature decay in (0,1)");
  cmd->add_option("--move-scale", opts.move_scale,
                  "stddev of log-weight proposals");
  cmd->add_option("--target-q", opts.target_q,
                  "target occupation (default: from --q-convention)");
  cmd->add_option("--penalty", opts.q_penalty_weight,
                  "quadratic weight on the occupation mismatch");
  cmd->add_flag("--full", opts.anneal_degeneracies,
                "also anneal the degeneracy profile (small n only)");
}

/// --config file.json provides defaults; explicit flags override them.
void apply_config_file(int argc, char** argv, Options& opts) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
  }
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config " + path);
  nlohmann::json doc;
  f >> doc;
  const auto get = [&](const char* key, auto& slot) {
    if (doc.contains(key)) {
      doc.at(key).get_to(slot);
    }
  };
  get("n", opts.n);
  get("n-max", opts.n_max);
  get("alpha", opts.alpha);
  get("beta", opts.beta);
  get("policy", opts.policy);
  get("family", opts.family);
  get("q-convention", opts.q_convention);
  get("critical-rule", opts.critical_rule);
  get("out", opts.out);
  get("format", opts.format);
  get("seed", opts.seed);
  get("threads", opts.threads);
  get("gamma-grid", opts.gamma_grid);
  get("bath", opts.bath_file);
  get("steps", opts.steps);
  get("initial-temperature", opts.initial_temperature);
  get("cooling-rate", opts.cooling_rate);
  get("move-scale", opts.move_scale);
  get("target-q", opts.target_q);
  get("penalty", opts.q_penalty_weight);
  get("full", opts.anneal_degeneracies);
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{
      "Entropy-production laboratory for qubit erasure with finite baths"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with option defaults")
      ->expected(1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool optimizer = false;
  };
  const Command commands[] = {
      {"erasure-sweep", "engineered-bath erasure across sizes",
       cmd_erasure_sweep},
      {"collisional", "full-swap collision chains", cmd_collisional},
      {"bounds", "reference bound curves", cmd_bounds},
      {"heat-capacity", "bath heat-capacity sweeps", cmd_heat_capacity},
      {"critical", "critical-bath protocol", cmd_critical},
      {"optimize", "simulated-annealing spectrum search", cmd_optimize, true},
      {"fig1", "protocol comparison data", cmd_fig1},
      {"fig2", "heat-capacity figure data", cmd_fig2},
      {"fig3", "criticality figure data", cmd_fig3},
  };

  std::map<const CLI::App*, const Command*> dispatch;
  for (const Command& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("--config", config_path, "JSON file with option defaults");
    add_common_options(sub, opts);
    if (command.optimizer) add_optimize_options(sub, opts);
    dispatch[sub] = &command;
  }

  try {
    apply_config_file(argc, argv, opts);
    app.parse(argc, argv);
    for (const auto& [sub, command] : dispatch) {
      if (sub->parsed()) {
        validate_common(opts);
        return command->run(opts);
      }
    }
    std::cerr << "no command selected\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
