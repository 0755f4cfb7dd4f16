#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "landauer/numeric.hpp"
#include "landauer/thermo.hpp"

namespace landauer::tools {

QConvention parse_q_convention(const std::string& name) {
  if (name == "exact") return QConvention::exact;
  if (name == "half") return QConvention::half;
  if (name == "caption") return QConvention::caption;
  throw std::invalid_argument("unknown q convention: " + name);
}

double q_target(std::int64_t n, double alpha, QConvention convention) {
  switch (convention) {
    case QConvention::exact:
      return engineered_q({n, alpha, 1.0});
    case QConvention::half:
      return 0.5 * std::pow(static_cast<double>(n), -alpha);
    case QConvention::caption:
      return std::pow(static_cast<double>(n), -alpha);
  }
  throw std::logic_error("unreachable");
}

void parallel_indexed(std::size_t count, int threads,
                      const std::function<void(std::size_t)>& fn) {
  const std::size_t requested = threads > 0 ? static_cast<std::size_t>(threads) : 1;
  const std::size_t workers = std::max<std::size_t>(1, std::min(requested, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

namespace {

SweepRow outcome_row(const std::string& curve, std::int64_t n, double alpha,
                     double beta, const ProcessOutcome& o) {
  SweepRow row;
  row.curve = curve;
  row.n = n;
  row.alpha = alpha;
  row.beta = beta;
  row.q = o.q_excited;
  row.beta_q = beta * o.heat_Q;
  row.dS_system = o.dS_system;
  row.mutual_info = o.mutual_info;
  row.rel_ent_bath = o.rel_ent_bath;
  row.sigma = o.sigma;
  row.residual = o.identity_residual;
  return row;
}

void attach_bounds(SweepRow& row, const EngineeredSpectrum& bath,
                   const ProcessOutcome& o, double beta) {
  const double e_tau = mean_energy(gibbs(bath.spectrum, beta));
  const auto star = solve_beta_star(bath.spectrum, e_tau + o.heat_Q);
  BoundInputs inputs;
  inputs.dS_system = o.dS_system;
  inputs.n = bath.params.n;
  inputs.local_dim = 2;
  inputs.env_dim_log = static_cast<double>(bath.params.n) * kLn2;
  inputs.beta = beta;
  inputs.beta_star = star.beta_star;
  inputs.beta_q = beta * o.heat_Q;
  const BoundSet bounds = evaluate_bounds(inputs, bath.spectrum);
  row.lb_nonint = bounds.lb_nonint;
  row.lb_rw = bounds.lb_rw;
  row.lb_heatcap = bounds.lb_heatcap;
  if (bath.params.alpha > 2.0) {
    row.ub_quadratic = sigma_quadratic_bound(bath.params.n, bath.params.alpha);
  }
}

}  // namespace

std::vector<SweepRow> erasure_sweep_rows(const SweepOptions& options) {
  if (options.n_list.empty()) {
    throw std::invalid_argument("erasure sweep: empty n list");
  }
  std::vector<std::vector<SweepRow>> slots(options.n_list.size());
  parallel_indexed(options.n_list.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = options.n_list[i];
    const EngineeredSpectrum bath =
        engineered_interacting({n, options.alpha, options.beta});
    if (options.sorted_policy) {
      auto res = max_cool(maximally_mixed_qubit(), bath, options.beta,
                          FillPolicy::sorted);
      SweepRow row =
          outcome_row("sorted", n, options.alpha, options.beta, res.outcome);
      attach_bounds(row, bath, res.outcome, options.beta);
      slots[i].push_back(std::move(row));
    }
    if (options.level_shift_policy) {
      auto res = max_cool(maximally_mixed_qubit(), bath, options.beta,
                          FillPolicy::level_shift);
      SweepRow row = outcome_row("level_shift", n, options.alpha, options.beta,
                                 res.outcome);
      attach_bounds(row, bath, res.outcome, options.beta);
      slots[i].push_back(std::move(row));
    }
  });
  std::vector<SweepRow> rows;
  for (auto& s : slots) {
    for (auto& r : s) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SweepRow> collisional_rows(
    const SweepOptions& options, const std::vector<ScheduleFamily>& families) {
  if (options.n_list.empty()) {
    throw std::invalid_argument("collisional sweep: empty n list");
  }
  std::vector<std::vector<SweepRow>> slots(options.n_list.size());
  parallel_indexed(options.n_list.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = options.n_list[i];
    const double q = q_target(n, options.alpha, options.q_convention);
    for (ScheduleFamily family : families) {
      auto out = run_chain(make_schedule(family, n, q), options.beta);
      SweepRow row = outcome_row(to_string(family), n, options.alpha,
                                 options.beta, out);
      row.lb_nonint = noninteracting_lower_bound(out.dS_system, 2, n);
      slots[i].push_back(std::move(row));
    }
  });
  std::vector<SweepRow> rows;
  for (auto& s : slots) {
    for (auto& r : s) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SweepRow> reference_rows(const std::vector<std::int64_t>& n_list,
                                     double alpha) {
  std::vector<SweepRow> rows;
  for (std::int64_t n : n_list) {
    SweepRow nonint;
    nonint.curve = "ref_nonint";
    nonint.n = n;
    nonint.sigma = noninteracting_lower_bound(-kLn2, 2, n);
    nonint.lb_nonint = nonint.sigma;
    rows.push_back(nonint);

    SweepRow rw;
    rw.curve = "ref_rw";
    rw.n = n;
    rw.sigma = rw_lower_bound(-kLn2, static_cast<double>(n) * kLn2);
    rw.lb_rw = rw.sigma;
    rows.push_back(rw);

    if (alpha > 2.0) {
      SweepRow quad;
      quad.curve = "ref_quadratic";
      quad.n = n;
      quad.alpha = alpha;
      quad.sigma = sigma_quadratic_bound(n, alpha);
      quad.ub_quadratic = quad.sigma;
      rows.push_back(quad);
    }
  }
  return rows;
}

CriticalRun run_critical_protocol(std::int64_t n, double q_target_value,
                                  double beta0) {
  if (!(q_target_value > 0.0) || !(q_target_value < 0.5)) {
    throw std::invalid_argument("critical protocol: target in (0, 1/2)");
  }
  // Occupation after max-cooling as a function of the ground weight:
  // q(a) = (1-a)(N+1)/(2N), strictly decreasing. Bracketed bisection per the
  // selection rule, with the closed form available as a cross-check.
  const double eps_n = std::exp2(-static_cast<double>(n));
  const auto q_of_a = [&](double a) { return 0.5 * (1.0 - a) / (1.0 - eps_n); };
  double lo = eps_n, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (q_of_a(mid) > q_target_value ? lo : hi) = mid;
  }
  const CriticalParams params{n, 0.5 * (lo + hi), beta0};
  auto spectrum = critical_degenerate(params);
  const double a = params.a;
  const double x = a - (1.0 - a) * eps_n / (1.0 - eps_n);  // a - (1-a)/N
  return CriticalRun{params, max_cool(maximally_mixed_qubit(), spectrum, beta0),
                     0.5 * (1.0 - x), x};
}

std::vector<SweepRow> critical_rows(const std::vector<std::int64_t>& n_list,
                                    double alpha, double beta0,
                                    CriticalRule rule, QConvention convention) {
  std::vector<SweepRow> rows;
  rows.reserve(n_list.size());
  for (std::int64_t n : n_list) {
    const double nd = static_cast<double>(n);
    const double target = rule == CriticalRule::increment
                              ? 0.5 * (1.0 - 1.0 / (nd * nd))
                              : q_target(n, alpha, convention);
    CriticalRun run = run_critical_protocol(n, target, beta0);
    const char* curve = rule == CriticalRule::increment ? "critical_increment"
                                                        : "critical_matched";
    SweepRow row = outcome_row(curve, n, alpha, beta0, run.result.outcome);
    row.lb_rw = rw_lower_bound(run.result.outcome.dS_system, nd * kLn2);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string heatcap_csv_header() {
  std::string out = "# schema=";
  out += kHeatCapSchema;
  out += "\npanel,family,n,gamma,heat_capacity,heat_capacity_over_n\n";
  return out;
}

std::string heatcap_csv_row(const HeatCapRow& row) {
  std::string out = row.panel;
  out += ',' + row.family;
  out += ',' + std::to_string(row.n);
  out += ',' + format_double(row.gamma);
  out += ',' + format_double(row.heat_capacity);
  out += ',' +
         format_double(row.heat_capacity / static_cast<double>(row.n));
  out += '\n';
  return out;
}

std::vector<HeatCapRow> heat_capacity_rows(const std::vector<std::int64_t>& n_list,
                                           double alpha, double beta0,
                                           int gamma_grid, int threads) {
  if (n_list.empty()) throw std::invalid_argument("heat capacity: empty n list");
  std::vector<std::vector<HeatCapRow>> slots(n_list.size());
  parallel_indexed(n_list.size(), threads, [&](std::size_t i) {
    const std::int64_t n = n_list[i];
    auto engineered = engineered_interacting({n, alpha, beta0}).spectrum;
    auto product = non_interacting_qubits(n, 1.0 / beta0);
    for (int k = 0; k <= gamma_grid; ++k) {
      // Grid centered on the design temperature, endpoints included exactly.
      const double gamma =
          beta0 * (0.2 + 1.8 * static_cast<double>(k) / gamma_grid);
      slots[i].push_back(HeatCapRow{"main", "engineered", n, gamma,
                                    heat_capacity(engineered, gamma)});
      slots[i].push_back(HeatCapRow{"main", "noninteracting", n, gamma,
                                    heat_capacity(product, gamma)});
    }
    slots[i].push_back(HeatCapRow{"inset", "engineered", n, beta0,
                                  heat_capacity(engineered, beta0)});
    slots[i].push_back(HeatCapRow{"inset", "noninteracting", n, beta0,
                                  heat_capacity(product, beta0)});
  });
  std::vector<HeatCapRow> rows;
  for (auto& s : slots) {
    for (auto& r : s) rows.push_back(std::move(r));
  }
  return rows;
}

std::string anneal_csv_header() {
  std::string out = "# schema=";
  out += kAnnealSchema;
  out += "\nstep,temperature,objective,best_objective\n";
  return out;
}

std::string anneal_csv_row(const AnnealProgressRow& row) {
  std::string out = std::to_string(row.step);
  out += ',' + format_double(row.temperature);
  out += ',' + format_double(row.objective);
  out += ',' + format_double(row.best_objective);
  out += '\n';
  return out;
}

BathSpec bath_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  BathSpec spec;
  spec.family = doc.at("family").get<std::string>();
  spec.beta0 = doc.value("beta0", 1.0);
  if (spec.family == "engineered") {
    spec.spectrum = engineered_interacting({doc.at("n").get<std::int64_t>(),
                                            doc.value("alpha", 3.0), spec.beta0})
                        .spectrum;
  } else if (spec.family == "critical") {
    spec.spectrum = critical_degenerate(
        {doc.at("n").get<std::int64_t>(), doc.at("a").get<double>(), spec.beta0});
  } else if (spec.family == "noninteracting") {
    spec.spectrum = non_interacting_qubits(doc.at("n").get<std::int64_t>(),
                                           doc.value("gap", 1.0));
  } else if (spec.family == "custom") {
    std::vector<Level> levels;
    for (const auto& item : doc.at("levels")) {
      levels.push_back(make_level_log2(item.at("energy").get<double>(),
                                       item.at("degeneracy_log2").get<double>()));
    }
    spec.spectrum = std::make_shared<const Spectrum>(
        Spectrum::from_unsorted(std::move(levels), "custom"));
  } else {
    throw std::invalid_argument("unknown bath family: " + spec.family);
  }
  return spec;
}

BathSpec load_bath(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read bath spec " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return bath_from_json(ss.str());
}

void write_text(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& metadata) {
  std::string out = sweep_csv_header();
  if (!metadata.empty()) {
    const std::size_t pos = out.find('\n');
    out.insert(pos + 1, "# " + metadata + "\n");
  }
  for (const SweepRow& row : rows) out += sweep_csv_row(row);
  return out;
}

std::string rows_to_json(const std::vector<SweepRow>& rows,
                         const std::string& metadata) {
  std::string out = "{\n\"schema\": \"";
  out += kSweepSchema;
  out += "\",\n";
  if (!metadata.empty()) out += "\"metadata\": \"" + metadata + "\",\n";
  out += "\"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "  " + sweep_row_json(rows[i]);
    if (i + 1 < rows.size()) out += ',';
    out += '\n';
  }
  out += "]}\n";
  return out;
}

}  // namespace landauer::tools
