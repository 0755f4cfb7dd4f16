#include "landauer/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace landauer {

namespace {

using nlohmann::json;

json outcome_json(const ProcessOutcome& o) {
  return json{{"heat_Q", o.heat_Q},
              {"dS_system", o.dS_system},
              {"dS_bath", o.dS_bath},
              {"mutual_info", o.mutual_info},
              {"rel_ent_bath", o.rel_ent_bath},
              {"sigma", o.sigma},
              {"q_excited", o.q_excited},
              {"identity_residual", o.identity_residual}};
}

}  // namespace

std::string spectrum_to_json(const Spectrum& spectrum, double beta) {
  json levels = json::array();
  for (const Level& lv : spectrum.levels()) {
    levels.push_back(
        json{{"energy", lv.energy}, {"degeneracy_log2", lv.log2_degeneracy}});
  }
  json doc{{"label", spectrum.label()}, {"beta", beta}, {"levels", levels}};
  return doc.dump(2);
}

SpectrumFile spectrum_from_json(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.contains("levels") || !doc["levels"].is_array()) {
    throw std::invalid_argument("spectrum json: missing levels array");
  }
  std::vector<Level> levels;
  levels.reserve(doc["levels"].size());
  for (const json& item : doc["levels"]) {
    levels.push_back(make_level_log2(item.at("energy").get<double>(),
                                     item.at("degeneracy_log2").get<double>()));
  }
  SpectrumFile out;
  out.spectrum = make_spectrum(std::move(levels),
                               doc.value("label", std::string{}));
  out.beta = doc.value("beta", 1.0);
  return out;
}

void save_spectrum(const Spectrum& spectrum, double beta,
                   const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << spectrum_to_json(spectrum, beta) << "\n";
}

SpectrumFile load_spectrum(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return spectrum_from_json(ss.str());
}

std::string outcome_to_json(const ProcessOutcome& outcome) {
  return outcome_json(outcome).dump();
}

ProcessOutcome outcome_from_json(const std::string& text) {
  const json doc = json::parse(text);
  ProcessOutcome o;
  o.heat_Q = doc.at("heat_Q").get<double>();
  o.dS_system = doc.at("dS_system").get<double>();
  o.dS_bath = doc.at("dS_bath").get<double>();
  o.mutual_info = doc.at("mutual_info").get<double>();
  o.rel_ent_bath = doc.at("rel_ent_bath").get<double>();
  o.sigma = doc.at("sigma").get<double>();
  o.q_excited = doc.at("q_excited").get<double>();
  o.identity_residual = doc.at("identity_residual").get<double>();
  return o;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string sweep_csv_header() {
  std::string out = "# schema=";
  out += kSweepSchema;
  out +=
      "\nn,alpha,beta,policy,q,betaQ,dS_system,mutual_info,rel_ent_bath,sigma,"
      "residual,lb_nonint,lb_rw,lb_heatcap,ub_quadratic\n";
  return out;
}

std::string sweep_csv_row(const SweepRow& r) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
  };
  std::string out;
  out += std::to_string(r.n);
  out += ',' + format_double(r.alpha);
  out += ',' + format_double(r.beta);
  out += ',' + r.curve;
  out += ',' + format_double(r.q);
  out += ',' + format_double(r.beta_q);
  out += ',' + format_double(r.dS_system);
  out += ',' + format_double(r.mutual_info);
  out += ',' + format_double(r.rel_ent_bath);
  out += ',' + format_double(r.sigma);
  out += ',' + format_double(r.residual);
  out += ',' + opt(r.lb_nonint);
  out += ',' + opt(r.lb_rw);
  out += ',' + opt(r.lb_heatcap);
  out += ',' + opt(r.ub_quadratic);
  out += '\n';
  return out;
}

std::string sweep_row_json(const SweepRow& r) {
  json doc{{"n", r.n},        {"policy", r.curve},
           {"q", r.q},        {"betaQ", r.beta_q},
           {"dS_system", r.dS_system}, {"mutual_info", r.mutual_info},
           {"rel_ent_bath", r.rel_ent_bath}, {"sigma", r.sigma},
           {"residual", r.residual}};
  const auto put = [&](const char* key, double v) {
    if (!std::isnan(v)) doc[key] = v;
  };
  put("alpha", r.alpha);
  put("beta", r.beta);
  if (r.lb_nonint) doc["lb_nonint"] = *r.lb_nonint;
  if (r.lb_rw) doc["lb_rw"] = *r.lb_rw;
  if (r.lb_heatcap) doc["lb_heatcap"] = *r.lb_heatcap;
  if (r.ub_quadratic) doc["ub_quadratic"] = *r.ub_quadratic;
  return doc.dump();
}

}  // namespace landauer
