#include "dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "landauer/numeric.hpp"

namespace landauer::testing {

std::vector<double> dense_energies(const Spectrum& spectrum,
                                   std::size_t max_dim) {
  if (spectrum.dimension() > static_cast<long>(max_dim)) {
    throw std::invalid_argument("dense_energies: spectrum too large");
  }
  std::vector<double> out;
  out.reserve(spectrum.dimension().get_ui());
  for (const Level& lv : spectrum.levels()) {
    const unsigned long c = lv.count.get_ui();
    for (unsigned long k = 0; k < c; ++k) out.push_back(lv.energy);
  }
  return out;
}

std::vector<double> dense_gibbs(const std::vector<double>& energies,
                                double beta) {
  KahanSum z;
  for (double e : energies) z.add(std::exp(-beta * e));
  std::vector<double> p;
  p.reserve(energies.size());
  for (double e : energies) p.push_back(std::exp(-beta * e) / z.value());
  return p;
}

std::vector<double> expand_distribution(const LevelDistribution& dist) {
  const Spectrum& sp = *dist.spectrum();
  if (sp.dimension() > 8192) {
    throw std::invalid_argument("expand_distribution: spectrum too large");
  }
  std::vector<double> out;
  out.reserve(sp.dimension().get_ui());
  for (const DistChunk& ch : dist.chunks()) {
    const unsigned long c = ch.count.get_ui();
    const double p = static_cast<double>(std::exp(ch.log_prob));
    for (unsigned long k = 0; k < c; ++k) out.push_back(p);
  }
  return out;
}

double dense_entropy(const std::vector<double>& p) {
  KahanSum s;
  for (double v : p) s.add(-xlogx(v));
  return s.value();
}

double dense_mean_energy(const std::vector<double>& energies,
                         const std::vector<double>& p) {
  KahanSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s.add(p[i] * energies[i]);
  return s.value();
}

double dense_variance_energy(const std::vector<double>& energies,
                             const std::vector<double>& p) {
  const double mu = dense_mean_energy(energies, p);
  KahanSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = energies[i] - mu;
    s.add(p[i] * d * d);
  }
  return s.value();
}

double dense_relative_entropy(const std::vector<double>& p,
                              const std::vector<double>& q) {
  KahanSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      if (q[i] <= 0.0) {
        throw std::domain_error("dense_relative_entropy: support violation");
      }
      s.add(p[i] * (std::log(p[i]) - std::log(q[i])));
    }
  }
  return s.value();
}

ProcessOutcome dense_outcome(const DenseJoint& joint,
                             const std::vector<double>& energies,
                             const std::vector<double>& gibbs_probs,
                             const SystemDiag& initial_system, double beta) {
  const std::size_t dim = energies.size();
  const std::size_t sectors = joint.sector_values.size();

  std::vector<double> sigma_b(dim, 0.0);
  std::vector<double> sigma_s(sectors, 0.0);
  KahanSum joint_entropy;
  for (std::size_t s = 0; s < sectors; ++s) {
    KahanSum sector_total;
    for (std::size_t j = 0; j < dim; ++j) {
      const double v = joint.sector_values[s][j];
      sigma_b[j] += v;
      sector_total.add(v);
      joint_entropy.add(-xlogx(v));
    }
    sigma_s[s] = sector_total.value();
  }

  KahanSum p_entropy;
  for (double v : initial_system.populations) p_entropy.add(-xlogx(v));
  KahanSum s_entropy;
  for (double v : sigma_s) s_entropy.add(-xlogx(v));

  ProcessOutcome o;
  o.heat_Q = dense_mean_energy(energies, sigma_b) -
             dense_mean_energy(energies, gibbs_probs);
  o.dS_system = s_entropy.value() - p_entropy.value();
  o.dS_bath = dense_entropy(sigma_b) - dense_entropy(gibbs_probs);
  o.mutual_info =
      s_entropy.value() + dense_entropy(sigma_b) - joint_entropy.value();
  o.rel_ent_bath = dense_relative_entropy(sigma_b, gibbs_probs);
  o.sigma = beta * o.heat_Q + o.dS_system;
  o.identity_residual = std::abs(o.sigma - (o.mutual_info + o.rel_ent_bath));
  o.q_excited = sectors == 2 ? sigma_s[1] : 1.0 - sigma_s[0];
  return o;
}

DenseJoint dense_max_cool_joint(const SystemDiag& system,
                                const Spectrum& spectrum, double beta) {
  const std::vector<double> energies = dense_energies(spectrum);
  const std::vector<double> g = dense_gibbs(energies, beta);
  const std::size_t dim = energies.size();
  const std::size_t sectors = system.dim();

  struct Entry {
    double value;
    double energy;
    std::size_t sector;
  };
  std::vector<Entry> entries;
  entries.reserve(sectors * dim);
  for (std::size_t s = 0; s < sectors; ++s) {
    for (std::size_t j = 0; j < dim; ++j) {
      entries.push_back(Entry{system.populations[s] * g[j], energies[j], s});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.sector < b.sector;
  });

  DenseJoint joint;
  joint.sector_values.assign(sectors, std::vector<double>(dim, 0.0));
  std::size_t next = 0;
  for (std::size_t s = 0; s < sectors; ++s) {
    for (std::size_t j = 0; j < dim; ++j) {
      joint.sector_values[s][j] = entries[next++].value;
    }
  }
  return joint;
}

ProcessOutcome dense_max_cool(const SystemDiag& system, const Spectrum& spectrum,
                              double beta) {
  const std::vector<double> energies = dense_energies(spectrum);
  const std::vector<double> g = dense_gibbs(energies, beta);
  return dense_outcome(dense_max_cool_joint(system, spectrum, beta), energies, g,
                       system, beta);
}

}  // namespace landauer::testing
