#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/rng.hpp"
#include "arseg/simulation.hpp"

namespace testsupport {

// Stationary AR(1) series with constant mean zero.
inline arseg::Series make_ar1(int n, double rho, double sigma,
                              std::uint64_t seed) {
  arseg::SimulationConfig cfg;
  cfg.n = n;
  cfg.rho_star = rho;
  cfg.sigma_star = sigma;
  cfg.means = {0.0};
  cfg.seed = seed;
  return arseg::simulate(cfg);
}

// Paper-style design with AR(1) noise.
inline arseg::Series make_paper_series(int n, double rho, double sigma,
                                       std::uint64_t seed) {
  const arseg::PaperDesign d = arseg::paper_design(n);
  arseg::SimulationConfig cfg;
  cfg.n = n;
  cfg.rho_star = rho;
  cfg.sigma_star = sigma;
  cfg.means = d.means;
  cfg.true_taus = d.true_taus;
  cfg.true_changepoints = d.changepoints;
  cfg.seed = seed;
  return arseg::simulate(cfg);
}

inline std::vector<double> random_vector(int n, std::uint64_t seed) {
  arseg::Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

inline arseg::DecorrelatedSeries make_w(std::vector<double> values,
                                        double rho_used = 0.0) {
  arseg::DecorrelatedSeries w;
  w.values = std::move(values);
  w.rho_used = rho_used;
  return w;
}

}  // namespace testsupport
