#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/rng.hpp"

namespace arseg {

enum class NoiseKind { GaussianAR1, GaussianAR2, CauchyAR1 };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::GaussianAR1;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

struct SimulationConfig {
  int n = 0;
  double rho_star = 0.0;
  double sigma_star = 1.0;
  std::vector<double> means;
  std::vector<double> true_taus;
  // Optional exact integer change-points; derived as floor(n * tau) from
  // true_taus when left empty.  The paper design fills these exactly so that
  // rational fractions never suffer floating-point floor artifacts.
  std::vector<int> true_changepoints;
  NoiseSpec noise;
  std::uint64_t seed = 0;
};

struct PaperDesign {
  std::vector<double> true_taus;
  std::vector<double> means;
  std::vector<int> changepoints;
};

// Six change-points at fractions {5,7,16,20,27,33}/36 with means alternating
// 0 and 1; integer locations floor(n * tau) computed in exact arithmetic.
inline PaperDesign paper_design(int n) {
  if (n < 72) throw errors::too_short("paper_design", n, 72);
  static constexpr int kNumerators[] = {5, 7, 16, 20, 27, 33};
  PaperDesign d;
  for (int num : kNumerators) {
    d.true_taus.push_back(static_cast<double>(num) / 36.0);
    d.changepoints.push_back(static_cast<int>(
        (static_cast<long long>(n) * num) / 36));
  }
  d.means = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
  return d;
}

inline void validate_config(const SimulationConfig& cfg) {
  if (cfg.n < 2) throw errors::invalid_config("simulate: n must be >= 2");
  if (!(cfg.sigma_star >= 0.0) || !std::isfinite(cfg.sigma_star))
    throw errors::invalid_config("simulate: sigma_star must be >= 0");
  if (cfg.means.size() != cfg.true_taus.size() + 1)
    throw errors::invalid_config(
        "simulate: means must have one more entry than true_taus");
  double prev = 0.0;
  for (double tau : cfg.true_taus) {
    if (!(tau > prev && tau < 1.0))
      throw errors::invalid_config(
          "simulate: true_taus must be strictly increasing within (0, 1)");
    prev = tau;
  }
  if (!cfg.true_changepoints.empty()) {
    if (cfg.true_changepoints.size() != cfg.true_taus.size())
      throw errors::invalid_config(
          "simulate: true_changepoints must match true_taus in length");
    int prev_t = 0;
    for (int t : cfg.true_changepoints) {
      if (t <= prev_t || t >= cfg.n)
        throw errors::invalid_config(
            "simulate: true_changepoints must satisfy 0 < t_1 < ... < n");
      prev_t = t;
    }
  }
  switch (cfg.noise.kind) {
    case NoiseKind::GaussianAR1:
    case NoiseKind::CauchyAR1:
      if (!(std::abs(cfg.rho_star) < 1.0))
        throw errors::invalid_config("simulate: |rho_star| must be < 1");
      break;
    case NoiseKind::GaussianAR2:
      if (!(std::abs(cfg.noise.phi2) < 1.0 &&
            cfg.noise.phi1 + cfg.noise.phi2 < 1.0 &&
            cfg.noise.phi2 - cfg.noise.phi1 < 1.0))
        throw errors::invalid_config(
            "simulate: (phi1, phi2) outside the AR(2) stationarity triangle");
      break;
  }
}

inline std::vector<int> resolve_changepoints(const SimulationConfig& cfg) {
  if (!cfg.true_changepoints.empty()) return cfg.true_changepoints;
  std::vector<int> cps;
  cps.reserve(cfg.true_taus.size());
  for (double tau : cfg.true_taus) {
    cps.push_back(static_cast<int>(std::floor(tau * cfg.n)));
  }
  return cps;
}

// Draws y_i = mu_k(i) + eta_i where eta is a stationary noise process.
// Observation y_i belongs to segment k when t_k < i <= t_{k+1}; y_0 carries
// the first segment's mean.  Gaussian AR(1) is initialized from its exact
// stationary law; AR(2) runs a 10n burn-in from the zero state; Cauchy AR(1)
// starts from its stationary Cauchy marginal.
inline Series simulate(const SimulationConfig& cfg) {
  validate_config(cfg);
  const std::vector<int> cps = resolve_changepoints(cfg);
  const int n = cfg.n;
  Rng rng(cfg.seed);

  std::vector<double> eta(n + 1);
  switch (cfg.noise.kind) {
    case NoiseKind::GaussianAR1: {
      const double rho = cfg.rho_star;
      eta[0] = rng.normal() * cfg.sigma_star / std::sqrt(1.0 - rho * rho);
      for (int i = 1; i <= n; ++i) {
        eta[i] = rho * eta[i - 1] + rng.normal() * cfg.sigma_star;
      }
      break;
    }
    case NoiseKind::GaussianAR2: {
      const double phi1 = cfg.noise.phi1;
      const double phi2 = cfg.noise.phi2;
      double prev1 = 0.0, prev2 = 0.0;
      const auto step = [&]() {
        const double next =
            phi1 * prev1 + phi2 * prev2 + rng.normal() * cfg.sigma_star;
        prev2 = prev1;
        prev1 = next;
        return next;
      };
      for (int i = 0; i < 10 * n; ++i) step();
      for (int i = 0; i <= n; ++i) eta[i] = step();
      break;
    }
    case NoiseKind::CauchyAR1: {
      const double rho = cfg.rho_star;
      eta[0] = rng.cauchy() * cfg.sigma_star / (1.0 - std::abs(rho));
      for (int i = 1; i <= n; ++i) {
        eta[i] = rho * eta[i - 1] + rng.cauchy() * cfg.sigma_star;
      }
      break;
    }
  }

  std::vector<double> values(n + 1);
  std::size_t k = 0;
  for (int i = 0; i <= n; ++i) {
    while (k < cps.size() && cps[k] < i) ++k;
    values[i] = cfg.means[k] + eta[i];
  }
  return validate_series(std::move(values));
}

}  // namespace arseg
