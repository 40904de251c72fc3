#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/rng.hpp"
#include "arseg/stats.hpp"

namespace arseg {

// Estimates are clamped into this open stationarity interval before being
// used for decorrelation.
inline constexpr double kRhoClampBound = 0.999;

enum class RhoMethod { MedianDiff, MaGenton, MedianDiffCauchy, Fixed };

inline const char* rho_method_name(RhoMethod method) {
  switch (method) {
    case RhoMethod::MedianDiff: return "MedianDiff";
    case RhoMethod::MaGenton: return "MaGenton";
    case RhoMethod::MedianDiffCauchy: return "MedianDiffCauchy";
    case RhoMethod::Fixed: return "Fixed";
  }
  return "Unknown";
}

struct RhoEstimate {
  double value = 0.0;
  RhoMethod method = RhoMethod::Fixed;
  double clamped_value = 0.0;
  bool was_clamped = false;
};

inline RhoEstimate make_rho_estimate(double value, RhoMethod method) {
  RhoEstimate e;
  e.value = value;
  e.method = method;
  e.clamped_value = std::min(kRhoClampBound, std::max(-kRhoClampBound, value));
  e.was_clamped = e.clamped_value != value;
  return e;
}

struct RhoTestResult {
  double statistic = 0.0;
  double sigma_tilde_sq = 0.0;
  double p_value = 1.0;
  int mc_replications = 0;
};

// Ratio-of-medians estimator: squared median of lag-2 absolute differences
// over squared median of lag-1 absolute differences, minus one.
inline RhoEstimate estimate_rho_tilde(const Series& series) {
  const std::vector<double>& y = series.values;
  if (y.size() < 3) throw errors::too_short("estimate_rho_tilde", y.size(), 3);
  std::vector<double> lag1(y.size() - 1);
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    lag1[i] = std::abs(y[i + 1] - y[i]);
  }
  std::vector<double> lag2(y.size() - 2);
  for (std::size_t i = 0; i + 2 < y.size(); ++i) {
    lag2[i] = std::abs(y[i + 2] - y[i]);
  }
  const double med1 = median(std::move(lag1));
  if (med1 == 0.0)
    throw errors::degenerate_median(
        "estimate_rho_tilde: median lag-1 absolute difference is zero");
  const double ratio = median(std::move(lag2)) / med1;
  return make_rho_estimate(ratio * ratio - 1.0, RhoMethod::MedianDiff);
}

// First quartile of the pairwise absolute differences (1-based order
// statistic at ceil(M/4) of the M = C(len, 2) pairs).  No consistency
// constant is applied; it would cancel in the ratio below anyway.
inline double qn_quartile_scale(const std::vector<double>& values) {
  const std::size_t len = values.size();
  if (len < 2) throw errors::too_few_values("qn_quartile_scale", len, 2);
  const std::size_t m = len * (len - 1) / 2;
  std::vector<double> diffs;
  diffs.reserve(m);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      diffs.push_back(std::abs(values[i] - values[j]));
    }
  }
  const std::size_t k = (m + 3) / 4;
  std::nth_element(diffs.begin(), diffs.begin() + (k - 1), diffs.end());
  return diffs[k - 1];
}

// Robust autocorrelation from scales of sums and differences of consecutive
// observations.
inline RhoEstimate estimate_rho_mg(const Series& series) {
  const std::vector<double>& y = series.values;
  if (y.size() < 3) throw errors::too_short("estimate_rho_mg", y.size(), 3);
  std::vector<double> plus(y.size() - 1), minus(y.size() - 1);
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    plus[i] = y[i + 1] + y[i];
    minus[i] = y[i + 1] - y[i];
  }
  const double qp = qn_quartile_scale(plus);
  const double qm = qn_quartile_scale(minus);
  if (qp == 0.0 && qm == 0.0)
    throw errors::degenerate_scale(
        "estimate_rho_mg: both pairwise scales are zero");
  const double qp2 = qp * qp;
  const double qm2 = qm * qm;
  return make_rho_estimate((qp2 - qm2) / (qp2 + qm2), RhoMethod::MaGenton);
}

// Inverse of the map rho -> rho(2 + rho) on rho >= 0 and its mirrored branch
// on rho < 0; corrects the ratio estimator under Cauchy innovations.
inline double cauchy_transform(double rho_tilde) {
  if (rho_tilde < -1.0)
    throw errors::out_of_domain("cauchy_transform: argument must be >= -1");
  const double root = std::sqrt(1.0 + rho_tilde);
  if (rho_tilde >= 0.0) return -1.0 + root;
  return -std::sqrt(1.0 - root);
}

inline RhoEstimate estimate_rho_cauchy(const Series& series) {
  const RhoEstimate base = estimate_rho_tilde(series);
  return make_rho_estimate(cauchy_transform(base.value),
                           RhoMethod::MedianDiffCauchy);
}

// Monte Carlo estimate of the asymptotic variance of sqrt(n) * rho_tilde
// under independence.  Valid for any i.i.d. Gaussian null because the
// estimator is affine-invariant, so standard normal series suffice.
inline double estimate_null_variance(int n, int mc_replications,
                                     std::uint64_t seed) {
  if (n < 2) throw errors::too_short("estimate_null_variance", n, 2);
  if (mc_replications < 100)
    throw errors::invalid_config(
        "estimate_null_variance: need at least 100 replications");
  std::vector<double> estimates(mc_replications);
  Series draw;
  draw.n = n;
  draw.values.resize(n + 1);
  for (int r = 0; r < mc_replications; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (double& v : draw.values) v = rng.normal();
    estimates[r] = estimate_rho_tilde(draw).value;
  }
  return n * sample_variance(estimates);
}

// Two-sided Gaussian test of rho = 0 with Monte Carlo variance calibration.
inline RhoTestResult test_rho_zero(const Series& series, int mc_replications,
                                   std::uint64_t seed) {
  const double sigma_sq =
      estimate_null_variance(series.n, mc_replications, seed);
  const double rho = estimate_rho_tilde(series).value;
  RhoTestResult result;
  result.sigma_tilde_sq = sigma_sq;
  result.mc_replications = mc_replications;
  result.statistic =
      std::sqrt(static_cast<double>(series.n)) * rho / std::sqrt(sigma_sq);
  result.p_value = 2.0 * (1.0 - normal_cdf(std::abs(result.statistic)));
  return result;
}

}  // namespace arseg
