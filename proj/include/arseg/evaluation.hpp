#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/stats.hpp"

namespace arseg {

struct HausdorffResult {
  double d1 = 0.0;
  double d2 = 0.0;
  double d = 0.0;
};

struct DiagnosticsReport {
  double ljung_box_stat = 0.0;
  int ljung_box_lags = 0;
  double ljung_box_pvalue = 1.0;
  double jarque_bera_stat = 0.0;
  double jarque_bera_pvalue = 1.0;
};

// Removes the trailing member of each adjacent change-point pair: t_i is
// dropped when t_i = t_{i-1} + 1 and t_{i+1} != t_i + 1, with sentinels
// t_0 = 0 and t_{m+1} = n.  Single pass; both clauses are evaluated on the
// input vector, not on the partially filtered one.
inline Segmentation postprocess(const Segmentation& seg) {
  const std::vector<int> b = seg.boundaries();
  std::vector<int> kept;
  kept.reserve(seg.changepoints.size());
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    const bool follows_previous = b[i] == b[i - 1] + 1;
    const bool followed_by_next = b[i + 1] == b[i] + 1;
    if (follows_previous && !followed_by_next) continue;
    kept.push_back(b[i]);
  }
  Segmentation out;
  out.n = seg.n;
  out.changepoints = std::move(kept);
  return out;
}

namespace detail {

inline double distance_to_nearest(double x, const std::vector<double>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (double p : points) best = std::min(best, std::abs(x - p));
  return best;
}

inline std::vector<double> augment_with_boundaries(std::vector<double> taus) {
  taus.push_back(0.0);
  taus.push_back(1.0);
  return taus;
}

}  // namespace detail

// Hausdorff distances between change-point fractions, both sets augmented
// with the boundary points {0, 1} so empty estimates stay well-defined.
// d1 is the worst distance from an estimated point to the true set (false
// positives); d2 is the reverse direction (missed changes).
inline HausdorffResult hausdorff(const std::vector<double>& true_taus,
                                 const std::vector<double>& est_taus) {
  const std::vector<double> truth = detail::augment_with_boundaries(true_taus);
  const std::vector<double> est = detail::augment_with_boundaries(est_taus);
  HausdorffResult r;
  for (double e : est) r.d1 = std::max(r.d1, detail::distance_to_nearest(e, truth));
  for (double t : truth) r.d2 = std::max(r.d2, detail::distance_to_nearest(t, est));
  r.d = std::max(r.d1, r.d2);
  return r;
}

// Ljung-Box and Jarque-Bera tests on the decorrelated residuals
// e_i = w_i - delta_k(i).
inline DiagnosticsReport residual_diagnostics(const Series& series,
                                              const FitResult& fit,
                                              double rho, int lags) {
  const DecorrelatedSeries w = decorrelate(series, rho);
  const int n = w.n();
  if (lags < 1 || lags >= n / 2)
    throw errors::invalid_config(
        "residual_diagnostics: lags must satisfy 1 <= lags < n/2");
  if (fit.segmentation.n != n)
    throw errors::invalid_config(
        "residual_diagnostics: fit does not match the series length");

  std::vector<double> residuals(n);
  const std::vector<int> bounds = fit.segmentation.boundaries();
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    for (int i = bounds[k]; i < bounds[k + 1]; ++i) {
      residuals[i] = w.values[i] - fit.deltas[k];
    }
  }

  const double m = mean(residuals);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double e : residuals) {
    const double d = e - m;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 < 1e-12)
    throw errors::degenerate_residuals(
        "residual_diagnostics: residual variance is ~ 0");

  DiagnosticsReport report;
  report.ljung_box_lags = lags;
  double lb = 0.0;
  for (int h = 1; h <= lags; ++h) {
    const double r = sample_autocorrelation(residuals, h);
    lb += r * r / static_cast<double>(n - h);
  }
  report.ljung_box_stat = static_cast<double>(n) * (n + 2.0) * lb;
  report.ljung_box_pvalue = chi_squared_sf(report.ljung_box_stat, lags);

  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  report.jarque_bera_stat =
      static_cast<double>(n) / 6.0 *
      (skew * skew + 0.25 * (kurt - 3.0) * (kurt - 3.0));
  report.jarque_bera_pvalue = chi_squared_sf(report.jarque_bera_stat, 2);
  return report;
}

}  // namespace arseg
