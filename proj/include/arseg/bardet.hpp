#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/segmentation.hpp"

namespace arseg {

// Lower bound on the per-segment innovation variance; the quasi-likelihood
// is unbounded below as the variance goes to zero.
inline constexpr double kBardetVarianceFloor = 1e-12;

struct BardetSegmentFit {
  double rho_k = 0.0;
  double delta_k = 0.0;
  double sigma2_k = 0.0;
  double cost = 0.0;
};

namespace detail {

// Prefix sums over the regression pairs (y_{i-1}, y_i), i = 1..n, enabling
// O(1) per-segment least squares.
struct BardetPrefix {
  std::vector<double> sx, sz, sxx, szz, sxz;

  explicit BardetPrefix(const std::vector<double>& y)
      : sx(y.size(), 0.0),
        sz(y.size(), 0.0),
        sxx(y.size(), 0.0),
        szz(y.size(), 0.0),
        sxz(y.size(), 0.0) {
    for (std::size_t i = 1; i < y.size(); ++i) {
      const double x = y[i - 1];
      const double z = y[i];
      sx[i] = sx[i - 1] + x;
      sz[i] = sz[i - 1] + z;
      sxx[i] = sxx[i - 1] + x * x;
      szz[i] = szz[i - 1] + z * z;
      sxz[i] = sxz[i - 1] + x * z;
    }
  }

  // Profiled quasi-likelihood fit on the segment (u, v]; degenerate
  // regressors yield sigma2_k < 0 as an in-band failure marker.
  BardetSegmentFit fit(int u, int v) const {
    const double c = static_cast<double>(v - u);
    const double mx = sx[v] - sx[u];
    const double mz = sz[v] - sz[u];
    const double cxx = (sxx[v] - sxx[u]) - mx * mx / c;
    const double cxz = (sxz[v] - sxz[u]) - mx * mz / c;
    const double czz = (szz[v] - szz[u]) - mz * mz / c;
    BardetSegmentFit f;
    if (cxx <= kBardetVarianceFloor * ((sxx[v] - sxx[u]) + 1.0)) {
      f.sigma2_k = -1.0;
      return f;
    }
    f.rho_k = cxz / cxx;
    f.delta_k = (mz - f.rho_k * mx) / c;
    const double rss = std::max(0.0, czz - f.rho_k * cxz);
    f.sigma2_k = std::max(rss / c, kBardetVarianceFloor);
    f.cost = c * std::log(f.sigma2_k) + c;
    return f;
  }
};

}  // namespace detail

// Per-segment AR(1) quasi-likelihood: OLS of y_i on y_{i-1} with intercept
// over i = u+1..v, profiled innovation variance, cost (v-u) log(sigma2) +
// (v-u).
inline BardetSegmentFit bardet_segment_cost(const Series& series, int u,
                                            int v) {
  if (u < 0 || v > series.n)
    throw errors::index_out_of_range(
        "bardet_segment_cost: need 0 <= u < v <= n");
  if (v - u < 3)
    throw errors::too_few_values("bardet_segment_cost", v - u, 3);
  const detail::BardetPrefix prefix(series.values);
  const BardetSegmentFit f = prefix.fit(u, v);
  if (f.sigma2_k < 0.0)
    throw errors::degenerate_regressor(
        "bardet_segment_cost: y_{i-1} is constant on the segment");
  return f;
}

// Exact DP over the additive quasi-likelihood segment costs; same engine and
// tie-break rule as the least-squares segmentation.
inline Segmentation bardet_segment(const Series& series, int m,
                                   int min_len = 3) {
  if (min_len < 3)
    throw errors::invalid_config("bardet_segment: min_len must be >= 3");
  const int n = series.n;
  detail::check_feasible(n, m, min_len);
  const detail::BardetPrefix prefix(series.values);
  const auto cost = [&prefix](int u, int v) {
    const BardetSegmentFit f = prefix.fit(u, v);
    return f.sigma2_k < 0.0 ? detail::kInf : f.cost;
  };
  const auto suffix = detail::dp_suffix_table(cost, n, min_len, m);
  return make_segmentation(
      n, detail::dp_reconstruct(cost, suffix, n, min_len, m));
}

// Per-segment fits for a fixed segmentation (reporting convenience).
inline std::vector<BardetSegmentFit> bardet_fit_segments(
    const Series& series, const Segmentation& seg) {
  std::vector<BardetSegmentFit> fits;
  const std::vector<int> bounds = seg.boundaries();
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    fits.push_back(bardet_segment_cost(series, bounds[k], bounds[k + 1]));
  }
  return fits;
}

}  // namespace arseg
