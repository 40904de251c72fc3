#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"

namespace arseg {

struct SegmentationConstraints {
  int min_segment_length = 1;
  int m_max = 0;
};

// Prefix sums of a decorrelated series enabling O(1) least-squares segment
// costs.  Indices follow the series convention: segment (u, v] covers
// w_{u+1}..w_v, stored at values[u..v-1].
class CostMatrix {
 public:
  explicit CostMatrix(const std::vector<double>& w)
      : prefix_sum_(w.size() + 1, 0.0), prefix_sumsq_(w.size() + 1, 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      prefix_sum_[i + 1] = prefix_sum_[i] + w[i];
      prefix_sumsq_[i + 1] = prefix_sumsq_[i] + w[i] * w[i];
    }
  }

  int n() const { return static_cast<int>(prefix_sum_.size()) - 1; }

  // Sum of squared residuals of w_{u+1}..w_v around their mean; negative
  // round-off is truncated to zero.
  double segment_cost(int u, int v) const {
    if (u < 0 || v <= u || v > n())
      throw errors::index_out_of_range("segment_cost: need 0 <= u < v <= n");
    const double s = prefix_sum_[v] - prefix_sum_[u];
    const double sq = prefix_sumsq_[v] - prefix_sumsq_[u];
    return std::max(0.0, sq - s * s / static_cast<double>(v - u));
  }

  double segment_sum(int u, int v) const {
    return prefix_sum_[v] - prefix_sum_[u];
  }

 private:
  std::vector<double> prefix_sum_, prefix_sumsq_;
};

inline double segment_cost(const CostMatrix& cm, int u, int v) {
  return cm.segment_cost(u, v);
}

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Suffix-cost table for additive segment costs: suffix[j][u] is the optimal
// cost of covering (u, n] with exactly j interior change-points, every
// segment at least `delta` long; infeasible states hold +infinity.
template <typename CostFn>
std::vector<std::vector<double>> dp_suffix_table(const CostFn& cost, int n,
                                                 int delta, int m_max) {
  std::vector<std::vector<double>> suffix(
      m_max + 1, std::vector<double>(n + 1, kInf));
  for (int u = 0; u + delta <= n; ++u) suffix[0][u] = cost(u, n);
  for (int j = 1; j <= m_max; ++j) {
    const std::vector<double>& prev = suffix[j - 1];
    const int t_hi = n - j * delta;
    for (int u = 0; u + (j + 1) * delta <= n; ++u) {
      double best = kInf;
      for (int t = u + delta; t <= t_hi; ++t) {
        if (prev[t] == kInf) continue;
        const double c = cost(u, t) + prev[t];
        if (c < best) best = c;
      }
      suffix[j][u] = best;
    }
  }
  return suffix;
}

// Front-to-back reconstruction.  Choosing the smallest first change-point
// attaining the optimum, then recursing on the suffix, yields the
// lexicographically smallest optimal change-point vector.
template <typename CostFn>
std::vector<int> dp_reconstruct(const CostFn& cost,
                                const std::vector<std::vector<double>>& suffix,
                                int n, int delta, int m) {
  std::vector<int> changepoints;
  changepoints.reserve(m);
  int prev_t = 0;
  for (int k = 1; k <= m; ++k) {
    const int j = m - k;
    const int t_hi = n - (j + 1) * delta;
    double best = kInf;
    int best_t = -1;
    for (int t = prev_t + delta; t <= t_hi; ++t) {
      if (suffix[j][t] == kInf) continue;
      const double c = cost(prev_t, t) + suffix[j][t];
      if (c < best) {
        best = c;
        best_t = t;
      }
    }
    if (best_t < 0)
      throw errors::infeasible_constraints(
          "dp_reconstruct: no feasible segmentation with m = " +
          std::to_string(m));
    changepoints.push_back(best_t);
    prev_t = best_t;
  }
  return changepoints;
}

inline void check_feasible(int n, int m, int delta) {
  if (delta < 1)
    throw errors::invalid_config("min_segment_length must be >= 1");
  if (m < 0) throw errors::invalid_config("m must be >= 0");
  if ((m + 1) * delta > n)
    throw errors::infeasible_constraints(
        "segmentation class is empty: (m+1) * min_segment_length = " +
        std::to_string((m + 1) * delta) + " exceeds n = " + std::to_string(n));
}

}  // namespace detail

// Builds the full fit for a given change-point vector: per-segment means of
// w, recovered series means (unless rho is too close to 1), and the summed
// segment costs.
inline FitResult fit_from_changepoints(const DecorrelatedSeries& w,
                                       const CostMatrix& cm,
                                       std::vector<int> changepoints) {
  FitResult fit;
  fit.segmentation = make_segmentation(w.n(), std::move(changepoints));
  const std::vector<int> bounds = fit.segmentation.boundaries();
  fit.deltas.resize(bounds.size() - 1);
  fit.ss = 0.0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const int u = bounds[k];
    const int v = bounds[k + 1];
    fit.deltas[k] = cm.segment_sum(u, v) / static_cast<double>(v - u);
    fit.ss += cm.segment_cost(u, v);
  }
  if (std::abs(1.0 - w.rho_used) >= kMeanRecoveryThreshold) {
    std::vector<double> means(fit.deltas.size());
    for (std::size_t k = 0; k < means.size(); ++k) {
      means[k] = fit.deltas[k] / (1.0 - w.rho_used);
    }
    fit.means = std::move(means);
  }
  return fit;
}

// Exact minimization of the least-squares criterion over all segmentations
// with m change-points and the given minimum segment length.
inline FitResult dp_segment(const DecorrelatedSeries& w, int m,
                            const SegmentationConstraints& constraints) {
  const int n = w.n();
  const int delta = constraints.min_segment_length;
  detail::check_feasible(n, m, delta);
  const CostMatrix cm(w.values);
  const auto cost = [&cm](int u, int v) { return cm.segment_cost(u, v); };
  const auto suffix = detail::dp_suffix_table(cost, n, delta, m);
  return fit_from_changepoints(
      w, cm, detail::dp_reconstruct(cost, suffix, n, delta, m));
}

// One table pass serving every m = 0..m_max; element m is identical to
// dp_segment(w, m) because suffix rows do not depend on m_max.
inline std::vector<FitResult> dp_segment_all(
    const DecorrelatedSeries& w, const SegmentationConstraints& constraints) {
  const int n = w.n();
  const int delta = constraints.min_segment_length;
  detail::check_feasible(n, constraints.m_max, delta);
  const CostMatrix cm(w.values);
  const auto cost = [&cm](int u, int v) { return cm.segment_cost(u, v); };
  const auto suffix = detail::dp_suffix_table(cost, n, delta, constraints.m_max);
  std::vector<FitResult> fits;
  fits.reserve(constraints.m_max + 1);
  for (int m = 0; m <= constraints.m_max; ++m) {
    fits.push_back(fit_from_changepoints(
        w, cm, detail::dp_reconstruct(cost, suffix, n, delta, m)));
  }
  return fits;
}

// Default candidate ceiling for the number of change-points.
inline int default_m_max(int n) {
  return std::min(75, n / 2 - 1);
}

}  // namespace arseg
