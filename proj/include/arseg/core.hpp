#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arseg/errors.hpp"

namespace arseg {

// Mean recovery divides by 1 - rho; below this margin the division is
// meaningless and means are reported as absent.
inline constexpr double kMeanRecoveryThreshold = 1e-6;

// Observations y_0..y_n.  n counts transitions, so n = values.size() - 1.
struct Series {
  std::vector<double> values;
  int n = 0;
};

inline Series validate_series(std::vector<double> raw) {
  if (raw.size() < 3) throw errors::too_short("series", raw.size(), 3);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) throw errors::non_finite("series", i);
  }
  Series s;
  s.n = static_cast<int>(raw.size()) - 1;
  s.values = std::move(raw);
  return s;
}

// Interior change-points 0 < t_1 < ... < t_m < n.  Sentinels t_0 = 0 and
// t_{m+1} = n are implicit; segment k covers indices t_k+1..t_{k+1}.
struct Segmentation {
  int n = 0;
  std::vector<int> changepoints;

  int m() const { return static_cast<int>(changepoints.size()); }

  // Segment boundaries including both sentinels: [0, t_1, ..., t_m, n].
  std::vector<int> boundaries() const {
    std::vector<int> b;
    b.reserve(changepoints.size() + 2);
    b.push_back(0);
    b.insert(b.end(), changepoints.begin(), changepoints.end());
    b.push_back(n);
    return b;
  }

  std::vector<int> segment_lengths() const {
    const std::vector<int> b = boundaries();
    std::vector<int> lengths(b.size() - 1);
    for (std::size_t k = 0; k + 1 < b.size(); ++k) lengths[k] = b[k + 1] - b[k];
    return lengths;
  }
};

inline Segmentation make_segmentation(int n, std::vector<int> changepoints) {
  if (n < 1) throw errors::invalid_config("segmentation: n must be positive");
  int prev = 0;
  for (int t : changepoints) {
    if (t <= prev || t >= n)
      throw errors::invalid_config(
          "segmentation: changepoints must satisfy 0 < t_1 < ... < t_m < " +
          std::to_string(n));
    prev = t;
  }
  Segmentation s;
  s.n = n;
  s.changepoints = std::move(changepoints);
  return s;
}

// w_i = y_i - rho * y_{i-1} for i = 1..n; one element shorter than the source.
struct DecorrelatedSeries {
  std::vector<double> values;
  double rho_used = 0.0;

  int n() const { return static_cast<int>(values.size()); }
};

inline DecorrelatedSeries decorrelate(const Series& series, double rho) {
  if (!std::isfinite(rho))
    throw errors::out_of_domain("decorrelate: rho must be finite");
  DecorrelatedSeries w;
  w.rho_used = rho;
  w.values.resize(series.values.size() - 1);
  for (std::size_t i = 1; i < series.values.size(); ++i) {
    w.values[i - 1] = series.values[i] - rho * series.values[i - 1];
  }
  return w;
}

// A segmentation of the decorrelated series together with per-segment
// intercepts (means of w over each segment), recovered series means where
// defined, and the minimized sum of squared residuals.
struct FitResult {
  Segmentation segmentation;
  std::vector<double> deltas;
  std::optional<std::vector<double>> means;
  double ss = 0.0;

  bool means_suppressed() const { return !means.has_value(); }
};

}  // namespace arseg
