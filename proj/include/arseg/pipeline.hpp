#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "arseg/bardet.hpp"
#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/evaluation.hpp"
#include "arseg/robust_rho.hpp"
#include "arseg/segmentation.hpp"
#include "arseg/selection.hpp"

namespace arseg {

enum class DetectMethod { Robust, MG, Fixed, Zero, Bardet };

struct DetectOptions {
  DetectMethod method = DetectMethod::Robust;
  double fixed_rho = 0.0;      // used by DetectMethod::Fixed
  int bardet_m = -1;           // required by DetectMethod::Bardet
  bool use_mbic = true;
  PenaltyConfig penalty;       // used when use_mbic is false
  int m_max = -1;              // -1 selects default_m_max(n)
  int min_segment_length = 1;
  bool apply_postprocess = true;
  bool with_diagnostics = false;
  int lags = 20;
};

struct StageTimings {
  double rho_ms = 0.0;
  double segmentation_ms = 0.0;
  double selection_ms = 0.0;
  double total_ms = 0.0;
};

struct DetectReport {
  int n = 0;
  std::optional<RhoEstimate> rho;  // absent for the Bardet baseline
  Criterion criterion = Criterion::MBIC;
  std::vector<double> criterion_values;  // empty when m was fixed
  int chosen_m = 0;
  std::vector<int> changepoints_raw;
  std::vector<int> changepoints_pp;
  std::vector<double> deltas;
  std::optional<std::vector<double>> means;
  double ss = 0.0;
  std::vector<BardetSegmentFit> bardet_fits;  // Bardet baseline only
  std::optional<DiagnosticsReport> diagnostics;
  StageTimings timings;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

inline DetectReport detect_bardet(const Series& series,
                                  const DetectOptions& options) {
  if (options.bardet_m < 0)
    throw errors::invalid_config(
        "detect: the bardet method needs a fixed change-point count (--m)");
  if (options.with_diagnostics)
    throw errors::invalid_config(
        "detect: diagnostics are not defined for the bardet baseline");
  DetectReport report;
  report.n = series.n;
  report.chosen_m = options.bardet_m;
  const auto t0 = std::chrono::steady_clock::now();
  const int min_len = std::max(3, options.min_segment_length);
  Segmentation seg = bardet_segment(series, options.bardet_m, min_len);
  report.timings.segmentation_ms = detail::elapsed_ms(t0);
  report.changepoints_raw = seg.changepoints;
  const Segmentation final_seg =
      options.apply_postprocess ? postprocess(seg) : seg;
  report.changepoints_pp = final_seg.changepoints;
  report.bardet_fits = bardet_fit_segments(series, final_seg);
  bool means_defined = true;
  std::vector<double> means;
  report.ss = 0.0;
  for (const BardetSegmentFit& f : report.bardet_fits) {
    report.deltas.push_back(f.delta_k);
    report.ss += f.cost;
    if (std::abs(1.0 - f.rho_k) < kMeanRecoveryThreshold) {
      means_defined = false;
    } else {
      means.push_back(f.delta_k / (1.0 - f.rho_k));
    }
  }
  if (means_defined) report.means = std::move(means);
  report.timings.total_ms = detail::elapsed_ms(t0);
  return report;
}

}  // namespace detail

// Full detection pipeline: estimate rho, decorrelate, segment exactly for
// every m, select m, post-process, refit, optionally run diagnostics.
inline DetectReport detect(const Series& series, const DetectOptions& options) {
  if (options.method == DetectMethod::Bardet)
    return detail::detect_bardet(series, options);

  DetectReport report;
  report.n = series.n;
  const auto t_start = std::chrono::steady_clock::now();

  switch (options.method) {
    case DetectMethod::Robust:
      report.rho = estimate_rho_tilde(series);
      break;
    case DetectMethod::MG:
      report.rho = estimate_rho_mg(series);
      break;
    case DetectMethod::Fixed:
      report.rho = make_rho_estimate(options.fixed_rho, RhoMethod::Fixed);
      break;
    case DetectMethod::Zero:
      report.rho = make_rho_estimate(0.0, RhoMethod::Fixed);
      break;
    case DetectMethod::Bardet:
      break;  // handled above
  }
  report.timings.rho_ms = detail::elapsed_ms(t_start);

  const DecorrelatedSeries w = decorrelate(series, report.rho->clamped_value);
  SegmentationConstraints constraints;
  constraints.min_segment_length = options.min_segment_length;
  constraints.m_max =
      options.m_max >= 0 ? options.m_max : default_m_max(w.n());

  const auto t_dp = std::chrono::steady_clock::now();
  const std::vector<FitResult> fits = dp_segment_all(w, constraints);
  report.timings.segmentation_ms = detail::elapsed_ms(t_dp);

  const auto t_sel = std::chrono::steady_clock::now();
  const SelectionTrace trace = options.use_mbic
                                   ? select_mbic(fits, w.n())
                                   : select_beta(fits, w.n(), options.penalty);
  report.timings.selection_ms = detail::elapsed_ms(t_sel);
  report.criterion = trace.criterion;
  report.criterion_values = trace.criterion_values;
  report.chosen_m = trace.chosen_m;
  report.changepoints_raw = trace.chosen_fit.segmentation.changepoints;

  FitResult final_fit = trace.chosen_fit;
  if (options.apply_postprocess) {
    const Segmentation pruned = postprocess(trace.chosen_fit.segmentation);
    if (pruned.m() != trace.chosen_fit.segmentation.m()) {
      final_fit =
          fit_from_changepoints(w, CostMatrix(w.values), pruned.changepoints);
    }
  }
  report.changepoints_pp = final_fit.segmentation.changepoints;
  report.deltas = final_fit.deltas;
  report.means = final_fit.means;
  report.ss = final_fit.ss;

  if (options.with_diagnostics) {
    report.diagnostics = residual_diagnostics(
        series, final_fit, report.rho->clamped_value, options.lags);
  }
  report.timings.total_ms = detail::elapsed_ms(t_start);
  return report;
}

}  // namespace arseg
