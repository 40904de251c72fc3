#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"

namespace arseg {

// Fits at or below this sum of squares are treated as degenerate by the
// mBIC selector (its log term is undefined at zero).
inline constexpr double kDegenerateSS = 1e-12;

enum class Criterion { PenalizedBeta, MBIC };

inline const char* criterion_name(Criterion c) {
  return c == Criterion::PenalizedBeta ? "PenalizedBeta" : "MBIC";
}

// Penalty beta_n for the penalized least-squares selector: either n^(-beta)
// with beta in (0, 1/2), or an explicit positive value.
struct PenaltyConfig {
  std::optional<double> beta_exponent;
  std::optional<double> beta_n;

  double penalty(int n) const {
    if (beta_n.has_value()) {
      if (!(*beta_n > 0.0))
        throw errors::invalid_config("PenaltyConfig: beta_n must be positive");
      return *beta_n;
    }
    const double exponent = beta_exponent.value_or(0.25);
    if (!(exponent > 0.0 && exponent < 0.5))
      throw errors::invalid_config(
          "PenaltyConfig: beta_exponent must lie in (0, 0.5)");
    return std::pow(static_cast<double>(n), -exponent);
  }
};

struct SelectionTrace {
  std::vector<double> criterion_values;
  int chosen_m = 0;
  FitResult chosen_fit;
  Criterion criterion = Criterion::MBIC;
};

// Penalized least-squares selection: minimize SS_m / n + beta_n * m over the
// candidate fits, ties to the smaller m.
inline SelectionTrace select_beta(const std::vector<FitResult>& fits, int n,
                                  const PenaltyConfig& cfg) {
  if (fits.empty()) throw errors::empty_fits("select_beta: no candidate fits");
  const double beta_n = cfg.penalty(n);
  SelectionTrace trace;
  trace.criterion = Criterion::PenalizedBeta;
  trace.criterion_values.resize(fits.size());
  for (std::size_t m = 0; m < fits.size(); ++m) {
    trace.criterion_values[m] =
        fits[m].ss / static_cast<double>(n) + beta_n * static_cast<double>(m);
    if (trace.criterion_values[m] < trace.criterion_values[trace.chosen_m]) {
      trace.chosen_m = static_cast<int>(m);
    }
  }
  trace.chosen_fit = fits[trace.chosen_m];
  return trace;
}

// Modified BIC score of one fit; larger is better.  Natural logarithms
// throughout; segment lengths are taken from the fit itself.
inline double mbic_score(const FitResult& fit, int n, int m) {
  if (fit.segmentation.m() != m)
    throw errors::invalid_config(
        "mbic_score: m = " + std::to_string(m) +
        " does not match the fit's change-point count");
  if (!(fit.ss > 0.0))
    throw errors::zero_ss("mbic_score: sum of squares must be positive");
  const double half = 0.5 * static_cast<double>(n - m + 1);
  double log_length_sum = 0.0;
  for (int length : fit.segmentation.segment_lengths()) {
    log_length_sum += std::log(static_cast<double>(length));
  }
  return -half * std::log(fit.ss) + std::lgamma(half) -
         0.5 * log_length_sum - static_cast<double>(m) * std::log(n);
}

// mBIC selection: maximize the score over the candidate fits, ties to the
// smaller m.  Degenerate fits (ss below kDegenerateSS) score -infinity.
inline SelectionTrace select_mbic(const std::vector<FitResult>& fits, int n) {
  if (fits.empty()) throw errors::empty_fits("select_mbic: no candidate fits");
  SelectionTrace trace;
  trace.criterion = Criterion::MBIC;
  trace.criterion_values.resize(fits.size());
  bool any_finite = false;
  for (std::size_t m = 0; m < fits.size(); ++m) {
    if (fits[m].ss <= kDegenerateSS) {
      trace.criterion_values[m] = -std::numeric_limits<double>::infinity();
    } else {
      trace.criterion_values[m] = mbic_score(fits[m], n, static_cast<int>(m));
      any_finite = true;
    }
    if (trace.criterion_values[m] > trace.criterion_values[trace.chosen_m]) {
      trace.chosen_m = static_cast<int>(m);
    }
  }
  if (!any_finite)
    throw errors::all_degenerate(
        "select_mbic: every candidate fit is degenerate (ss ~ 0)");
  trace.chosen_fit = fits[trace.chosen_m];
  return trace;
}

}  // namespace arseg
