#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "arseg/errors.hpp"

namespace arseg {

// Median of an unordered sample; even lengths average the two middle order
// statistics.  Takes its argument by value because selection is destructive.
inline double median(std::vector<double> values) {
  if (values.empty()) throw errors::empty_input("median");
  const std::size_t n = values.size();
  const std::size_t k = n / 2;
  std::nth_element(values.begin(), values.begin() + k, values.end());
  const double upper = values[k];
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + k);
  return 0.5 * (lower + upper);
}

inline double mean(const std::vector<double>& values) {
  if (values.empty()) throw errors::empty_input("mean");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

// Unbiased sample variance (n - 1 denominator).
inline double sample_variance(const std::vector<double>& values) {
  if (values.size() < 2)
    throw errors::too_few_values("sample_variance", values.size(), 2);
  const double m = mean(values);
  double s = 0.0;
  for (double v : values) {
    const double d = v - m;
    s += d * d;
  }
  return s / static_cast<double>(values.size() - 1);
}

// Linear-interpolation quantile on a sorted sample (the common "type 7"
// convention: h = (n - 1) p).
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw errors::empty_input("quantile_sorted");
  if (!(p >= 0.0 && p <= 1.0))
    throw errors::out_of_domain("quantile_sorted: p must lie in [0, 1]");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

// Standard normal CDF.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Standard normal quantile, accurate to full double precision on (0, 1)
// (Wichura's rational approximation).  Used by the deterministic RNG so that
// normal deviates are a pure function of the underlying uniform stream.
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw errors::out_of_domain("normal_quantile: p must lie in (0, 1)");
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) *
                    r +
                4.5921953931549871457e+4) *
                   r +
               1.3731693765509461125e+4) *
                  r +
              1.9715909503065514427e+3) *
                 r +
             1.3314166789178437745e+2) *
                r +
            3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) *
                    r +
                2.1213794301586595867e+4) *
                   r +
               5.3941960214247511077e+3) *
                  r +
              6.8718700749205790830e+2) *
                 r +
             4.2313330701600911252e+1) *
                r +
            1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e+0) *
                r +
            3.64784832476320460504e+0) *
               r +
           5.76949722146069140550e+0) *
              r +
          4.63033784615654529590e+0) *
             r +
         1.42343711074968357734e+0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e+0) *
              r +
          2.05319162663775882187e+0) *
             r +
         1.0);
  } else {
    r -= 5.0;
    value =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e+0) *
              r +
          5.46378491116411436990e+0) *
             r +
         6.65790464350110377720e+0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                  r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
  }
  return q < 0.0 ? -value : value;
}

// Chi-squared survival function P(X > x) for integer degrees of freedom,
// built from the exact two-step recurrence Q(nu + 2) = Q(nu) + term(nu) with
// closed forms at nu = 1 and nu = 2.  Terms are evaluated in log space so
// large x degrades to 0 without overflow.
inline double chi_squared_sf(double x, int dof) {
  if (dof < 1) throw errors::out_of_domain("chi_squared_sf: dof must be >= 1");
  if (!(x >= 0.0)) throw errors::out_of_domain("chi_squared_sf: x must be >= 0");
  if (x == 0.0) return 1.0;
  const double half = 0.5 * x;
  double q;
  int nu;
  if (dof % 2 == 1) {
    q = std::erfc(std::sqrt(half));
    nu = 1;
  } else {
    q = std::exp(-half);
    nu = 2;
  }
  const double log_half = std::log(half);
  for (; nu + 2 <= dof; nu += 2) {
    q += std::exp(0.5 * nu * log_half - half - std::lgamma(0.5 * nu + 1.0));
  }
  return std::min(q, 1.0);
}

// Sample autocorrelation at lag h, normalised by the lag-0 sum of squares.
inline double sample_autocorrelation(const std::vector<double>& values,
                                     std::size_t lag) {
  if (values.size() < 2)
    throw errors::too_few_values("sample_autocorrelation", values.size(), 2);
  if (lag >= values.size())
    throw errors::out_of_domain("sample_autocorrelation: lag exceeds length");
  const double m = mean(values);
  double denom = 0.0;
  for (double v : values) {
    const double d = v - m;
    denom += d * d;
  }
  if (denom <= 0.0)
    throw errors::degenerate_scale("sample_autocorrelation: constant input");
  double num = 0.0;
  for (std::size_t i = 0; i + lag < values.size(); ++i) {
    num += (values[i] - m) * (values[i + lag] - m);
  }
  return num / denom;
}

}  // namespace arseg
