#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arseg {

// Base class for every error thrown by the library.  Each error carries a
// stable machine-readable code alongside the human-readable message; the CLI
// forwards the code verbatim in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Input data is structurally unusable (too short, non-finite, empty, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A requested computation has no defined answer for the given input
// (degenerate scale, all-degenerate fits, infeasible constraints, ...).
class ComputationError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration supplied by the caller (bad penalty exponent,
// malformed benchmark config, out-of-range arguments, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

namespace errors {

inline InputError too_short(const std::string& what, std::size_t length,
                            std::size_t required) {
  return InputError("TooShort", what + ": length " + std::to_string(length) +
                                    " is below the minimum of " +
                                    std::to_string(required));
}

inline InputError non_finite(const std::string& what, std::size_t index) {
  return InputError("NonFinite", what + ": non-finite value at index " +
                                     std::to_string(index));
}

inline InputError empty_input(const std::string& what) {
  return InputError("EmptyInput", what + ": input is empty");
}

inline InputError too_few_values(const std::string& what, std::size_t length,
                                 std::size_t required) {
  return InputError("TooFewValues", what + ": need at least " +
                                        std::to_string(required) +
                                        " values, got " +
                                        std::to_string(length));
}

inline ComputationError degenerate_median(const std::string& what) {
  return ComputationError("DegenerateMedian", what);
}

inline ComputationError degenerate_scale(const std::string& what) {
  return ComputationError("DegenerateScale", what);
}

inline ComputationError degenerate_regressor(const std::string& what) {
  return ComputationError("DegenerateRegressor", what);
}

inline ComputationError degenerate_residuals(const std::string& what) {
  return ComputationError("DegenerateResiduals", what);
}

inline ComputationError infeasible_constraints(const std::string& what) {
  return ComputationError("InfeasibleConstraints", what);
}

inline ComputationError empty_fits(const std::string& what) {
  return ComputationError("EmptyFits", what);
}

inline ComputationError zero_ss(const std::string& what) {
  return ComputationError("ZeroSS", what);
}

inline ComputationError all_degenerate(const std::string& what) {
  return ComputationError("AllDegenerate", what);
}

inline ConfigError out_of_domain(const std::string& what) {
  return ConfigError("OutOfDomain", what);
}

inline ConfigError index_out_of_range(const std::string& what) {
  return ConfigError("IndexOutOfRange", what);
}

inline ConfigError invalid_config(const std::string& what) {
  return ConfigError("InvalidConfig", what);
}

inline InputError parse_error(const std::string& what) {
  return InputError("ParseError", what);
}

}  // namespace errors
}  // namespace arseg
