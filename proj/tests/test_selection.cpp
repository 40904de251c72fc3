#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/segmentation.hpp"
#include "arseg/selection.hpp"
#include "arseg/simulation.hpp"
#include "support/helpers.hpp"

using namespace arseg;
using testsupport::make_w;

namespace {

FitResult make_fit(int n, std::vector<int> cps, double ss) {
  FitResult fit;
  fit.segmentation = make_segmentation(n, std::move(cps));
  fit.deltas.assign(fit.segmentation.m() + 1, 0.0);
  fit.ss = ss;
  return fit;
}

}  // namespace

TEST_CASE("penalty resolves the exponent rule and explicit overrides") {
  PenaltyConfig def;
  CHECK_THAT(def.penalty(16), Catch::Matchers::WithinRel(0.5, 1e-15));

  PenaltyConfig exp4;
  exp4.beta_exponent = 0.4;
  CHECK_THAT(exp4.penalty(100),
             Catch::Matchers::WithinRel(std::pow(100.0, -0.4), 1e-15));

  PenaltyConfig both;
  both.beta_exponent = 0.4;
  both.beta_n = 0.125;
  CHECK(both.penalty(100) == 0.125);

  for (double bad : {0.0, 0.5, 0.6, -0.1}) {
    PenaltyConfig cfg;
    cfg.beta_exponent = bad;
    try {
      cfg.penalty(100);
      FAIL("expected InvalidConfig for exponent " << bad);
    } catch (const Error& err) {
      CHECK(err.code() == "InvalidConfig");
    }
  }
  PenaltyConfig zero;
  zero.beta_n = 0.0;
  try {
    zero.penalty(100);
    FAIL("expected InvalidConfig for beta_n = 0");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
}

TEST_CASE("select_beta hand example") {
  const std::vector<FitResult> fits = {
      make_fit(100, {}, 10.0), make_fit(100, {50}, 2.0),
      make_fit(100, {30, 60}, 1.9), make_fit(100, {30, 60, 80}, 1.89)};
  PenaltyConfig cfg;
  cfg.beta_n = 0.05;
  const SelectionTrace trace = select_beta(fits, 100, cfg);
  REQUIRE(trace.criterion_values.size() == 4);
  CHECK_THAT(trace.criterion_values[0], Catch::Matchers::WithinAbs(0.1, 1e-15));
  CHECK_THAT(trace.criterion_values[1], Catch::Matchers::WithinAbs(0.07, 1e-15));
  CHECK_THAT(trace.criterion_values[2], Catch::Matchers::WithinAbs(0.119, 1e-15));
  CHECK_THAT(trace.criterion_values[3],
             Catch::Matchers::WithinAbs(0.1689, 1e-15));
  CHECK(trace.chosen_m == 1);
  CHECK(trace.criterion == Criterion::PenalizedBeta);
  CHECK(trace.chosen_fit.ss == 2.0);
}

TEST_CASE("select_beta extreme penalties pin the two ends") {
  std::vector<FitResult> fits;
  const DecorrelatedSeries w = make_w(testsupport::random_vector(60, 5));
  SegmentationConstraints cons;
  cons.m_max = 6;
  fits = dp_segment_all(w, cons);

  PenaltyConfig huge;
  huge.beta_n = 1e9;
  CHECK(select_beta(fits, 60, huge).chosen_m == 0);

  PenaltyConfig tiny;
  tiny.beta_n = 1e-15;
  CHECK(select_beta(fits, 60, tiny).chosen_m == 6);
}

TEST_CASE("select_beta resolves exact ties to the smaller m") {
  const std::vector<FitResult> fits = {make_fit(4, {}, 2.0),
                                       make_fit(4, {2}, 1.0)};
  PenaltyConfig cfg;
  cfg.beta_n = 0.25;
  const SelectionTrace trace = select_beta(fits, 4, cfg);
  CHECK(trace.criterion_values[0] == trace.criterion_values[1]);
  CHECK(trace.chosen_m == 0);
}

TEST_CASE("select_beta chosen_m is monotone in the penalty") {
  const DecorrelatedSeries w = make_w(testsupport::random_vector(80, 9));
  SegmentationConstraints cons;
  cons.m_max = 8;
  const auto fits = dp_segment_all(w, cons);
  int prev = 9;
  for (double beta : {1e-9, 1e-4, 1e-2, 1.0, 100.0}) {
    PenaltyConfig cfg;
    cfg.beta_n = beta;
    const int chosen = select_beta(fits, 80, cfg).chosen_m;
    CHECK(chosen <= prev);
    prev = chosen;
  }
}

TEST_CASE("select_beta rejects an empty candidate list") {
  try {
    select_beta({}, 10, {});
    FAIL("expected EmptyFits");
  } catch (const Error& err) {
    CHECK(err.code() == "EmptyFits");
  }
}

TEST_CASE("mbic_score matches independently computed values") {
  CHECK_THAT(mbic_score(make_fit(30, {12}, 4.0), 30, 1),
             Catch::Matchers::WithinRel(-1.6920308195639158, 1e-12));
  CHECK_THAT(mbic_score(make_fit(30, {}, 7.5), 30, 0),
             Catch::Matchers::WithinRel(-6.3946810181205676, 1e-12));
  CHECK_THAT(mbic_score(make_fit(100, {30, 75}, 12.25), 100, 2),
             Catch::Matchers::WithinRel(4.1700407199780303, 1e-12));
}

TEST_CASE("mbic_score validates its arguments") {
  try {
    mbic_score(make_fit(30, {12}, 4.0), 30, 2);
    FAIL("expected InvalidConfig");
  } catch (const Error& err) {
    CHECK(err.code() == "InvalidConfig");
  }
  try {
    mbic_score(make_fit(30, {12}, 0.0), 30, 1);
    FAIL("expected ZeroSS");
  } catch (const Error& err) {
    CHECK(err.code() == "ZeroSS");
  }
}

TEST_CASE("select_mbic skips degenerate fits and can recover") {
  const std::vector<FitResult> fits = {make_fit(50, {}, 1e-13),
                                       make_fit(50, {25}, 4.0),
                                       make_fit(50, {20, 35}, 3.9)};
  const SelectionTrace trace = select_mbic(fits, 50);
  CHECK(trace.criterion_values[0] ==
        -std::numeric_limits<double>::infinity());
  CHECK(std::isfinite(trace.criterion_values[1]));
  CHECK(trace.chosen_m >= 1);
}

TEST_CASE("select_mbic rejects an all-degenerate family") {
  const std::vector<FitResult> fits = {make_fit(50, {}, 0.0),
                                       make_fit(50, {25}, 1e-13)};
  try {
    select_mbic(fits, 50);
    FAIL("expected AllDegenerate");
  } catch (const Error& err) {
    CHECK(err.code() == "AllDegenerate");
  }
  try {
    select_mbic({}, 50);
    FAIL("expected EmptyFits");
  } catch (const Error& err) {
    CHECK(err.code() == "EmptyFits");
  }
}

TEST_CASE("both selectors find a clean two-level change") {
  SimulationConfig cfg;
  cfg.n = 200;
  cfg.rho_star = 0.0;
  cfg.sigma_star = 0.3;
  cfg.means = {0.0, 3.0};
  cfg.true_taus = {0.5};
  cfg.seed = 2024;
  const Series y = simulate(cfg);
  const DecorrelatedSeries w = decorrelate(y, 0.0);
  SegmentationConstraints cons;
  cons.m_max = 8;
  const auto fits = dp_segment_all(w, cons);

  const SelectionTrace mbic = select_mbic(fits, w.n());
  CHECK(mbic.chosen_m == 1);
  CHECK(mbic.chosen_fit.segmentation.changepoints == std::vector<int>{100});

  PenaltyConfig pen;
  const SelectionTrace beta = select_beta(fits, w.n(), pen);
  CHECK(beta.chosen_m == 1);
  CHECK(beta.chosen_fit.segmentation.changepoints == std::vector<int>{100});
}
