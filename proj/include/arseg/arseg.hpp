#pragma once

// Umbrella header: change-point detection in the mean of a time series with
// AR(1) noise, via robust autocorrelation estimation, decorrelation, exact
// dynamic-programming segmentation and model selection.

#include "arseg/bardet.hpp"
#include "arseg/benchmark.hpp"
#include "arseg/core.hpp"
#include "arseg/errors.hpp"
#include "arseg/evaluation.hpp"
#include "arseg/io.hpp"
#include "arseg/pipeline.hpp"
#include "arseg/rng.hpp"
#include "arseg/robust_rho.hpp"
#include "arseg/segmentation.hpp"
#include "arseg/selection.hpp"
#include "arseg/simulation.hpp"
#include "arseg/stats.hpp"
