#pragma once

#include <span>

namespace kantorovich {

/// Sample mean of a Monte Carlo experiment and its standard error
/// (sample standard deviation / sqrt(trials)).
struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

/// Accumulates in index order, so the result depends only on the values.
MonteCarloEstimate summarize_trials(std::span<const double> values);

}  // namespace kantorovich
