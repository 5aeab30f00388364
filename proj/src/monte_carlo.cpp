#include "kantorovich/monte_carlo.hpp"

#include <cmath>

#include "kantorovich/error.hpp"

namespace kantorovich {

MonteCarloEstimate summarize_trials(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("Monte Carlo estimate needs at least one trial");
    const auto count = static_cast<double>(values.size());
    // Shifted by the first value so that identical inputs reproduce it exactly.
    const double shift = values.front();
    double sum = 0.0;
    for (double v : values) sum += v - shift;
    const double mean = shift + sum / count;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    MonteCarloEstimate est;
    est.mean = mean;
    est.trials = static_cast<int>(values.size());
    est.std_error = values.size() > 1 ? std::sqrt(ss / (count - 1.0)) / std::sqrt(count) : 0.0;
    return est;
}

}  // namespace kantorovich
