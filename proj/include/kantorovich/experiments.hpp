#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kantorovich/csv.hpp"
#include "kantorovich/image.hpp"
#include "kantorovich/psk1d.hpp"

namespace kantorovich {

/// Test functions selectable by name: expgauss (e^{-x^2}), zero, one.
RealFunction named_function(const std::string& name);

enum class RunMode { Classical, Probabilistic, Both };
RunMode parse_run_mode(const std::string& name);

struct Approx1dConfig {
    std::string function = "expgauss";
    Domain1D domain{};
    std::vector<int> densities{5, 15, 25, 35, 45};
    std::string kernel = "box";
    Quadrature quadrature{};
    NoiseModel noise{};
    int trials = 100;
    RunMode mode = RunMode::Both;

    std::vector<std::string> describe() const;
};

struct Approx1dOutput {
    CsvTable summary;  ///< mode, n, l1_error, max_error, min_error, discrete_mean_error, ...
    CsvTable curves;   ///< x, f, sk_n5, ..., psk_n5, ... (trial 0 realization)
};

Approx1dOutput run_approx1d(const Approx1dConfig& cfg);

struct ImageRunConfig {
    std::string input;  ///< empty selects the synthetic test image
    std::vector<int> windows{3, 7, 15};
    RunMode mode = RunMode::Classical;
    NoiseModel noise{0.02, NoisePlacement::PerSample, 42, NoiseSchedule::Fixed};
    int trials = 100;
    SsimConfig ssim{};

    std::vector<std::string> describe() const;
};

struct ImageRunOutput {
    CsvTable report;
    /// (file name, image) pairs to be written as PGM.
    std::vector<std::pair<std::string, GrayImage>> images;
};

ImageRunOutput run_image(const ImageRunConfig& cfg, const GrayImage& input);

struct Table1Row {
    int n = 0;
    std::optional<double> reference_classical;
    std::optional<double> reference_probabilistic;
    double classical = 0.0;
    MonteCarloEstimate probabilistic;
    std::optional<bool> within_band;
    bool decreasing = true;              ///< classical < previous row's classical
    bool probabilistic_above = false;    ///< mean - 3 se > classical
};

struct WindowRow {
    int window = 0;
    MetricsReport metrics;
};

struct ReproduceConfig {
    std::uint64_t seed = 42;
    int table1_trials = 2000;
    int table3_trials = 100;
    double noise_std = 0.02;
    std::vector<int> windows{3, 7, 15};
    std::string image;  ///< empty selects the synthetic test image
    SsimConfig ssim{};

    std::vector<std::string> describe() const;
};

std::vector<Table1Row> run_table1(const ReproduceConfig& cfg);
std::vector<WindowRow> run_table2(const ReproduceConfig& cfg, const GrayImage& img);
std::vector<WindowRow> run_table3(const ReproduceConfig& cfg, const GrayImage& img);

CsvTable table1_csv(const std::vector<Table1Row>& rows, const ReproduceConfig& cfg);
CsvTable table2_csv(const std::vector<WindowRow>& rows, const ReproduceConfig& cfg);
CsvTable table3_csv(const std::vector<WindowRow>& rows, const ReproduceConfig& cfg);

struct ReproduceOutcome {
    bool table1_band = false;
    bool table1_decreasing = false;
    bool table1_probabilistic_above = false;
    bool table2_trends = false;
    bool table3_variance_decreasing = false;

    bool all_pass() const;
};

/// Writes table1.csv, table2.csv, table3.csv, the test image and the
/// reconstructions into out_dir.
ReproduceOutcome reproduce_tables(const ReproduceConfig& cfg, const std::string& out_dir);

template <typename T, typename Less>
bool strictly_ordered(const std::vector<T>& values, Less less) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!less(values[i - 1], values[i])) return false;
    return true;
}

}  // namespace kantorovich
