#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "kantorovich/monte_carlo.hpp"

namespace kantorovich {

struct GrayImage;

inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

enum class SsimWindow { Gaussian11, Uniform };

/// Local-statistics configuration for SSIM. C1 = (k1 L)^2, C2 = (k2 L)^2.
struct SsimConfig {
    SsimWindow window = SsimWindow::Gaussian11;
    int uniform_side = 8;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    double peak = 1.0;

    double c1() const { return (k1 * peak) * (k1 * peak); }
    double c2() const { return (k2 * peak) * (k2 * peak); }
    int side() const { return window == SsimWindow::Gaussian11 ? 11 : uniform_side; }

    static SsimConfig parse(std::string_view window_name, double peak);
};

struct ExpectedBlock {
    int trials = 0;
    double psnr_std_error = 0.0;
    double ssim_std_error = 0.0;
    double mae_std_error = 0.0;
    double mse_std_error = 0.0;
    /// Per-pixel variance of |P - f| across trials, averaged over pixels.
    double var_abs_err_noise = 0.0;
};

struct MetricsReport {
    double mae = 0.0;
    double mse = 0.0;
    double psnr = kInfinitePsnr;
    double ssim = 1.0;
    /// Variance of |P - f| pooled over every pixel (and every trial).
    double var_abs_err = 0.0;
    std::optional<ExpectedBlock> expected;
};

double mae(const GrayImage& f, const GrayImage& g);
double mse(const GrayImage& f, const GrayImage& g);
double psnr_from_mse(double mse, double peak);
double psnr(const GrayImage& f, const GrayImage& g, double peak = 1.0);

/// Mean of the sliding-window SSIM map over all positions where the window
/// fits inside the image.
double ssim(const GrayImage& f, const GrayImage& g, const SsimConfig& cfg = {});
/// The whole image treated as a single window.
double ssim_global(const GrayImage& f, const GrayImage& g, const SsimConfig& cfg = {});

/// Population variance E[X^2] - (E[X])^2 of absolute errors.
double variance_abs_error(std::span<const double> abs_errors);

/// Mean and standard error across trials; throws DegenerateTrial on +inf.
MonteCarloEstimate expected_metric(std::span<const double> per_trial_values);

}  // namespace kantorovich
