#pragma once

#include <cstddef>
#include <vector>

#include "kantorovich/metrics.hpp"
#include "kantorovich/psk1d.hpp"

namespace kantorovich {

/// Row-major grayscale image. Loaded images live in [0, 1]; noisy
/// intermediates may leave that range.
struct GrayImage {
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int h, int w, double fill = 0.0);
    GrayImage(int h, int w, std::vector<double> values);

    std::size_t size() const noexcept { return pixels.size(); }
    double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
    void validate() const;
};

/// Side of the square averaging block.
struct WindowSpec {
    int w = 1;

    void validate_for(int height, int width) const;
};

/// One coefficient per (possibly partial) w x w block.
struct BlockCoefficients {
    int height = 0;
    int width = 0;
    int window = 1;
    int block_rows = 0;
    int block_cols = 0;
    std::vector<double> values;

    double at(int br, int bc) const { return values[static_cast<std::size_t>(br) * block_cols + bc]; }
};

BlockCoefficients block_means(const GrayImage& img, WindowSpec win);
GrayImage reconstruct_sk(const BlockCoefficients& coeffs, WindowSpec win, int height, int width);

/// block_means followed by reconstruct_sk.
GrayImage apply_sk_image(const GrayImage& img, WindowSpec win);

GrayImage add_pixel_noise(const GrayImage& img, const NoiseModel& noise, const TrialContext& trial);
GrayImage apply_psk_image(const GrayImage& img, WindowSpec win, const NoiseModel& noise,
                          const TrialContext& trial);

MetricsReport reconstruction_metrics(const GrayImage& original, const GrayImage& reconstructed,
                                     const SsimConfig& cfg = {});

MetricsReport expected_reconstruction_metrics(const GrayImage& img, WindowSpec win, const NoiseModel& noise,
                                              int trials, const SsimConfig& cfg = {});

/// Deterministic 256x256 test scene: smooth gradient with a slow horizontal
/// ripple, a bright rectangle with sharp edges, and a high-frequency texture patch.
GrayImage synthetic_test_image(int size = 256);

}  // namespace kantorovich
