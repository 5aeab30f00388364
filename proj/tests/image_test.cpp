#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kantorovich/error.hpp"
#include "kantorovich/image.hpp"
#include "kantorovich/parallel.hpp"
#include "oracles.hpp"

namespace kantorovich {
namespace {

NoiseModel pixel_noise(double std, std::uint64_t seed = 42) {
    return {std, NoisePlacement::PerSample, seed, NoiseSchedule::Fixed};
}

double pixel_sum(const GrayImage& img) {
    double s = 0.0;
    for (double v : img.pixels) s += v;
    return s;
}

TEST(BlockMeansTest, ConstantImage) {
    const GrayImage img(10, 7, 0.42);
    const auto coeffs = block_means(img, {3});
    EXPECT_EQ(coeffs.block_rows, 4);
    EXPECT_EQ(coeffs.block_cols, 3);
    for (double v : coeffs.values) EXPECT_NEAR(v, 0.42, 1e-15);
}

TEST(BlockMeansTest, TwoByTwo) {
    const GrayImage img(2, 2, {0.0, 0.2, 0.4, 0.6});
    const auto coeffs = block_means(img, {2});
    ASSERT_EQ(coeffs.values.size(), 1u);
    EXPECT_NEAR(coeffs.values[0], 0.3, 1e-15);
}

TEST(BlockMeansTest, PartialBoundaryBlocks) {
    // 0.1 0.2 0.3 / 0.4 0.5 0.6 / 0.7 0.8 0.9
    const GrayImage img(3, 3, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    const auto coeffs = block_means(img, {2});
    ASSERT_EQ(coeffs.block_rows, 2);
    ASSERT_EQ(coeffs.block_cols, 2);
    EXPECT_NEAR(coeffs.at(0, 0), (0.1 + 0.2 + 0.4 + 0.5) / 4.0, 1e-15);
    EXPECT_NEAR(coeffs.at(0, 1), (0.3 + 0.6) / 2.0, 1e-15);
    EXPECT_NEAR(coeffs.at(1, 0), (0.7 + 0.8) / 2.0, 1e-15);
    EXPECT_NEAR(coeffs.at(1, 1), 0.9, 1e-15);
}

TEST(BlockMeansTest, WindowValidation) {
    const GrayImage img(8, 5, 0.0);
    EXPECT_THROW(block_means(img, {0}), InvalidArgument);
    EXPECT_THROW(block_means(img, {6}), InvalidArgument);
    EXPECT_NO_THROW(block_means(img, {5}));
}

TEST(ReconstructTest, WindowOneIsIdentity) {
    std::mt19937_64 rng(1);
    const GrayImage img = oracle::random_image(13, 9, rng);
    EXPECT_EQ(apply_sk_image(img, {1}).pixels, img.pixels);
}

TEST(ReconstructTest, ConstantUnchanged) {
    const GrayImage img(12, 12, 0.25);
    EXPECT_EQ(apply_sk_image(img, {5}).pixels, img.pixels);
}

TEST(ReconstructTest, DimensionMismatch) {
    const GrayImage img(8, 8, 0.5);
    const auto coeffs = block_means(img, {3});
    EXPECT_THROW(reconstruct_sk(coeffs, {3}, 9, 8), ShapeMismatch);
    EXPECT_THROW(reconstruct_sk(coeffs, {2}, 8, 8), ShapeMismatch);
}

TEST(ReconstructTest, IdempotentProjection) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage img = oracle::random_image(16, 16, rng);
        for (int w : {2, 3, 5, 16}) {
            const GrayImage once = apply_sk_image(img, {w});
            const GrayImage twice = apply_sk_image(once, {w});
            for (std::size_t i = 0; i < img.size(); ++i) ASSERT_NEAR(once.pixels[i], twice.pixels[i], 1e-12);
        }
    }
}

TEST(ReconstructTest, MatchesPerPixelOracle) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage img = oracle::random_image(16, 16, rng);
        for (int w : {1, 3, 4, 7}) {
            const GrayImage fast = apply_sk_image(img, {w});
            const GrayImage slow = oracle::naive_block_average(img, w);
            for (std::size_t i = 0; i < img.size(); ++i) ASSERT_NEAR(fast.pixels[i], slow.pixels[i], 1e-12);
        }
    }
}

TEST(ReconstructTest, MassPreservation) {
    std::mt19937_64 rng(5);
    for (auto [h, w, win] : {std::tuple{16, 16, 4}, std::tuple{17, 23, 4}, std::tuple{31, 12, 7}}) {
        const GrayImage img = oracle::random_image(h, w, rng);
        EXPECT_NEAR(pixel_sum(apply_sk_image(img, {win})), pixel_sum(img), 1e-10);
    }
}

TEST(ReconstructTest, StaysInRange) {
    std::mt19937_64 rng(6);
    const GrayImage img = oracle::random_image(40, 33, rng);
    for (int w : {2, 5, 9})
        for (double v : apply_sk_image(img, {w}).pixels) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
}

TEST(ReconstructTest, SyntheticImageDegradesMonotonically) {
    const GrayImage img = synthetic_test_image();
    const double m3 = mae(img, apply_sk_image(img, {3}));
    const double m7 = mae(img, apply_sk_image(img, {7}));
    const double m15 = mae(img, apply_sk_image(img, {15}));
    EXPECT_LE(m3, m7);
    EXPECT_LE(m7, m15);
}

TEST(PskImageTest, ZeroNoiseEqualsClassical) {
    const GrayImage img = synthetic_test_image(64);
    for (int w : {1, 3, 8}) EXPECT_EQ(apply_psk_image(img, {w}, pixel_noise(0.0), {4}).pixels, apply_sk_image(img, {w}).pixels);
}

TEST(PskImageTest, SingleBlockAveragesTheNoise) {
    const GrayImage img(8, 8, 0.5);
    const auto out = apply_psk_image(img, {8}, pixel_noise(0.02, 3), {9});
    const NoiseStream stream(3, 9);
    double noise_mean = 0.0;
    for (std::uint64_t i = 0; i < 64; ++i) noise_mean += 0.02 * stream.standard_normal(i);
    noise_mean /= 64.0;
    for (double v : out.pixels) EXPECT_NEAR(v, 0.5 + noise_mean, 1e-12);
}

TEST(PskImageTest, MatchesOracleWithSharedStream) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        const GrayImage img = oracle::random_image(16, 16, rng);
        for (int w : {2, 3, 5}) {
            const auto fast = apply_psk_image(img, {w}, pixel_noise(0.02, 100), {static_cast<std::uint64_t>(trial)});
            GrayImage noisy = img;
            const NoiseStream stream(100, static_cast<std::uint64_t>(trial));
            for (int r = 0; r < 16; ++r)
                for (int c = 0; c < 16; ++c)
                    noisy.at(r, c) += 0.02 * stream.standard_normal(static_cast<std::uint64_t>(r * 16 + c));
            const auto slow = oracle::naive_block_average(noisy, w);
            for (std::size_t i = 0; i < img.size(); ++i) ASSERT_NEAR(fast.pixels[i], slow.pixels[i], 1e-12);
        }
    }
}

TEST(PskImageTest, RequiresPerSamplePlacement) {
    NoiseModel noise = pixel_noise(0.02);
    noise.placement = NoisePlacement::PerCell;
    EXPECT_THROW(apply_psk_image(GrayImage(4, 4, 0.0), {2}, noise, {}), InvalidArgument);
}

TEST(PskImageTest, NoiseAveragingVariance) {
    const int side = 64, w = 4, trials = 50;
    const double tau = 0.02;
    std::vector<double> block_values;
    for (int t = 0; t < trials; ++t) {
        const auto out = apply_psk_image(GrayImage(side, side, 0.0), {w}, pixel_noise(tau, 12), {static_cast<std::uint64_t>(t)});
        for (int r = 0; r < side; r += w)
            for (int c = 0; c < side; c += w) block_values.push_back(out.at(r, c));
    }
    const auto n = static_cast<double>(block_values.size());
    double mean = 0.0;
    for (double v : block_values) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : block_values) var += (v - mean) * (v - mean);
    var /= n - 1.0;
    const double expected = tau * tau / (w * w);
    EXPECT_NEAR(var, expected, 4.0 * expected * std::sqrt(2.0 / n));
}

TEST(ExpectedMetricsTest, NoNoiseIdentityWindow) {
    const GrayImage img = synthetic_test_image(32);
    const auto rep = expected_reconstruction_metrics(img, {1}, pixel_noise(0.0), 2);
    EXPECT_EQ(rep.mae, 0.0);
    EXPECT_EQ(rep.ssim, 1.0);
    EXPECT_TRUE(std::isinf(rep.psnr));
    ASSERT_TRUE(rep.expected.has_value());
    EXPECT_EQ(rep.expected->trials, 2);
    EXPECT_EQ(rep.var_abs_err, 0.0);
    EXPECT_THROW(expected_reconstruction_metrics(img, {1}, pixel_noise(0.0), 1), InvalidArgument);
}

TEST(ExpectedMetricsTest, NoiseOnlyHalfNormalMae) {
    const double tau = 0.02;
    const auto rep = expected_reconstruction_metrics(GrayImage(48, 48, 0.5), {1}, pixel_noise(tau), 200);
    const double expected = tau * std::sqrt(2.0 / std::numbers::pi);
    EXPECT_NEAR(expected, 0.01596, 5e-6);
    EXPECT_LE(std::abs(rep.mae - expected), 3.0 * rep.expected->mae_std_error);
    // Without reconstruction the pooled and the across-trial variances coincide: tau^2 (1 - 2/pi).
    const double half_normal_var = tau * tau * (1.0 - 2.0 / std::numbers::pi);
    EXPECT_NEAR(rep.var_abs_err, half_normal_var, 0.05 * half_normal_var);
    EXPECT_NEAR(rep.expected->var_abs_err_noise, half_normal_var, 0.05 * half_normal_var);
}

TEST(ExpectedMetricsTest, AcrossTrialVarianceFallsWithWindow) {
    const GrayImage img = synthetic_test_image();
    double prev = std::numeric_limits<double>::infinity();
    for (int w : {3, 7, 15}) {
        const auto rep = expected_reconstruction_metrics(img, {w}, pixel_noise(0.02), 10);
        EXPECT_LT(rep.expected->var_abs_err_noise, prev) << w;
        EXPECT_GE(rep.var_abs_err, 0.0);
        prev = rep.expected->var_abs_err_noise;
    }
}

TEST(ExpectedMetricsTest, BitwiseIndependentOfThreadCount) {
    const GrayImage img = synthetic_test_image(64);
    set_thread_count(1);
    const auto a = expected_reconstruction_metrics(img, {3}, pixel_noise(0.02), 37);
    set_thread_count(8);
    const auto b = expected_reconstruction_metrics(img, {3}, pixel_noise(0.02), 37);
    set_thread_count(0);
    EXPECT_EQ(a.psnr, b.psnr);
    EXPECT_EQ(a.ssim, b.ssim);
    EXPECT_EQ(a.mae, b.mae);
    EXPECT_EQ(a.var_abs_err, b.var_abs_err);
    EXPECT_EQ(a.expected->var_abs_err_noise, b.expected->var_abs_err_noise);
    EXPECT_EQ(a.expected->ssim_std_error, b.expected->ssim_std_error);
}

TEST(SyntheticImageTest, DeterministicAndInRange) {
    const GrayImage a = synthetic_test_image();
    const GrayImage b = synthetic_test_image();
    EXPECT_EQ(a.height, 256);
    EXPECT_EQ(a.width, 256);
    EXPECT_EQ(a.pixels, b.pixels);
    for (double v : a.pixels) {
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 1.0);
    }
}

}  // namespace
}  // namespace kantorovich
