#include "kantorovich/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kantorovich/error.hpp"
#include "kantorovich/parallel.hpp"

namespace kantorovich {

GrayImage::GrayImage(int h, int w, double fill)
    : height(h), width(w), pixels(static_cast<std::size_t>(std::max(h, 0)) * std::max(w, 0), fill) {
    if (h < 1 || w < 1) throw InvalidArgument("image dimensions must be positive");
}

GrayImage::GrayImage(int h, int w, std::vector<double> values) : height(h), width(w), pixels(std::move(values)) {
    validate();
}

void GrayImage::validate() const {
    if (height < 1 || width < 1) throw InvalidArgument("image dimensions must be positive");
    if (pixels.size() != static_cast<std::size_t>(height) * width)
        throw ShapeMismatch("pixel count does not match " + std::to_string(height) + "x" + std::to_string(width));
    for (double v : pixels)
        if (!std::isfinite(v)) throw InvalidArgument("image contains non-finite pixels");
}

void WindowSpec::validate_for(int height, int width) const {
    if (w < 1 || w > std::min(height, width))
        throw InvalidArgument("window " + std::to_string(w) + " outside [1, min(H, W)]");
}

BlockCoefficients block_means(const GrayImage& img, WindowSpec win) {
    win.validate_for(img.height, img.width);
    BlockCoefficients out;
    out.height = img.height;
    out.width = img.width;
    out.window = win.w;
    out.block_rows = (img.height + win.w - 1) / win.w;
    out.block_cols = (img.width + win.w - 1) / win.w;
    out.values.resize(static_cast<std::size_t>(out.block_rows) * out.block_cols);
    for (int br = 0; br < out.block_rows; ++br) {
        const int r0 = br * win.w;
        const int r1 = std::min(r0 + win.w, img.height);
        for (int bc = 0; bc < out.block_cols; ++bc) {
            const int c0 = bc * win.w;
            const int c1 = std::min(c0 + win.w, img.width);
            double sum = 0.0;
            for (int r = r0; r < r1; ++r)
                for (int c = c0; c < c1; ++c) sum += img.at(r, c);
            out.values[static_cast<std::size_t>(br) * out.block_cols + bc] =
                sum / static_cast<double>((r1 - r0) * (c1 - c0));
        }
    }
    return out;
}

GrayImage reconstruct_sk(const BlockCoefficients& coeffs, WindowSpec win, int height, int width) {
    if (coeffs.window != win.w || coeffs.height != height || coeffs.width != width ||
        coeffs.block_rows != (height + win.w - 1) / win.w || coeffs.block_cols != (width + win.w - 1) / win.w ||
        coeffs.values.size() != static_cast<std::size_t>(coeffs.block_rows) * coeffs.block_cols)
        throw ShapeMismatch("coefficients were not produced for this image shape and window");
    GrayImage out(height, width);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) out.at(r, c) = coeffs.at(r / win.w, c / win.w);
    return out;
}

GrayImage apply_sk_image(const GrayImage& img, WindowSpec win) {
    return reconstruct_sk(block_means(img, win), win, img.height, img.width);
}

GrayImage add_pixel_noise(const GrayImage& img, const NoiseModel& noise, const TrialContext& trial) {
    noise.validate();
    const NoiseStream stream = trial.stream(noise);
    GrayImage out = img;
    for (std::size_t i = 0; i < out.size(); ++i) out.pixels[i] += noise.std * stream.standard_normal(i);
    return out;
}

GrayImage apply_psk_image(const GrayImage& img, WindowSpec win, const NoiseModel& noise,
                          const TrialContext& trial) {
    if (noise.placement != NoisePlacement::PerSample)
        throw InvalidArgument("image pipeline perturbs pixels; use per-sample placement");
    return apply_sk_image(add_pixel_noise(img, noise, trial), win);
}

MetricsReport reconstruction_metrics(const GrayImage& original, const GrayImage& reconstructed,
                                     const SsimConfig& cfg) {
    MetricsReport rep;
    rep.mae = mae(original, reconstructed);
    rep.mse = mse(original, reconstructed);
    rep.psnr = psnr_from_mse(rep.mse, cfg.peak);
    rep.ssim = ssim(original, reconstructed, cfg);
    std::vector<double> abs_err(original.size());
    for (std::size_t i = 0; i < abs_err.size(); ++i)
        abs_err[i] = std::abs(reconstructed.pixels[i] - original.pixels[i]);
    rep.var_abs_err = variance_abs_error(abs_err);
    return rep;
}

MetricsReport expected_reconstruction_metrics(const GrayImage& img, WindowSpec win, const NoiseModel& noise,
                                              int trials, const SsimConfig& cfg) {
    if (trials < 2) throw InvalidArgument("expected metrics need at least 2 trials");
    win.validate_for(img.height, img.width);
    const std::size_t pixels = img.size();
    const auto count = static_cast<std::size_t>(trials);

    struct Trial {
        double mae, mse, psnr, ssim, sum_abs, sum_sq;
        std::vector<double> abs_err;
    };
    std::vector<double> mae_v(count), mse_v(count), psnr_v(count), ssim_v(count);
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    // Welford accumulators per pixel, updated in trial order.
    std::vector<double> mean(pixels, 0.0), m2(pixels, 0.0);

    constexpr std::size_t kBatch = 16;
    std::vector<Trial> batch(kBatch);
    for (std::size_t start = 0; start < count; start += kBatch) {
        const std::size_t len = std::min(kBatch, count - start);
        parallel_for(len, [&](std::size_t j) {
            const TrialContext ctx{start + j};
            const GrayImage recon = apply_psk_image(img, win, noise, ctx);
            Trial& t = batch[j];
            t.abs_err.resize(pixels);
            t.sum_abs = 0.0;
            t.sum_sq = 0.0;
            for (std::size_t p = 0; p < pixels; ++p) {
                const double e = std::abs(recon.pixels[p] - img.pixels[p]);
                t.abs_err[p] = e;
                t.sum_abs += e;
                t.sum_sq += e * e;
            }
            t.mae = t.sum_abs / static_cast<double>(pixels);
            t.mse = t.sum_sq / static_cast<double>(pixels);
            t.psnr = psnr_from_mse(t.mse, cfg.peak);
            t.ssim = ssim(img, recon, cfg);
        });
        for (std::size_t j = 0; j < len; ++j) {
            const Trial& t = batch[j];
            const std::size_t idx = start + j;
            mae_v[idx] = t.mae;
            mse_v[idx] = t.mse;
            psnr_v[idx] = t.psnr;
            ssim_v[idx] = t.ssim;
            sum_abs += t.sum_abs;
            sum_sq += t.sum_sq;
            const double k = static_cast<double>(idx + 1);
            for (std::size_t p = 0; p < pixels; ++p) {
                const double delta = t.abs_err[p] - mean[p];
                mean[p] += delta / k;
                m2[p] += delta * (t.abs_err[p] - mean[p]);
            }
        }
    }

    MetricsReport rep;
    ExpectedBlock block;
    block.trials = trials;
    const auto mae_est = expected_metric(mae_v);
    const auto mse_est = expected_metric(mse_v);
    const auto ssim_est = expected_metric(ssim_v);
    rep.mae = mae_est.mean;
    rep.mse = mse_est.mean;
    rep.ssim = ssim_est.mean;
    block.mae_std_error = mae_est.std_error;
    block.mse_std_error = mse_est.std_error;
    block.ssim_std_error = ssim_est.std_error;
    if (std::all_of(psnr_v.begin(), psnr_v.end(), [](double v) { return std::isinf(v); })) {
        rep.psnr = kInfinitePsnr;
        block.psnr_std_error = 0.0;
    } else {
        const auto psnr_est = expected_metric(psnr_v);
        rep.psnr = psnr_est.mean;
        block.psnr_std_error = psnr_est.std_error;
    }
    const double total = static_cast<double>(pixels) * static_cast<double>(count);
    const double m1 = sum_abs / total;
    rep.var_abs_err = std::max(0.0, sum_sq / total - m1 * m1);
    double noise_var = 0.0;
    for (std::size_t p = 0; p < pixels; ++p) noise_var += m2[p] / static_cast<double>(count);
    block.var_abs_err_noise = noise_var / static_cast<double>(pixels);
    rep.expected = block;
    return rep;
}

GrayImage synthetic_test_image(int size) {
    if (size < 16) throw InvalidArgument("synthetic image size must be >= 16");
    GrayImage img(size, size);
    const double s = size / 256.0;
    auto inside = [s](int v, int lo, int hi) { return v >= lo * s && v < hi * s; };
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            double v = 0.2 + 0.3 * (static_cast<double>(c) / (size - 1)) + 0.15 * std::sin(r / (40.0 * s));
            if (inside(r, 60, 140) && inside(c, 90, 200)) v = 0.85;
            if (inside(r, 160, 240) && inside(c, 30, 110)) v = 0.5 + 0.25 * std::sin(1.3 * r) * std::cos(1.7 * c);
            img.at(r, c) = std::clamp(v, 0.0, 1.0);
        }
    }
    return img;
}

}  // namespace kantorovich
