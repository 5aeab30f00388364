#include "kantorovich/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "kantorovich/error.hpp"
#include "kantorovich/image.hpp"

namespace kantorovich {
namespace {

void require_same_shape(const GrayImage& f, const GrayImage& g) {
    if (f.height != g.height || f.width != g.width || f.size() != g.size())
        throw ShapeMismatch("images differ in shape: " + std::to_string(f.height) + "x" +
                            std::to_string(f.width) + " vs " + std::to_string(g.height) + "x" +
                            std::to_string(g.width));
}

std::vector<double> window_weights(const SsimConfig& cfg) {
    const int side = cfg.side();
    std::vector<double> w(static_cast<std::size_t>(side));
    if (cfg.window == SsimWindow::Uniform) {
        for (auto& v : w) v = 1.0 / side;
        return w;
    }
    const double centre = 0.5 * (side - 1);
    double total = 0.0;
    for (int i = 0; i < side; ++i) {
        const double d = i - centre;
        w[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * cfg.sigma * cfg.sigma));
        total += w[static_cast<std::size_t>(i)];
    }
    for (auto& v : w) v /= total;
    return w;
}

// 'valid' separable correlation: rows first, then columns.
std::vector<double> filter_valid(const std::vector<double>& src, int h, int w, const std::vector<double>& k) {
    const int s = static_cast<int>(k.size());
    const int ow = w - s + 1;
    const int oh = h - s + 1;
    std::vector<double> tmp(static_cast<std::size_t>(h) * ow);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < ow; ++c) {
            double acc = 0.0;
            for (int i = 0; i < s; ++i) acc += k[i] * src[static_cast<std::size_t>(r) * w + c + i];
            tmp[static_cast<std::size_t>(r) * ow + c] = acc;
        }
    std::vector<double> out(static_cast<std::size_t>(oh) * ow);
    for (int r = 0; r < oh; ++r)
        for (int c = 0; c < ow; ++c) {
            double acc = 0.0;
            for (int i = 0; i < s; ++i) acc += k[i] * tmp[static_cast<std::size_t>(r + i) * ow + c];
            out[static_cast<std::size_t>(r) * ow + c] = acc;
        }
    return out;
}

double ssim_formula(double mx, double my, double vx, double vy, double cxy, double c1, double c2) {
    return ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
}

}  // namespace

SsimConfig SsimConfig::parse(std::string_view window_name, double peak) {
    if (!(peak > 0.0)) throw InvalidArgument("peak must be positive");
    SsimConfig cfg;
    cfg.peak = peak;
    if (window_name == "gauss11") {
        cfg.window = SsimWindow::Gaussian11;
    } else if (window_name == "uniform8") {
        cfg.window = SsimWindow::Uniform;
        cfg.uniform_side = 8;
    } else {
        throw InvalidArgument("unknown SSIM window '" + std::string(window_name) + "'");
    }
    return cfg;
}

double mae(const GrayImage& f, const GrayImage& g) {
    require_same_shape(f, g);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += std::abs(f.pixels[i] - g.pixels[i]);
    return sum / static_cast<double>(f.size());
}

double mse(const GrayImage& f, const GrayImage& g) {
    require_same_shape(f, g);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = f.pixels[i] - g.pixels[i];
        sum += d * d;
    }
    return sum / static_cast<double>(f.size());
}

double psnr_from_mse(double mse_value, double peak) {
    if (!(peak > 0.0)) throw InvalidArgument("peak must be positive");
    if (mse_value == 0.0) return kInfinitePsnr;
    return 10.0 * std::log10(peak * peak / mse_value);
}

double psnr(const GrayImage& f, const GrayImage& g, double peak) { return psnr_from_mse(mse(f, g), peak); }

double ssim(const GrayImage& f, const GrayImage& g, const SsimConfig& cfg) {
    require_same_shape(f, g);
    const int side = cfg.side();
    if (side < 1 || f.height < side || f.width < side)
        throw InvalidArgument("image smaller than SSIM window");
    const auto k = window_weights(cfg);
    const int h = f.height;
    const int w = f.width;
    const std::size_t n = f.size();
    std::vector<double> xx(n), yy(n), xy(n);
    for (std::size_t i = 0; i < n; ++i) {
        xx[i] = f.pixels[i] * f.pixels[i];
        yy[i] = g.pixels[i] * g.pixels[i];
        xy[i] = f.pixels[i] * g.pixels[i];
    }
    const auto mu_x = filter_valid(f.pixels, h, w, k);
    const auto mu_y = filter_valid(g.pixels, h, w, k);
    const auto e_xx = filter_valid(xx, h, w, k);
    const auto e_yy = filter_valid(yy, h, w, k);
    const auto e_xy = filter_valid(xy, h, w, k);
    const double c1 = cfg.c1();
    const double c2 = cfg.c2();
    double total = 0.0;
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
        const double mx = mu_x[i];
        const double my = mu_y[i];
        total += ssim_formula(mx, my, e_xx[i] - mx * mx, e_yy[i] - my * my, e_xy[i] - mx * my, c1, c2);
    }
    return total / static_cast<double>(mu_x.size());
}

double ssim_global(const GrayImage& f, const GrayImage& g, const SsimConfig& cfg) {
    require_same_shape(f, g);
    if (f.size() == 0) throw InvalidArgument("empty image");
    const auto n = static_cast<double>(f.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.pixels[i];
        const double y = g.pixels[i];
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double mx = sx / n;
    const double my = sy / n;
    return ssim_formula(mx, my, sxx / n - mx * mx, syy / n - my * my, sxy / n - mx * my, cfg.c1(), cfg.c2());
}

double variance_abs_error(std::span<const double> abs_errors) {
    if (abs_errors.empty()) throw InvalidArgument("variance of an empty sample");
    const auto n = static_cast<double>(abs_errors.size());
    const double base = abs_errors.front();
    double sum = 0.0;
    for (double v : abs_errors) sum += v - base;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : abs_errors) ss += (v - base - mean) * (v - base - mean);
    return ss / n;
}

MonteCarloEstimate expected_metric(std::span<const double> per_trial_values) {
    if (per_trial_values.size() < 2) throw InvalidArgument("expected metric needs at least 2 trials");
    for (double v : per_trial_values)
        if (std::isinf(v)) throw DegenerateTrial();
    return summarize_trials(per_trial_values);
}

}  // namespace kantorovich
