#pragma once

// Brute-force reference computations used only by the tests. None of these
// call the optimized code paths they are compared against.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kantorovich/image.hpp"
#include "kantorovich/kernel.hpp"
#include "kantorovich/noise.hpp"
#include "kantorovich/sk1d.hpp"

namespace kantorovich::oracle {

/// Midpoint rule with a very large number of panels.
template <typename F>
double refine_integral(F&& f, double a, double b, long panels = 1'000'000) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (long i = 0; i < panels; ++i) sum += f(a + (static_cast<double>(i) + 0.5) * h);
    return sum * h;
}

/// Box self-convolution evaluated by quadrature: M_m(x) = int_0^1 M_{m-1}(x - t) dt.
inline double bspline_by_convolution(int order, double x, long panels = 20'000) {
    if (order == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    return refine_integral([&](double t) { return bspline_by_convolution(order - 1, x - t, panels / 10 + 10); },
                           0.0, 1.0, panels);
}

/// S_n f on a grid by summing over every cell in the cover, no support pruning.
inline std::vector<double> naive_sk(const CellMeans& means, const Kernel& kernel, const std::vector<double>& xs,
                                    bool last_is_right_endpoint = true) {
    std::vector<double> out(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const bool left = last_is_right_endpoint && i + 1 == xs.size();
        for (long k = means.k_min; k <= means.k_max; ++k) {
            const double arg = means.n * xs[i] - static_cast<double>(k);
            const double w = left ? kernel.evaluate_left_limit(arg) : kernel.evaluate(arg);
            out[i] += means.values[static_cast<std::size_t>(k - means.k_min)] * w;
        }
    }
    return out;
}

inline std::uint64_t zigzag(long k) {
    const auto v = static_cast<std::int64_t>(k);
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

/// Per-pixel block average: each output pixel recomputes its own block sum.
inline GrayImage naive_block_average(const GrayImage& img, int w) {
    GrayImage out(img.height, img.width);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) {
            const int r0 = (r / w) * w, c0 = (c / w) * w;
            double sum = 0.0;
            int count = 0;
            for (int rr = r0; rr < std::min(r0 + w, img.height); ++rr)
                for (int cc = c0; cc < std::min(c0 + w, img.width); ++cc) {
                    sum += img.at(rr, cc);
                    ++count;
                }
            out.at(r, c) = sum / count;
        }
    return out;
}

inline GrayImage random_image(int h, int w, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GrayImage img(h, w);
    for (auto& p : img.pixels) p = u(rng);
    return img;
}

/// Integral of |h| for a function given by its right limits at nodes[i] and
/// its left limits at nodes[i + 1], linear in between. Exact for piecewise
/// linear functions (including steps) whose knots sit on nodes.
inline double one_sided_l1(const std::vector<double>& nodes, const std::vector<double>& right_limits,
                           const std::vector<double>& left_limits) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double p = right_limits[i], q = left_limits[i + 1], d = nodes[i + 1] - nodes[i];
        if ((p >= 0.0) == (q >= 0.0) || p == 0.0 || q == 0.0)
            total += 0.5 * (std::abs(p) + std::abs(q)) * d;
        else
            total += 0.5 * (p * p + q * q) / (std::abs(p) + std::abs(q)) * d;
    }
    return total;
}

/// L1 norm of S_n over the whole real line. Coefficients outside the cover
/// count as zero; the grid has `per_cell` nodes per cell so every cell
/// boundary (and kernel knot) is a node.
inline double sk_l1_norm(const CellMeans& means, const Kernel& kernel, int per_cell) {
    const double step = 1.0 / (static_cast<double>(means.n) * per_cell);
    const long first = means.k_min * per_cell;
    const long last = (means.k_max + 1 + static_cast<long>(std::ceil(kernel.support_radius()))) * per_cell;
    auto value = [&](double x, bool left) {
        double sum = 0.0;
        for (long k = means.k_min; k <= means.k_max; ++k) {
            const double arg = means.n * x - static_cast<double>(k);
            sum += means.values[static_cast<std::size_t>(k - means.k_min)] *
                   (left ? kernel.evaluate_left_limit(arg) : kernel.evaluate(arg));
        }
        return sum;
    };
    std::vector<double> nodes, right, left;
    for (long j = first; j <= last; ++j) {
        const double x = static_cast<double>(j) * step;
        nodes.push_back(x);
        right.push_back(value(x, false));
        left.push_back(value(x, true));
    }
    return one_sided_l1(nodes, right, left);
}

}  // namespace kantorovich::oracle
