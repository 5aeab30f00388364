#include "kantorovich/sk1d.hpp"

#include <algorithm>
#include <cmath>

#include "kantorovich/error.hpp"

namespace kantorovich {

void Domain1D::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) throw InvalidArgument("domain requires finite a < b");
    if (grid_points < 2) throw InvalidArgument("domain requires at least 2 grid points");
}

double Domain1D::point(int i) const {
    if (i == grid_points - 1) return b;
    return a + i * spacing();
}

std::vector<double> Domain1D::grid() const {
    std::vector<double> xs(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) xs[static_cast<std::size_t>(i)] = point(i);
    return xs;
}

CellRange cell_cover(const Domain1D& domain, int n) {
    domain.validate();
    if (n < 1) throw InvalidArgument("sampling density n must be >= 1");
    const auto first = static_cast<long>(std::floor(n * domain.a));
    const auto last = static_cast<long>(std::ceil(n * domain.b)) - 1;
    return {first, std::max(first, last)};
}

CellRange cell_cover(const Domain1D& domain, int n, const Kernel& kernel) {
    CellRange range = cell_cover(domain, n);
    range.first -= static_cast<long>(std::ceil(kernel.support_radius())) - 1;
    return range;
}

namespace {

CellMeans means_over(const RealFunction& f, CellRange range, int n, const Quadrature& q) {
    CellMeans means;
    means.n = n;
    means.k_min = range.first;
    means.k_max = range.last;
    means.values.reserve(static_cast<std::size_t>(range.last - range.first + 1));
    for (long k = range.first; k <= range.last; ++k) means.values.push_back(cell_mean(f, k, n, q));
    return means;
}

}  // namespace

CellMeans compute_cell_means(const RealFunction& f, const Domain1D& domain, int n, const Quadrature& q) {
    return means_over(f, cell_cover(domain, n), n, q);
}

CellMeans compute_cell_means(const RealFunction& f, const Domain1D& domain, int n, const Quadrature& q,
                             const Kernel& kernel) {
    return means_over(f, cell_cover(domain, n, kernel), n, q);
}

double evaluate_sk(const CellMeans& means, const Kernel& kernel, double x, bool left_limit) {
    const double t = means.n * x;
    const auto k_lo = static_cast<long>(std::floor(t - kernel.support_radius()));
    const auto k_hi = static_cast<long>(std::floor(t));
    double sum = 0.0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double arg = t - static_cast<double>(k);
        const double weight = left_limit ? kernel.evaluate_left_limit(arg) : kernel.evaluate(arg);
        if (weight == 0.0) continue;
        if (!means.contains(k)) throw CoverageError();
        sum += means.at(k) * weight;
    }
    return sum;
}

GridFunction1D apply_sk(const CellMeans& means, const Kernel& kernel, const Domain1D& domain) {
    domain.validate();
    if (means.values.empty()) throw InvalidArgument("cell means are empty");
    GridFunction1D out{domain, std::vector<double>(static_cast<std::size_t>(domain.grid_points))};
    const int last = domain.grid_points - 1;
    for (int i = 0; i <= last; ++i)
        out.samples[static_cast<std::size_t>(i)] = evaluate_sk(means, kernel, domain.point(i), i == last);
    return out;
}

GridFunction1D sample_function(const RealFunction& f, const Domain1D& domain) {
    domain.validate();
    GridFunction1D out{domain, std::vector<double>(static_cast<std::size_t>(domain.grid_points))};
    for (int i = 0; i < domain.grid_points; ++i) {
        const double v = f(domain.point(i));
        if (!std::isfinite(v)) throw NonFiniteIntegrand();
        out.samples[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

GridFunction1D pointwise_error(const GridFunction1D& approx, const GridFunction1D& exact) {
    const auto& da = approx.domain;
    const auto& de = exact.domain;
    if (da.a != de.a || da.b != de.b || da.grid_points != de.grid_points ||
        approx.samples.size() != exact.samples.size())
        throw ShapeMismatch("pointwise_error: domains differ");
    GridFunction1D err{da, std::vector<double>(approx.samples.size())};
    for (std::size_t i = 0; i < err.samples.size(); ++i)
        err.samples[i] = std::abs(approx.samples[i] - exact.samples[i]);
    return err;
}

ErrorSummary error_summary(const GridFunction1D& err) {
    const auto& s = err.samples;
    if (s.empty()) throw InvalidArgument("error_summary: empty error function");
    ErrorSummary out;
    out.max = *std::max_element(s.begin(), s.end());
    out.min = *std::min_element(s.begin(), s.end());
    double sum = 0.0;
    for (double v : s) sum += v;
    out.discrete_mean = sum / static_cast<double>(s.size());
    double trap = 0.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) trap += 0.5 * (s[i] + s[i + 1]);
    out.l1_total = trap * err.domain.spacing();
    out.mean_l1 = out.l1_total / err.domain.length();
    return out;
}

}  // namespace kantorovich
