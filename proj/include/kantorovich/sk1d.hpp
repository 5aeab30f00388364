#pragma once

#include <cstddef>
#include <vector>

#include "kantorovich/kernel.hpp"
#include "kantorovich/quadrature.hpp"

namespace kantorovich {

/// Closed interval [a, b] sampled at `grid_points` equispaced points
/// (both endpoints included).
struct Domain1D {
    double a = -3.0;
    double b = 3.0;
    int grid_points = 1000;

    void validate() const;
    double spacing() const { return (b - a) / (grid_points - 1); }
    double point(int i) const;
    std::vector<double> grid() const;
    double length() const { return b - a; }
};

/// Kantorovich means n * integral over [k/n, (k+1)/n) for k in [k_min, k_max].
struct CellMeans {
    int n = 1;
    long k_min = 0;
    long k_max = -1;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    bool contains(long k) const noexcept { return k >= k_min && k <= k_max; }
    double at(long k) const { return values[static_cast<std::size_t>(k - k_min)]; }
    double cell_left(long k) const { return static_cast<double>(k) / n; }
};

struct GridFunction1D {
    Domain1D domain;
    std::vector<double> samples;
};

/// Cell index range [first, last] of the cells that cover [a, b) at density n,
/// extended to the left so that a kernel with the given support has every
/// coefficient it needs on [a, b].
struct CellRange {
    long first;
    long last;
};
CellRange cell_cover(const Domain1D& domain, int n);
CellRange cell_cover(const Domain1D& domain, int n, const Kernel& kernel);

CellMeans compute_cell_means(const RealFunction& f, const Domain1D& domain, int n,
                             const Quadrature& q = {});
CellMeans compute_cell_means(const RealFunction& f, const Domain1D& domain, int n,
                             const Quadrature& q, const Kernel& kernel);

/// (S_n f)(x) = sum_k values[k] xi(n x - k). With `left_limit` the kernel is
/// evaluated as a left limit, which is how the right domain endpoint is handled.
double evaluate_sk(const CellMeans& means, const Kernel& kernel, double x, bool left_limit = false);

GridFunction1D apply_sk(const CellMeans& means, const Kernel& kernel, const Domain1D& domain);

GridFunction1D sample_function(const RealFunction& f, const Domain1D& domain);

GridFunction1D pointwise_error(const GridFunction1D& approx, const GridFunction1D& exact);

struct ErrorSummary {
    double max = 0.0;
    double min = 0.0;
    double mean_l1 = 0.0;        ///< trapezoidal integral divided by (b - a)
    double discrete_mean = 0.0;  ///< plain average over grid points
    double l1_total = 0.0;       ///< trapezoidal integral over [a, b]
};

ErrorSummary error_summary(const GridFunction1D& err);

}  // namespace kantorovich
