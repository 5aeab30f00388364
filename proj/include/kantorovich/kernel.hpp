#pragma once

#include <span>
#include <string>
#include <string_view>

namespace kantorovich {

enum class KernelFamily { Box, BSpline };

/// Constants (L, delta) of the decay estimate |xi(x)| <= L (1 + |x|)^(-1-delta).
struct DecayBound {
    double L = 1.0;
    double delta = 1.0;
};

/// Compactly supported 1D sampling kernel.
///
/// Box is the indicator of [0, 1). BSpline(m) is the m-fold self-convolution
/// of the box, supported on [0, m). Both families are non-negative with unit
/// integral and satisfy the unit summation property exactly.
class Kernel {
public:
    static Kernel box();
    static Kernel bspline(int order);
    /// Parses "box", "bspline2", "bspline3", ... (the CLI spelling).
    static Kernel parse(std::string_view name);

    /// Returns a copy whose values are multiplied by `factor`. Used to build
    /// kernels that deliberately violate unit summation.
    Kernel scaled(double factor) const;
    Kernel with_decay_bound(DecayBound bound) const;

    double operator()(double x) const { return evaluate(x); }
    double evaluate(double x) const;
    /// lim_{t -> x-} xi(t). Differs from evaluate() only at jumps of the box.
    double evaluate_left_limit(double x) const;

    KernelFamily family() const noexcept { return family_; }
    int order() const noexcept { return order_; }
    double support_radius() const noexcept { return support_radius_; }
    double l1_norm() const noexcept { return l1_norm_; }
    double sup_norm() const noexcept { return sup_norm_; }
    DecayBound decay_bound() const noexcept { return decay_; }
    std::string name() const;

private:
    Kernel(KernelFamily family, int order);

    KernelFamily family_;
    int order_;
    double scale_ = 1.0;
    double support_radius_;
    double l1_norm_;
    double sup_norm_;
    DecayBound decay_;
};

struct PartitionReport {
    double max_deviation = 0.0;
    bool pass = false;
};

/// max_x |sum_k xi(x - k) - 1| over `sample_points`.
PartitionReport check_partition_of_unity(const Kernel& kernel, std::span<const double> sample_points,
                                         double tol);

bool check_decay(const Kernel& kernel, std::span<const double> probe_points);

}  // namespace kantorovich
