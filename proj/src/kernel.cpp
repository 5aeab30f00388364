#include "kantorovich/kernel.hpp"

#include <cmath>
#include <string>

#include "kantorovich/error.hpp"

namespace kantorovich {
namespace {

constexpr int kMaxBSplineOrder = 8;

// Cardinal B-spline of order m on [0, m) via the Cox-de Boor recurrence.
double cardinal_bspline(int m, double x) {
    if (m == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    if (x <= 0.0 || x >= m) return 0.0;
    return (x * cardinal_bspline(m - 1, x) + (m - x) * cardinal_bspline(m - 1, x - 1.0)) / (m - 1);
}

}  // namespace

Kernel::Kernel(KernelFamily family, int order) : family_(family), order_(order) {
    support_radius_ = static_cast<double>(order);
    l1_norm_ = 1.0;
    sup_norm_ = family == KernelFamily::Box ? 1.0 : cardinal_bspline(order, 0.5 * order);
    // Tight for the box on [0,1); a valid bound for the B-splines.
    decay_ = {sup_norm_ * std::pow(1.0 + support_radius_, 2.0), 1.0};
}

Kernel Kernel::box() { return Kernel(KernelFamily::Box, 1); }

Kernel Kernel::bspline(int order) {
    if (order < 1 || order > kMaxBSplineOrder)
        throw InvalidArgument("B-spline order must be in [1, " + std::to_string(kMaxBSplineOrder) + "]");
    if (order == 1) return box();
    return Kernel(KernelFamily::BSpline, order);
}

Kernel Kernel::parse(std::string_view name) {
    if (name == "box") return box();
    constexpr std::string_view prefix = "bspline";
    if (name.substr(0, prefix.size()) == prefix && name.size() == prefix.size() + 1) {
        const char digit = name.back();
        if (digit >= '1' && digit <= '9') return bspline(digit - '0');
    }
    throw InvalidArgument("unknown kernel '" + std::string(name) + "'");
}

Kernel Kernel::scaled(double factor) const {
    Kernel k = *this;
    const double a = std::abs(factor);
    k.scale_ *= factor;
    k.l1_norm_ *= a;
    k.sup_norm_ *= a;
    k.decay_.L *= a;
    return k;
}

Kernel Kernel::with_decay_bound(DecayBound bound) const {
    if (!(bound.L > 0.0) || !(bound.delta > 0.0)) throw InvalidArgument("decay bound needs L > 0, delta > 0");
    Kernel k = *this;
    k.decay_ = bound;
    return k;
}

double Kernel::evaluate(double x) const {
    if (family_ == KernelFamily::Box) return (x >= 0.0 && x < 1.0) ? scale_ : 0.0;
    return scale_ * cardinal_bspline(order_, x);
}

double Kernel::evaluate_left_limit(double x) const {
    if (family_ == KernelFamily::Box) return (x > 0.0 && x <= 1.0) ? scale_ : 0.0;
    return evaluate(x);  // continuous for order >= 2
}

std::string Kernel::name() const {
    if (family_ == KernelFamily::Box) return "box";
    return "bspline" + std::to_string(order_);
}

PartitionReport check_partition_of_unity(const Kernel& kernel, std::span<const double> sample_points,
                                         double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    const double reach = kernel.support_radius() + 1.0;
    PartitionReport report;
    for (double x : sample_points) {
        if (!std::isfinite(x)) throw InvalidArgument("sample points must be finite");
        double sum = 0.0;
        for (auto k = static_cast<long>(std::ceil(x - reach)); k <= static_cast<long>(std::floor(x + reach)); ++k)
            sum += kernel.evaluate(x - static_cast<double>(k));
        report.max_deviation = std::max(report.max_deviation, std::abs(sum - 1.0));
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

bool check_decay(const Kernel& kernel, std::span<const double> probe_points) {
    const auto [L, delta] = kernel.decay_bound();
    for (double x : probe_points) {
        const double bound = L * std::pow(1.0 + std::abs(x), -1.0 - delta);
        if (std::abs(kernel.evaluate(x)) > bound) return false;
    }
    return true;
}

}  // namespace kantorovich
