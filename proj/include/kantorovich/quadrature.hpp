#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace kantorovich {

using RealFunction = std::function<double(double)>;

enum class QuadratureScheme { Midpoint, Simpson };

struct Quadrature {
    QuadratureScheme scheme = QuadratureScheme::Simpson;
    int panels_per_cell = 8;

    static Quadrature parse(std::string_view scheme, int panels);
};

/// Nodes and weights of the composite rule on [a, b], in ascending node order.
/// Simpson uses one three-point rule per panel, so 2*panels+1 nodes.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule quadrature_rule(double a, double b, const Quadrature& q);
std::size_t nodes_per_interval(const Quadrature& q);

/// Weighted sum over precomputed integrand values at the rule's nodes.
double apply_rule(const QuadratureRule& rule, const std::vector<double>& values);
/// Weighted average of the values (integral over the rule's interval divided
/// by its length), accumulated relative to the first value so constants come
/// back unchanged.
double rule_mean(const QuadratureRule& rule, const std::vector<double>& values);

double integrate(const RealFunction& f, double a, double b, const Quadrature& q);

/// n * integral of f over [k/n, (k+1)/n).
double cell_mean(const RealFunction& f, long k, int n, const Quadrature& q);

}  // namespace kantorovich
