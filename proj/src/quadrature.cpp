#include "kantorovich/quadrature.hpp"

#include <cmath>
#include <string>

#include "kantorovich/error.hpp"

namespace kantorovich {

Quadrature Quadrature::parse(std::string_view scheme, int panels) {
    if (panels < 1) throw InvalidArgument("panels per cell must be >= 1");
    if (scheme == "midpoint") return {QuadratureScheme::Midpoint, panels};
    if (scheme == "simpson") return {QuadratureScheme::Simpson, panels};
    throw InvalidArgument("unknown quadrature '" + std::string(scheme) + "'");
}

std::size_t nodes_per_interval(const Quadrature& q) {
    const auto p = static_cast<std::size_t>(q.panels_per_cell);
    return q.scheme == QuadratureScheme::Midpoint ? p : 2 * p + 1;
}

QuadratureRule quadrature_rule(double a, double b, const Quadrature& q) {
    if (!(a < b)) throw InvalidArgument("integration bounds must satisfy a < b");
    if (q.panels_per_cell < 1) throw InvalidArgument("panels per cell must be >= 1");
    const int p = q.panels_per_cell;
    const double width = b - a;
    QuadratureRule rule;
    if (q.scheme == QuadratureScheme::Midpoint) {
        const double h = width / p;
        rule.nodes.reserve(p);
        for (int i = 0; i < p; ++i) {
            rule.nodes.push_back(a + (i + 0.5) * h);
            rule.weights.push_back(h);
        }
        return rule;
    }
    // Composite Simpson on 2p subintervals: weights h/3 * (1, 4, 2, 4, ..., 4, 1).
    const int m = 2 * p;
    const double h = width / m;
    rule.nodes.reserve(m + 1);
    for (int i = 0; i <= m; ++i) {
        rule.nodes.push_back(i == m ? b : a + i * h);
        const double c = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        rule.weights.push_back(c * h / 3.0);
    }
    return rule;
}

double apply_rule(const QuadratureRule& rule, const std::vector<double>& values) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (!std::isfinite(values[i])) throw NonFiniteIntegrand();
        sum += rule.weights[i] * values[i];
    }
    return sum;
}

double rule_mean(const QuadratureRule& rule, const std::vector<double>& values) {
    const double base = values.front();
    double total = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (!std::isfinite(values[i])) throw NonFiniteIntegrand();
        total += rule.weights[i];
        sum += rule.weights[i] * (values[i] - base);
    }
    return base + sum / total;
}

double integrate(const RealFunction& f, double a, double b, const Quadrature& q) {
    const QuadratureRule rule = quadrature_rule(a, b, q);
    std::vector<double> values;
    values.reserve(rule.nodes.size());
    for (double x : rule.nodes) values.push_back(f(x));
    return apply_rule(rule, values);
}

double cell_mean(const RealFunction& f, long k, int n, const Quadrature& q) {
    if (n < 1) throw InvalidArgument("sampling density n must be >= 1");
    const double left = static_cast<double>(k) / n;
    const double right = static_cast<double>(k + 1) / n;
    const QuadratureRule rule = quadrature_rule(left, right, q);
    std::vector<double> values;
    values.reserve(rule.nodes.size());
    for (double x : rule.nodes) values.push_back(f(x));
    return rule_mean(rule, values);
}

}  // namespace kantorovich
